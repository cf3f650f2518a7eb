#include "lrg/poly.hpp"

#include <algorithm>

namespace lrg {

Scalar Poly::coeff_of(const Monomial& m, const FieldCtx& ctx) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return ctx.zero();
}

Poly Poly::shifted(const Monomial& s) const {
  Poly r(*this);
  for (auto& t : r.terms_) t.mono = t.mono * s;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Poly Poly::from_terms(FieldCtx& ctx, const Ordering& ord, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [&](const Term& a, const Term& b) { return ord.less(b.mono, a.mono); });
  Poly p;
  for (auto& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff = ctx.add(p.terms_.back().coeff, t.coeff);
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [&](const Term& t) { return ctx.is_zero(t.coeff); });
  return p;
}

Poly PolyOps::add_scaled(const Poly& f, const Scalar& c, const Poly& g) const {
  Poly r;
  std::size_t i = 0, j = 0;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size() ||
        (i < f.terms_.size() && ord_.less(g.terms_[j].mono, f.terms_[i].mono))) {
      r.terms_.push_back(f.terms_[i++]);
    } else if (i == f.terms_.size() || ord_.less(f.terms_[i].mono, g.terms_[j].mono)) {
      r.terms_.push_back({g.terms_[j].mono, ctx_.mul(c, g.terms_[j].coeff)});
      ++j;
    } else {
      Scalar v = ctx_.add(f.terms_[i].coeff, ctx_.mul(c, g.terms_[j].coeff));
      if (!ctx_.is_zero(v)) r.terms_.push_back({f.terms_[i].mono, v});
      ++i, ++j;
    }
  }
  std::erase_if(r.terms_, [&](const Term& t) { return ctx_.is_zero(t.coeff); });
  return r;
}

Poly PolyOps::scale(const Poly& f, const Scalar& c) const {
  Poly r;
  if (ctx_.is_zero(c)) return r;
  r = f;
  for (auto& t : r.terms_) t.coeff = ctx_.mul(t.coeff, c);
  return r;
}

Poly PolyOps::divide(const Poly& f, const Scalar& e) const {
  Poly r = f;
  for (auto& t : r.terms_) t.coeff = ctx_.div(t.coeff, e);
  return r;
}

Poly PolyOps::make_monic(const Poly& f) const {
  if (f.is_zero() || ctx_.is_one(f.lc())) return f;
  return divide(f, f.lc());
}

std::string PolyOps::render(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = ctx_.to_string(t.coeff);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) s += '-';
      first = false;
    } else {
      s += neg ? '-' : '+';
    }
    std::string m = ord_.render(t.mono);
    if (m == "1")
      s += c;
    else if (c == "1")
      s += m;
    else
      s += c + "*" + m;
  }
  return s;
}

Poly PolyOps::parse(const std::string& text) const {
  // split into signed summands at top level, then parse coeff and monomial
  std::vector<Term> ts;
  std::string cur;
  std::vector<std::pair<int, std::string>> parts;
  int sign = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (isspace(static_cast<unsigned char>(ch))) continue;
    if ((ch == '+' || ch == '-') && !cur.empty()) {
      parts.push_back({sign, cur});
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else if ((ch == '+' || ch == '-') && cur.empty()) {
      sign = ch == '-' ? -sign : sign;
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) parts.push_back({sign, cur});
  for (auto& [sg, part] : parts) {
    std::string coeff_text;
    std::string mono_text;
    std::vector<std::string> factors;
    std::string f;
    for (char ch : part) {
      if (ch == '*') {
        factors.push_back(f);
        f.clear();
      } else {
        f.push_back(ch);
      }
    }
    factors.push_back(f);
    for (const auto& fac : factors) {
      bool numeric = !fac.empty() && (isdigit(static_cast<unsigned char>(fac[0])) ||
                                      fac.find('/') != std::string::npos);
      if (numeric) {
        if (coeff_text.empty())
          coeff_text = fac;
        else
          throw usage_error("two numeric factors in term '" + part + "'");
      } else {
        if (!mono_text.empty()) mono_text += '*';
        mono_text += fac;
      }
    }
    Scalar c = coeff_text.empty() ? ctx_.one() : ctx_.parse(coeff_text);
    if (sg < 0) c = ctx_.neg(c);
    Monomial m = mono_text.empty() ? Monomial::one(ord_.nvars()) : ord_.parse_monomial(mono_text);
    ts.push_back({m, c});
  }
  return Poly::from_terms(ctx_, ord_, std::move(ts));
}

}  // namespace lrg
