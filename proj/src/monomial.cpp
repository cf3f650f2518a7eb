#include "lrg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrg {

std::uint32_t Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0u);
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (d.e_[i] > e_[i]) throw Error(1, "monomial quotient of a non-divisor");
    r.e_[i] -= d.e_[i];
  }
  return r;
}

Ordering::Ordering(OrderKind kind, std::vector<std::string> names,
                   std::vector<std::uint32_t> weights)
    : kind_(kind), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.empty()) throw usage_error("ordering needs at least one variable");
  if (kind_ == OrderKind::WEIGHT) {
    if (weights_.size() != names_.size())
      throw usage_error("weight ordering needs one weight per variable");
    for (auto w : weights_)
      if (w == 0) throw usage_error("weights must be positive");
  }
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Ordering Ordering::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw usage_error("bad ordering spec '" + spec + "'");
  std::string kind_s = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);

  std::vector<std::uint32_t> weights;
  OrderKind kind;
  if (kind_s == "drl") {
    kind = OrderKind::DRL;
  } else if (kind_s == "lex") {
    kind = OrderKind::LEX;
  } else if (kind_s == "weight") {
    kind = OrderKind::WEIGHT;
    auto colon2 = rest.find(':');
    if (colon2 == std::string::npos)
      throw usage_error("weight ordering spec needs weights and variables");
    for (const auto& w : split(rest.substr(0, colon2), ','))
      weights.push_back(static_cast<std::uint32_t>(std::stoul(w)));
    rest = rest.substr(colon2 + 1);
  } else {
    throw usage_error("unknown ordering kind '" + kind_s + "'");
  }

  // variables are listed smallest first; internally index 0 is the largest
  std::vector<std::string> names = split(rest, '<');
  std::reverse(names.begin(), names.end());
  for (const auto& n : names)
    if (n.empty()) throw usage_error("bad variable list in ordering spec '" + spec + "'");
  std::reverse(weights.begin(), weights.end());
  return Ordering(kind, std::move(names), std::move(weights));
}

std::string Ordering::spec() const {
  std::string s = kind_ == OrderKind::DRL ? "drl" : kind_ == OrderKind::LEX ? "lex" : "weight";
  s += ':';
  if (kind_ == OrderKind::WEIGHT) {
    for (std::size_t i = names_.size(); i-- > 0;) {
      s += std::to_string(weights_[i]);
      s += i == 0 ? ':' : ',';
    }
  }
  for (std::size_t i = names_.size(); i-- > 0;) {
    s += names_[i];
    if (i != 0) s += '<';
  }
  return s;
}

std::uint64_t Ordering::weighted_degree(const Monomial& m) const {
  if (kind_ != OrderKind::WEIGHT) return m.degree();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) d += std::uint64_t(weights_[i]) * m[i];
  return d;
}

// DRL tie-break on equal total degree: the last differing exponent decides,
// larger exponent there means smaller monomial.
static int drl_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int Ordering::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != names_.size() || b.nvars() != names_.size())
    throw Error(1, "monomial/ordering variable count mismatch");
  switch (kind_) {
    case OrderKind::LEX:
      for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::DRL: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      return drl_tiebreak(a, b);
    }
    case OrderKind::WEIGHT: {
      auto wa = weighted_degree(a), wb = weighted_degree(b);
      if (wa != wb) return wa < wb ? -1 : 1;
      auto da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      return drl_tiebreak(a, b);
    }
  }
  return 0;
}

// Advances e[0..len) to the next exponent tuple of the same total degree in
// increasing DRL order; false when the slice is exhausted.
static bool drl_slice_advance(std::vector<std::uint32_t>& e, std::size_t len) {
  if (len <= 1) return false;
  if (drl_slice_advance(e, len - 1)) return true;
  if (e[len - 1] == 0) return false;
  std::uint32_t head_deg = 0;
  for (std::size_t i = 0; i + 1 < len; ++i) head_deg += e[i];
  e[len - 1] -= 1;
  for (std::size_t i = 0; i + 1 < len; ++i) e[i] = 0;
  e[len - 2] = head_deg + 1;
  return true;
}

std::optional<Monomial> Ordering::successor(const Monomial& m,
                                            std::optional<std::uint32_t> degree_cap) const {
  const std::size_t n = names_.size();
  switch (kind_) {
    case OrderKind::DRL: {
      std::vector<std::uint32_t> e = m.exponents();
      if (drl_slice_advance(e, n)) return Monomial(std::move(e));
      std::uint32_t next_deg = m.degree() + 1;
      if (degree_cap && next_deg > *degree_cap) return std::nullopt;
      Monomial s(n);
      s[n - 1] = next_deg;
      return s;
    }
    case OrderKind::LEX: {
      if (!degree_cap) throw usage_error("LEX successor needs a degree cap");
      std::vector<std::uint32_t> e = m.exponents();
      if (m.degree() < *degree_cap) {
        e[n - 1] += 1;
        return Monomial(std::move(e));
      }
      std::size_t j = n;
      while (j-- > 0)
        if (e[j] != 0) break;
      if (j == 0 || j == static_cast<std::size_t>(-1)) return std::nullopt;
      e[j] = 0;
      e[j - 1] += 1;
      for (std::size_t k = j; k < n; ++k) e[k] = 0;
      return Monomial(std::move(e));
    }
    case OrderKind::WEIGHT: {
      // scan the finite region that must contain the successor
      std::uint32_t wmin = *std::min_element(weights_.begin(), weights_.end());
      std::uint32_t bound =
          static_cast<std::uint32_t>((weighted_degree(m) + wmin) / wmin) + 1;
      if (degree_cap) bound = std::min(bound, *degree_cap);
      std::optional<Monomial> best;
      Ordering plain(OrderKind::DRL, names_);
      Monomial cur = Monomial::one(n);
      while (true) {
        if (less(m, cur) && (!best || less(cur, *best))) best = cur;
        auto nx = plain.successor(cur, bound);
        if (!nx) break;
        cur = *nx;
      }
      return best;
    }
  }
  return std::nullopt;
}

std::vector<Monomial> Ordering::enumerate(const Monomial& stop,
                                          std::optional<std::uint32_t> degree_cap) const {
  if (!degree_compatible() && !degree_cap)
    throw usage_error("enumeration under a non-degree ordering needs a degree cap");
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(names_.size());
  while (true) {
    if (less(stop, cur)) break;
    if (!degree_cap || cur.degree() <= *degree_cap) out.push_back(cur);
    if (cur == stop) break;
    auto nx = successor(cur, degree_cap);
    if (!nx) break;
    cur = *nx;
  }
  return out;
}

std::string Ordering::render(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial Ordering::parse_monomial(const std::string& text) const {
  Monomial m(names_.size());
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "1") return m;
  for (const auto& factor : split(t, '*')) {
    auto caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    std::uint32_t k = 1;
    if (caret != std::string::npos) k = static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw usage_error("unknown variable '" + name + "' in '" + text + "'");
    m[static_cast<std::size_t>(it - names_.begin())] += k;
  }
  return m;
}

}  // namespace lrg
