#include "lrg/staircase.hpp"

#include <algorithm>
#include <unordered_set>

namespace lrg {

static bool lex_vec_less(const Monomial& a, const Monomial& b) {
  return a.exponents() < b.exponents();
}

Staircase Staircase::stabilize(const std::vector<Monomial>& ms) {
  Staircase s;
  for (const auto& m : ms) {
    bool dominated = false;
    for (const auto& g : s.gens_)
      if (m.divides(g)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::erase_if(s.gens_, [&](const Monomial& g) { return g.divides(m); });
    s.gens_.push_back(m);
  }
  std::sort(s.gens_.begin(), s.gens_.end(), lex_vec_less);
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& g : s.gens_)
    for_each_divisor(g, [&](const Monomial& d) { seen.insert(d); });
  s.size_ = seen.size();
  return s;
}

bool Staircase::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (m.divides(g)) return true;
  return false;
}

std::size_t Staircase::size_with(const Monomial& a, const Monomial& b) const {
  std::size_t extra = 0;
  for_each_divisor(a, [&](const Monomial& d) {
    if (!contains(d)) ++extra;
  });
  for_each_divisor(b, [&](const Monomial& d) {
    if (!contains(d) && !d.divides(a)) ++extra;
  });
  return size_ + extra;
}

std::vector<Monomial> Staircase::full(const Ordering& ord) const {
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& g : gens_)
    for_each_divisor(g, [&](const Monomial& d) { seen.insert(d); });
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), OrdLess{&ord});
  return out;
}

std::vector<Monomial> Staircase::border(std::size_t nvars, const Ordering& ord) const {
  if (gens_.empty()) return {Monomial::one(nvars)};
  std::unordered_set<Monomial, MonomialHash> cand;
  std::unordered_set<Monomial, MonomialHash> inside;
  for (const auto& g : gens_)
    for_each_divisor(g, [&](const Monomial& d) { inside.insert(d); });
  for (const auto& s : inside)
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial m = s * Monomial::var(nvars, i);
      if (!inside.count(m)) cand.insert(m);
    }
  std::vector<Monomial> out;
  for (const auto& m : cand) {
    bool minimal = true;
    for (std::size_t i = 0; i < nvars && minimal; ++i) {
      if (m[i] == 0) continue;
      if (!inside.count(m / Monomial::var(nvars, i))) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), OrdLess{&ord});
  return out;
}

}  // namespace lrg
