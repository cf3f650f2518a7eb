#ifndef LRG_STAIRCASE_HPP
#define LRG_STAIRCASE_HPP

#include <vector>

#include "lrg/monomial.hpp"

namespace lrg {

/// A finite divisor-closed monomial set, stored by its maximal antichain
/// under divisibility. The full set is materialized on demand; membership and
/// size queries work off the antichain.
class Staircase {
public:
  Staircase() = default;

  /// Divisor closure of an arbitrary finite monomial set.
  static Staircase stabilize(const std::vector<Monomial>& ms);

  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return size_; }
  bool empty() const { return gens_.empty(); }

  /// Membership in the divisor closure.
  bool contains(const Monomial& m) const;

  /// Size of stabilize(*this union {a, b}) without materializing it.
  std::size_t size_with(const Monomial& a, const Monomial& b) const;

  /// The full set, sorted increasingly under ord.
  std::vector<Monomial> full(const Ordering& ord) const;

  /// Minimal monomials outside the set: border of the empty staircase is {1}.
  std::vector<Monomial> border(std::size_t nvars, const Ordering& ord) const;

  bool operator==(const Staircase& o) const { return gens_ == o.gens_; }

private:
  std::vector<Monomial> gens_;  // pairwise non-dividing, sorted for determinism
  std::size_t size_ = 0;
};

/// Applies a function to every divisor of m (including 1 and m).
template <typename F>
void for_each_divisor(const Monomial& m, F&& f) {
  Monomial d(m.nvars());
  std::size_t i = 0;
  // odometer over the exponent box
  while (true) {
    f(const_cast<const Monomial&>(d));
    for (i = 0; i < m.nvars(); ++i) {
      if (d[i] < m[i]) {
        d[i] += 1;
        break;
      }
      d[i] = 0;
    }
    if (i == m.nvars()) break;
  }
}

}  // namespace lrg

#endif
