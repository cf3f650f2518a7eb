#ifndef LRG_MONOMIAL_HPP
#define LRG_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrg/field.hpp"

namespace lrg {

/// Exponent-vector monomial. Index 0 holds the exponent of the largest
/// variable under the active ordering, index n-1 the smallest.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1) {
    Monomial m(nvars);
    m.e_[i] = k;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint32_t degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// Componentwise difference; requires `d | *this`.
  Monomial operator/(const Monomial& d) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
  std::vector<std::uint32_t> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ m.nvars();
    for (std::size_t i = 0; i < m.nvars(); ++i)
      h = (h ^ (m[i] + 0x9e3779b9u)) * 0x100000001b3ull;
    return h;
  }
};

enum class OrderKind { DRL, LEX, WEIGHT };

/// A monomial ordering together with named variables. `names[0]` is the
/// largest variable. DRL and WEIGHT are degree compatible; LEX is not, so
/// enumeration under LEX needs a degree cap.
class Ordering {
public:
  Ordering() = default;
  Ordering(OrderKind kind, std::vector<std::string> names,
           std::vector<std::uint32_t> weights = {});

  /// Parses `drl:y<x`, `lex:z<y<x` or `weight:w1,w2,...:y<x` where variables
  /// are listed smallest first and weights follow the same listing order.
  static Ordering parse(const std::string& spec);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool degree_compatible() const { return kind_ != OrderKind::LEX; }
  std::string spec() const;

  /// -1, 0 or 1 as m1 is smaller, equal or greater.
  int compare(const Monomial& m1, const Monomial& m2) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::uint64_t weighted_degree(const Monomial& m) const;

  /// Least monomial strictly greater than m, respecting a total-degree cap
  /// when given. Returns nullopt once the capped universe is exhausted.
  std::optional<Monomial> successor(const Monomial& m,
                                    std::optional<std::uint32_t> degree_cap = {}) const;

  /// All monomials m with m <= stop (and deg m <= degree_cap when given), in
  /// increasing order. Non-degree orderings require the cap.
  std::vector<Monomial> enumerate(const Monomial& stop,
                                  std::optional<std::uint32_t> degree_cap = {}) const;

  std::string render(const Monomial& m) const;
  Monomial parse_monomial(const std::string& text) const;

private:
  OrderKind kind_ = OrderKind::DRL;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
};

/// Strict-weak-order functor for ordered containers keyed by monomials.
struct OrdLess {
  const Ordering* ord = nullptr;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};

}  // namespace lrg

#endif
