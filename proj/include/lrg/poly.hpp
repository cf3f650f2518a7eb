#ifndef LRG_POLY_HPP
#define LRG_POLY_HPP

#include <string>
#include <vector>

#include "lrg/field.hpp"
#include "lrg/monomial.hpp"

namespace lrg {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Polynomial with nonzero coefficients, terms kept strictly decreasing under
/// the run's ordering. The leading term is terms().front().
class Poly {
public:
  Poly() = default;

  static Poly monomial(const Monomial& m, const Scalar& c) {
    Poly p;
    p.terms_.push_back({m, c});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Monomial& lm() const { return terms_.front().mono; }
  const Scalar& lc() const { return terms_.front().coeff; }
  std::size_t support_size() const { return terms_.size(); }

  /// Coefficient of m, or zero if absent (linear scan; supports are short).
  Scalar coeff_of(const Monomial& m, const FieldCtx& ctx) const;

  Poly shifted(const Monomial& s) const;  // multiply by a monomial

  bool operator==(const Poly& o) const;

  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Poly from_terms(FieldCtx& ctx, const Ordering& ord, std::vector<Term> ts);

private:
  friend class PolyOps;
  std::vector<Term> terms_;
};

/// Arithmetic on polynomials of one run; every field operation goes through
/// the run's counter.
class PolyOps {
public:
  PolyOps(FieldCtx& ctx, const Ordering& ord) : ctx_(ctx), ord_(ord) {}

  /// f + c*g with term-aligned additions.
  Poly add_scaled(const Poly& f, const Scalar& c, const Poly& g) const;
  Poly scale(const Poly& f, const Scalar& c) const;
  /// f / e termwise, one division per term.
  Poly divide(const Poly& f, const Scalar& e) const;
  Poly make_monic(const Poly& f) const;

  std::string render(const Poly& f) const;
  Poly parse(const std::string& text) const;

private:
  FieldCtx& ctx_;
  const Ordering& ord_;
};

}  // namespace lrg

#endif
