#ifndef LRG_TABLE_HPP
#define LRG_TABLE_HPP

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lrg/poly.hpp"
#include "lrg/staircase.hpp"

namespace lrg {

/// Memoizing sequence source. Distinct queries are the algorithms' scarce
/// resource: the counter equals the number of distinct indices ever read,
/// repeated reads are free. One oracle instance serves one run; use fresh()
/// to hand the same sequence to another run with its own cache.
class TableOracle {
public:
  using Source = std::function<Scalar(const Monomial&)>;

  TableOracle(std::size_t nvars, Field field, Source src, std::string name = "")
      : nvars_(nvars), field_(field), src_(std::move(src)), name_(std::move(name)) {}

  std::size_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::string& name() const { return name_; }

  const Scalar& query(const Monomial& idx);
  std::uint64_t distinct_queries() const { return cache_.size(); }

  /// Same sequence, empty cache and counter.
  TableOracle fresh() const { return TableOracle(nvars_, field_, src_, name_); }

private:
  std::size_t nvars_;
  Field field_;
  Source src_;
  std::string name_;
  std::unordered_map<Monomial, Scalar, MonomialHash> cache_;
};

/// The bracket [x^shift * f]_u: sum of coeff * u_(exponent+shift) over the
/// support of f. Performs |supp| multiplications and |supp|-1 additions.
Scalar bracket(FieldCtx& ctx, TableOracle& t, const Poly& f, const Monomial& shift);

/// Explicit finite table; queries outside the stored support are an error
/// naming the missing index.
TableOracle explicit_table(std::size_t nvars, Field field,
                           std::vector<std::pair<Monomial, Scalar>> entries,
                           const Ordering& ord_for_msgs);

/// Total oracle generated from relations whose leading monomials form an
/// antichain with finite staircase, plus the values on the staircase. Every
/// other index is filled by solving the applicable relation recursively. A
/// consistency check evaluates each relation's bracket at all shifts within
/// the verification window (degree <= 2*maxdeg(staircase)+2) and throws an
/// error naming the first offending index.
TableOracle from_gb(const Ordering& ord, Field field, std::vector<Poly> relations,
                    std::vector<std::pair<Monomial, Scalar>> staircase_values);

/// Worked sequences used throughout the tests and the CLI:
///   binomial  u_ij = C(i,j)            delta   u_41 = 1, 0 elsewhere
///   t23       u_ij = 2^i 3^j (i+1)     circle  u_ij = i^2+j^2-1
///   fib2d     u_ij = F_(i+1)           fib3d   u_ijk = F_(4i+k+1)
///   f11       the F_11 table generated from y^2-y, x^2*y-x*y,
///             x^4-6*x^3+11*x^2-6*x with staircase values 1,2,3,4,3,-1
TableOracle builtin_table(const std::string& name, Field field);

/// Natural coefficient field of a named builtin (f11 lives over F_11, the
/// rest default to Q).
Field builtin_default_field(const std::string& name);

}  // namespace lrg

#endif
