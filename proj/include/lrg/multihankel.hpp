#ifndef LRG_MULTIHANKEL_HPP
#define LRG_MULTIHANKEL_HPP

#include <optional>
#include <vector>

#include "lrg/table.hpp"

namespace lrg {

/// Dense multi-Hankel matrix: entry(r,c) = u at the exponent sum of the row
/// and column labels.
struct MultiHankel {
  std::vector<Monomial> rows;
  std::vector<Monomial> cols;
  std::vector<std::vector<Scalar>> entries;
};

MultiHankel build_hankel(TableOracle& t, const std::vector<Monomial>& rows,
                         const std::vector<Monomial>& cols);

/// Exact full-rank test of a square matrix by fresh Gaussian elimination;
/// the 0x0 matrix is full rank.
bool is_full_rank(FieldCtx& ctx, const MultiHankel& h);

/// Solves H_(S,S) alpha = -H_(S,{target}) from scratch. The caller guarantees
/// H_(S,S) is invertible; a singular matrix is reported as an error.
std::vector<Scalar> solve_relation(FieldCtx& ctx, TableOracle& t,
                                   const std::vector<Monomial>& S, const Monomial& target);

/// The extra-row validity check of the tweaked drain: true iff
/// H_({target},S) alpha + u_(2*target) = 0.
bool check_relation_row(FieldCtx& ctx, TableOracle& t, const std::vector<Monomial>& S,
                        const std::vector<Scalar>& alpha, const Monomial& target);

/// Incremental L D L^T factorization of the nested symmetric multi-Hankel
/// matrices H_(S,S) along a chain of accepted monomials. Acceptance keeps
/// every leading principal minor nonsingular, so no pivoting is needed;
/// exact arithmetic means any nonzero pivot is acceptable.
class HankelEliminator {
public:
  HankelEliminator(FieldCtx& ctx, TableOracle& t) : ctx_(ctx), table_(t) {}

  const std::vector<Monomial>& accepted() const { return s_; }
  std::size_t size() const { return s_.size(); }

  /// Tests whether the bordered matrix H_(S+{t},S+{t}) keeps full rank. On
  /// full rank the factorization is extended by t and true is returned; on a
  /// rank defect the state is unchanged and false is returned, after which
  /// last_relation() yields the coefficients over S of the relation with
  /// leading monomial t.
  bool try_extend(const Monomial& t);

  /// Relation coefficients found by the last failed try_extend.
  const std::vector<Scalar>& last_relation() const { return last_alpha_; }

  /// Solves H_(S,S) alpha = -H_(S,{target}) against the current state.
  std::vector<Scalar> solve_for(const Monomial& target);

private:
  std::vector<Scalar> column_for(const Monomial& t);
  std::vector<Scalar> forward(const std::vector<Scalar>& c);
  std::vector<Scalar> back_unit(std::vector<Scalar> v);

  FieldCtx& ctx_;
  TableOracle& table_;
  std::vector<Monomial> s_;
  std::vector<std::vector<Scalar>> lower_;  // row i: entries j < i, unit diagonal
  std::vector<Scalar> diag_;
  std::vector<Scalar> last_alpha_;
};

}  // namespace lrg

#endif
