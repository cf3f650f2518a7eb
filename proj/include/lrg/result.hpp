#ifndef LRG_RESULT_HPP
#define LRG_RESULT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lrg/poly.hpp"
#include "lrg/staircase.hpp"

namespace lrg {

struct GuessedRelation {
  Poly poly;
  /// Nominal shift of the BMS family: the largest v with v*LM visited.
  std::optional<Monomial> shift;
  /// Shift set of the Scalar-FGLM family.
  std::vector<Monomial> shift_set;
  /// Shifts at which the adaptive variant skipped testing this relation.
  std::vector<Monomial> skipped_shifts;
  /// First monomial where the relation broke, when known; unset means it
  /// never failed within the examined range.
  std::optional<Monomial> fail;
};

struct SkipStats {
  std::uint64_t skipped_tests = 0;
  std::vector<Monomial> fully_skipped;  // visited monomials where every applicable relation was skipped
};

struct GuessResult {
  std::vector<GuessedRelation> relations;  // sorted by increasing leading monomial
  std::vector<Monomial> staircase;         // full staircase, increasing
  std::uint64_t queries = 0;
  OpCounter ops;
  SkipStats skips;
};

/// Raised by the Scalar-FGLM family when the candidate list empties before the
/// staircase bound is reached; the full (non-adaptive) algorithm would be
/// needed, which is outside this library's scope.
class RunSfglmError : public Error {
public:
  explicit RunSfglmError(GuessResult partial)
      : Error(3, "adaptive guessing stalled: run the full Scalar-FGLM algorithm"),
        partial_(std::move(partial)) {}
  const GuessResult& partial() const { return partial_; }

private:
  GuessResult partial_;
};

std::vector<Monomial> leading_monomials(const GuessResult& r);

}  // namespace lrg

#endif
