#ifndef LRG_ASFGLM_HPP
#define LRG_ASFGLM_HPP

#include "lrg/multihankel.hpp"
#include "lrg/result.hpp"

namespace lrg {

struct AsfglmOptions {
  /// Checks each drained relation against one extra Hankel row and keeps only
  /// the ones that pass (the tweaked variant).
  bool tweaked = false;
  /// Disables early termination; only sound on linear recurrent tables.
  bool no_bound = false;
  /// Safety cap on the staircase size in no-bound mode.
  std::optional<std::uint64_t> max_staircase;
  std::vector<std::string>* trace = nullptr;
};

/// Adaptive Scalar-FGLM: grows the useful staircase monomial by monomial via
/// bordered multi-Hankel rank tests, then, once `d` staircase elements are
/// found, drains the remaining candidates into border relations. Throws
/// RunSfglmError (with the partial result) when the candidate list empties
/// before the staircase bound is reached.
GuessResult asfglm(FieldCtx& ctx, TableOracle& table, const Ordering& ord, std::uint64_t d,
                   const AsfglmOptions& opts = {});

}  // namespace lrg

#endif
