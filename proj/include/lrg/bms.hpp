#ifndef LRG_BMS_HPP
#define LRG_BMS_HPP

#include "lrg/result.hpp"
#include "lrg/table.hpp"

namespace lrg {

/// One staircase-edge witness: a past-failing relation kept under its ratio
/// fail/LM. Entries are scaled so that the bracket at the ratio equals one,
/// which makes them directly usable as the second operand of combine().
struct EdgeEntry {
  Poly rel;
  Monomial ratio;  // fail / LM
  Monomial fail;
};

struct BmsOptions {
  /// Staircase-size bound d of the adaptive variant; unset runs plain BMS.
  std::optional<std::uint64_t> size_bound;
  /// Degree cap for non-degree orderings (the adaptive LEX mode).
  std::optional<std::uint32_t> degree_cap;
  /// Once a shift of a relation is skipped, keep the relation untestable at
  /// every multiple of that shift. Off, the size criterion is re-evaluated
  /// at each monomial.
  bool skip_history = true;
  /// Inter-reduce the returned basis.
  bool inter_reduce = false;
  /// Collects a human-readable step log when set.
  std::vector<std::string>* trace = nullptr;
};

/// Berlekamp-Massey-Sakata, linear-algebra form: visits every monomial up to
/// `stop` in increasing order, tests each applicable relation through the
/// bracket, and rebuilds the truncated basis from the staircase border.
GuessResult bms(FieldCtx& ctx, TableOracle& table, const Ordering& ord, const Monomial& stop);

/// Adaptive variant: same iteration, but a relation test is skipped when a
/// failure would grow the staircase beyond `d`, or at any multiple of an
/// already-skipped shift.
GuessResult abms(FieldCtx& ctx, TableOracle& table, const Ordering& ord, std::uint64_t d,
                 const Monomial& stop, const BmsOptions& opts = {});

/// Shared engine behind bms() and abms().
GuessResult bms_run(FieldCtx& ctx, TableOracle& table, const Ordering& ord, const Monomial& stop,
                    const BmsOptions& opts);

/// The staircase described by a set of edge witnesses: the divisor closure of
/// their ratios.
Staircase staircase_from_edge(const std::vector<EdgeEntry>& entries);

/// The adaptive skip criterion for testing relation g (leading monomial
/// `g_lm`, previously skipped shifts `skipped`) at monomial m: skip when the
/// shift is a multiple of an already-skipped one, or when a failure would
/// push the staircase past `d`.
bool abms_should_skip(const Staircase& stair, const std::vector<Monomial>& skipped,
                      const Monomial& g_lm, const Monomial& m, std::uint64_t d);

/// Combines two relations failing at the same ratio v into one with a strictly
/// larger fail: f1 - ([v f1]/[v f2]) f2. Errors when [v f2] = 0 or when the
/// combination collapses to zero.
Poly combine(FieldCtx& ctx, TableOracle& table, const Ordering& ord, const Poly& f1,
             const Poly& f2, const Monomial& v);

/// The guaranteed-recovery bound s_max * max(g_max, s_max) for a known target
/// staircase and basis.
Monomial stopping_bound(const Staircase& s, const std::vector<Monomial>& basis_lms,
                        const Ordering& ord);

/// Reduces the basis so no support monomial is divisible by another leading
/// monomial. Leading monomials must form an antichain.
std::vector<Poly> inter_reduce(FieldCtx& ctx, const Ordering& ord, std::vector<Poly> basis);

}  // namespace lrg

#endif
