#include "lrg/asfglm.hpp"

#include <algorithm>
#include <set>

namespace lrg {

namespace {

struct Candidates {
  std::set<Monomial, OrdLess> items;
  std::vector<Monomial> found_lms;

  explicit Candidates(const Ordering& ord) : items(OrdLess{&ord}) {}

  void push(const Monomial& m) {
    for (const auto& lm : found_lms)
      if (lm.divides(m)) return;
    items.insert(m);
  }

  void record_lm(const Monomial& lm) {
    found_lms.push_back(lm);
    std::erase_if(items, [&](const Monomial& m) { return lm.divides(m); });
  }

  Monomial pop_min() {
    Monomial m = *items.begin();
    items.erase(items.begin());
    return m;
  }
};

}  // namespace

GuessResult asfglm(FieldCtx& ctx, TableOracle& table, const Ordering& ord, std::uint64_t d,
                   const AsfglmOptions& opts) {
  if (!opts.no_bound && d < 1) throw usage_error("the staircase-size bound must be at least 1");
  const std::size_t n = ord.nvars();
  PolyOps pops(ctx, ord);
  HankelEliminator elim(ctx, table);
  Candidates cand(ord);
  cand.push(Monomial::one(n));

  GuessResult res;
  auto log = [&](const std::string& s) {
    if (opts.trace) opts.trace->push_back(s);
  };

  auto relation_from = [&](const Monomial& lead, const std::vector<Scalar>& alpha) {
    std::vector<Term> ts;
    ts.push_back({lead, ctx.one()});
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (!ctx.is_zero(alpha[i])) ts.push_back({elim.accepted()[i], alpha[i]});
    return Poly::from_terms(ctx, ord, std::move(ts));
  };

  auto finish = [&]() {
    std::sort(res.relations.begin(), res.relations.end(),
              [&](const GuessedRelation& a, const GuessedRelation& b) {
                return ord.less(a.poly.lm(), b.poly.lm());
              });
    res.staircase = elim.accepted();
    std::sort(res.staircase.begin(), res.staircase.end(), OrdLess{&ord});
    res.queries = table.distinct_queries();
    res.ops = ctx.counter();
  };

  while (!cand.items.empty()) {
    Monomial t = cand.pop_min();
    if (elim.try_extend(t)) {
      log("The matrix at " + ord.render(t) + " keeps full rank; " + ord.render(t) +
          " joins the staircase.");
      if (opts.max_staircase && elim.size() > *opts.max_staircase)
        throw Error(1, "staircase exceeded the configured cap of " +
                           std::to_string(*opts.max_staircase));
      for (std::size_t i = 0; i < n; ++i) cand.push(t * Monomial::var(n, i));
      if (!opts.no_bound && elim.size() >= d) {
        // early termination: the remaining candidates become border relations
        while (!cand.items.empty()) {
          Monomial tp = cand.pop_min();
          std::vector<Scalar> alpha = elim.solve_for(tp);
          Poly rel = relation_from(tp, alpha);
          bool keep = true;
          if (opts.tweaked) {
            keep = check_relation_row(ctx, table, elim.accepted(), alpha, tp);
            log(std::string("Extra-row check at ") + ord.render(tp) +
                (keep ? " passes." : " fails; relation dropped."));
          }
          if (keep) {
            GuessedRelation out;
            out.poly = std::move(rel);
            out.shift_set = elim.accepted();
            if (opts.tweaked) out.shift_set.push_back(tp);
            res.relations.push_back(std::move(out));
          }
          cand.record_lm(tp);
        }
        finish();
        return res;
      }
    } else {
      std::vector<Scalar> alpha = elim.last_relation();
      Poly rel = relation_from(t, alpha);
      log("The matrix at " + ord.render(t) + " loses rank; found relation " + pops.render(rel) +
          ".");
      GuessedRelation out;
      out.poly = std::move(rel);
      out.shift_set = elim.accepted();
      out.shift_set.push_back(t);
      res.relations.push_back(std::move(out));
      cand.record_lm(t);
    }
  }

  finish();
  if (opts.no_bound) return res;
  throw RunSfglmError(std::move(res));
}

std::vector<Monomial> leading_monomials(const GuessResult& r) {
  std::vector<Monomial> lms;
  for (const auto& rel : r.relations) lms.push_back(rel.poly.lm());
  return lms;
}

}  // namespace lrg
