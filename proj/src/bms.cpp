#include "lrg/bms.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace lrg {

namespace {

// Mutable staircase with O(1) membership, grown by inserting edge ratios.
struct StairAccum {
  std::unordered_set<Monomial, MonomialHash> set;
  std::vector<Monomial> ratios;

  bool contains(const Monomial& m) const { return set.count(m) != 0; }
  std::size_t size() const { return set.size(); }

  void add_ratio(const Monomial& r) {
    ratios.push_back(r);
    for_each_divisor(r, [&](const Monomial& d) { set.insert(d); });
  }

  // size of stabilize(set + {a, b}), early-exiting once `limit` is exceeded
  std::size_t size_with(const Monomial& a, const Monomial& b, std::size_t limit) const {
    std::size_t total = set.size();
    for_each_divisor(a, [&](const Monomial& d) {
      if (total <= limit && !set.count(d)) ++total;
    });
    for_each_divisor(b, [&](const Monomial& d) {
      if (total <= limit && !set.count(d) && !d.divides(a)) ++total;
    });
    return total;
  }

  Staircase snapshot() const { return Staircase::stabilize(ratios); }

  // border of the current set without re-materializing it
  std::vector<Monomial> border(std::size_t nvars, const Ordering& ord) const {
    if (set.empty()) return {Monomial::one(nvars)};
    std::unordered_set<Monomial, MonomialHash> cand;
    for (const auto& s : set)
      for (std::size_t i = 0; i < nvars; ++i) {
        Monomial m = s * Monomial::var(nvars, i);
        if (!set.count(m)) cand.insert(std::move(m));
      }
    std::vector<Monomial> out;
    for (const auto& m : cand) {
      bool minimal = true;
      for (std::size_t i = 0; i < nvars && minimal; ++i) {
        if (m[i] == 0) continue;
        if (!set.count(m / Monomial::var(nvars, i))) minimal = false;
      }
      if (minimal) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), OrdLess{&ord});
    return out;
  }
};

struct TrackedRelation {
  Poly poly;  // monic
  std::vector<Monomial> skipped_shifts;
};

struct Engine {
  FieldCtx& ctx;
  TableOracle& table;
  const Ordering& ord;
  const BmsOptions& opts;
  PolyOps ops;

  std::vector<TrackedRelation> g;
  std::map<Monomial, EdgeEntry, OrdLess> edge;
  StairAccum stair;
  SkipStats skips;
  std::vector<std::string>* trace;

  Engine(FieldCtx& c, TableOracle& t, const Ordering& o, const BmsOptions& op)
      : ctx(c), table(t), ord(o), opts(op), ops(c, o), edge(OrdLess{&o}), trace(op.trace) {}

  void log(const std::string& line) {
    if (trace) trace->push_back(line);
  }

  std::string rel_str(const Poly& p) { return ops.render(p); }

  bool should_skip(const TrackedRelation& r, const Monomial& m, const Monomial& v,
                   std::string* reason) {
    if (!opts.size_bound) return false;
    // once skipped at a shift, a relation stays untestable at its multiples
    std::vector<Monomial> prior;
    if (opts.skip_history)
      for (const auto& s : r.skipped_shifts)
        if (s.divides(v) && s != v) prior.push_back(s);
    if (!prior.empty()) {
      if (reason) {
        std::string at;
        for (const auto& s : prior) {
          bool one_step = (v / s).degree() == 1;
          if (!one_step) continue;
          if (!at.empty()) at += " and ";
          at += ord.render(s * r.poly.lm());
        }
        if (at.empty()) at = ord.render(prior.front() * r.poly.lm());
        *reason = "We did not test " + rel_str(r.poly) + " in " + at + ".";
      }
      return true;
    }
    if (stair.contains(v)) return false;
    std::size_t would = stair.size_with(r.poly.lm(), v, *opts.size_bound);
    if (would > *opts.size_bound) {
      if (reason) {
        std::size_t exact = stair.size_with(r.poly.lm(), v, static_cast<std::size_t>(-1));
        *reason = "Should the relation " + rel_str(r.poly) + " fail in " + ord.render(m) +
                  ", we would have to add " + ord.render(r.poly.lm()) + " and " + ord.render(v) +
                  " to the staircase, raising its size to " + std::to_string(exact) + ".";
      }
      return true;
    }
    return false;
  }

  // among edge entries whose ratio is a multiple of v, the one with the
  // smallest fail (ties by smaller leading monomial)
  static const EdgeEntry* pick_witness(const std::map<Monomial, EdgeEntry, OrdLess>& from,
                                       const Ordering& ord, const Monomial& v) {
    const EdgeEntry* best = nullptr;
    for (const auto& [ratio, h] : from) {
      if (!v.divides(ratio)) continue;
      if (!best || ord.less(h.fail, best->fail) ||
          (h.fail == best->fail && ord.less(h.rel.lm(), best->rel.lm())))
        best = &h;
    }
    return best;
  }

  GuessResult run(const Monomial& stop) {
    const std::size_t n = ord.nvars();
    std::vector<Monomial> visited = ord.enumerate(stop, opts.degree_cap);

    g.push_back({Poly::monomial(Monomial::one(n), ctx.one()), {}});

    for (const Monomial& m : visited) {
      if (trace) log("For the monomial " + ord.render(m));

      std::vector<std::optional<Scalar>> fail_value(g.size());
      std::size_t applicable = 0, tested = 0, skipped_here = 0;

      for (std::size_t i = 0; i < g.size(); ++i) {
        TrackedRelation& r = g[i];
        if (!r.poly.lm().divides(m)) {
          if (trace) log("  Nothing must be done for the relation " + rel_str(r.poly) + ".");
          continue;
        }
        ++applicable;
        Monomial v = m / r.poly.lm();
        std::string reason;
        if (should_skip(r, m, v, trace ? &reason : nullptr)) {
          ++skipped_here;
          ++skips.skipped_tests;
          r.skipped_shifts.push_back(v);
          if (trace) log("  " + reason + " We skip testing " + rel_str(r.poly) + ".");
          continue;
        }
        ++tested;
        Scalar e = bracket(ctx, table, r.poly, v);
        if (ctx.is_zero(e)) {
          if (trace)
            log("  The relation " + rel_str(r.poly) + " succeeds since [" + ord.render(v) + "*(" +
                rel_str(r.poly) + ")] = 0.");
        } else {
          fail_value[i] = e;
          if (trace)
            log("  The relation " + rel_str(r.poly) + " fails since [" + ord.render(v) + "*(" +
                rel_str(r.poly) + ")] = " + ctx.to_string(e) + ".");
        }
      }

      if (applicable > 0 && tested == 0 && skipped_here > 0) skips.fully_skipped.push_back(m);

      bool any_failure = std::any_of(fail_value.begin(), fail_value.end(),
                                     [](const auto& f) { return f.has_value(); });
      if (!any_failure) continue;

      // grow the staircase by the failing ratios; the edge itself is folded
      // in only after the basis rebuild, which must see the pre-step edge
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!fail_value[i]) continue;
        Monomial v = m / g[i].poly.lm();
        if (!stair.contains(v)) stair.add_ratio(v);
      }

      std::vector<Monomial> border = stair.border(n, ord);

      std::vector<TrackedRelation> next;
      next.reserve(border.size());
      for (const Monomial& b : border) {
        std::size_t src = g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
          if (g[i].poly.lm().divides(b)) {
            src = i;
            break;
          }
        if (src == g.size()) throw Error(1, "missing generator for border monomial");
        const TrackedRelation& r = g[src];
        Monomial t = b / r.poly.lm();
        if (!fail_value[src]) {
          next.push_back({r.poly.shifted(t), r.skipped_shifts});
          continue;
        }
        if (!b.divides(m)) {
          next.push_back({r.poly.shifted(t), r.skipped_shifts});
          continue;
        }
        Monomial v = m / b;
        const EdgeEntry* h = pick_witness(edge, ord, v);
        if (!h) throw Error(1, "no edge witness for failing border relation");
        Poly f1 = r.poly.shifted(t);
        Poly hshift = h->rel.shifted(h->ratio / v);
        Poly combined = ops.add_scaled(f1, ctx.neg(*fail_value[src]), hshift);
        next.push_back({std::move(combined), {}});
      }

      // fold this step's failures into the edge: one entry per distinct
      // ratio, ties going to the smaller leading monomial
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!fail_value[i]) continue;
        Monomial v = m / g[i].poly.lm();
        auto it = edge.find(v);
        if (it != edge.end() && !ord.less(g[i].poly.lm(), it->second.rel.lm())) continue;
        EdgeEntry entry{ops.divide(g[i].poly, *fail_value[i]), v, m};
        if (it == edge.end()) {
          edge.emplace(v, std::move(entry));
        } else {
          it->second = std::move(entry);
        }
      }

      std::sort(next.begin(), next.end(), [&](const TrackedRelation& a, const TrackedRelation& b) {
        return ord.less(a.poly.lm(), b.poly.lm());
      });
      g = std::move(next);

      if (trace) {
        std::string es;
        for (const auto& [ratio, h] : edge) {
          if (!es.empty()) es += ", ";
          es += "[" + rel_str(h.rel) + ", " + ord.render(ratio) + "]";
        }
        std::string gs;
        for (const auto& r : g) {
          if (!gs.empty()) gs += ", ";
          gs += rel_str(r.poly);
        }
        log("  We update G := {" + gs + "} and S := {" + es + "}.");
      }
    }

    std::vector<Poly> basis;
    for (auto& r : g) basis.push_back(r.poly);
    if (opts.inter_reduce) basis = inter_reduce(ctx, ord, std::move(basis));

    GuessResult res;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      GuessedRelation out;
      out.poly = basis[i];
      out.skipped_shifts = g[i].skipped_shifts;
      for (auto it = visited.rbegin(); it != visited.rend(); ++it)
        if (basis[i].lm().divides(*it)) {
          out.shift = *it / basis[i].lm();
          break;
        }
      res.relations.push_back(std::move(out));
    }
    res.staircase = stair.snapshot().full(ord);
    res.queries = table.distinct_queries();
    res.ops = ctx.counter();
    res.skips = skips;
    return res;
  }
};

}  // namespace

GuessResult bms_run(FieldCtx& ctx, TableOracle& table, const Ordering& ord, const Monomial& stop,
                    const BmsOptions& opts) {
  if (!ord.degree_compatible()) {
    if (!opts.size_bound)
      throw usage_error("non-degree orderings need the adaptive variant with a staircase bound");
    if (!opts.degree_cap)
      throw usage_error("non-degree orderings need a degree cap");
  }
  Engine eng(ctx, table, ord, opts);
  return eng.run(stop);
}

GuessResult bms(FieldCtx& ctx, TableOracle& table, const Ordering& ord, const Monomial& stop) {
  return bms_run(ctx, table, ord, stop, BmsOptions{});
}

GuessResult abms(FieldCtx& ctx, TableOracle& table, const Ordering& ord, std::uint64_t d,
                 const Monomial& stop, const BmsOptions& opts) {
  if (d < 1) throw usage_error("the staircase-size bound must be at least 1");
  BmsOptions o = opts;
  o.size_bound = d;
  if (!ord.degree_compatible() && !o.degree_cap)
    o.degree_cap = static_cast<std::uint32_t>(2 * d - 1);
  return bms_run(ctx, table, ord, stop, o);
}

Staircase staircase_from_edge(const std::vector<EdgeEntry>& entries) {
  std::vector<Monomial> ratios;
  for (const auto& e : entries) ratios.push_back(e.ratio);
  return Staircase::stabilize(ratios);
}

bool abms_should_skip(const Staircase& stair, const std::vector<Monomial>& skipped,
                      const Monomial& g_lm, const Monomial& m, std::uint64_t d) {
  if (!g_lm.divides(m)) throw Error(1, "skip test needs an applicable relation");
  Monomial v = m / g_lm;
  for (const auto& s : skipped)
    if (s.divides(v) && s != v) return true;
  if (stair.contains(v)) return false;
  return stair.size_with(g_lm, v) > d;
}

Poly combine(FieldCtx& ctx, TableOracle& table, const Ordering& ord, const Poly& f1,
             const Poly& f2, const Monomial& v) {
  PolyOps ops(ctx, ord);
  Scalar e1 = bracket(ctx, table, f1, v);
  Scalar e2 = bracket(ctx, table, f2, v);
  if (ctx.is_zero(e2)) throw Error(1, "combine needs a nonzero bracket for the second relation");
  Poly r = ops.add_scaled(f1, ctx.neg(ctx.div(e1, e2)), f2);
  if (r.is_zero()) throw Error(1, "combination of the two relations is zero");
  return r;
}

Monomial stopping_bound(const Staircase& s, const std::vector<Monomial>& basis_lms,
                        const Ordering& ord) {
  if (basis_lms.empty()) throw usage_error("stopping bound needs the target leading monomials");
  std::size_t n = basis_lms.front().nvars();
  Monomial smax = Monomial::one(n);
  for (const auto& m : s.generators())
    if (ord.less(smax, m)) smax = m;
  // the antichain holds the divisibility-maximal monomials; the order-maximal
  // one is among them
  Monomial gmax = basis_lms.front();
  for (const auto& m : basis_lms)
    if (ord.less(gmax, m)) gmax = m;
  return smax * (ord.less(gmax, smax) ? smax : gmax);
}

std::vector<Poly> inter_reduce(FieldCtx& ctx, const Ordering& ord, std::vector<Poly> basis) {
  PolyOps ops(ctx, ord);
  std::sort(basis.begin(), basis.end(),
            [&](const Poly& a, const Poly& b) { return ord.less(a.lm(), b.lm()); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (const auto& t : basis[i].terms()) {
        if (t.mono == basis[i].lm()) continue;
        for (std::size_t j = 0; j < basis.size() && !changed; ++j) {
          if (j == i) continue;
          if (!basis[j].lm().divides(t.mono)) continue;
          Poly shifted = basis[j].shifted(t.mono / basis[j].lm());
          basis[i] = ops.add_scaled(basis[i], ctx.neg(t.coeff), shifted);
          changed = true;
        }
        if (changed) break;
      }
    }
  }
  return basis;
}

}  // namespace lrg
