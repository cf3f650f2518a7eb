#include "lrg/table.hpp"

#include <algorithm>

namespace lrg {

const Scalar& TableOracle::query(const Monomial& idx) {
  if (idx.nvars() != nvars_) throw Error(1, "query index has wrong variable count");
  auto it = cache_.find(idx);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(idx, src_(idx)).first->second;
}

Scalar bracket(FieldCtx& ctx, TableOracle& t, const Poly& f, const Monomial& shift) {
  Scalar acc = ctx.zero();
  bool first = true;
  Monomial idx(shift.nvars());
  for (const auto& term : f.terms()) {
    for (std::size_t i = 0; i < idx.nvars(); ++i) idx[i] = term.mono[i] + shift[i];
    Scalar prod = ctx.mul(term.coeff, t.query(idx));
    if (first) {
      acc = std::move(prod);
      first = false;
    } else {
      acc = ctx.add(acc, prod);
    }
  }
  return acc;
}

TableOracle explicit_table(std::size_t nvars, Field field,
                           std::vector<std::pair<Monomial, Scalar>> entries,
                           const Ordering& ord_for_msgs) {
  auto map = std::make_shared<std::unordered_map<Monomial, Scalar, MonomialHash>>();
  for (auto& [m, v] : entries) (*map)[m] = v;
  Ordering ord = ord_for_msgs;
  return TableOracle(nvars, field,
                     [map, ord](const Monomial& idx) -> Scalar {
                       auto it = map->find(idx);
                       if (it == map->end())
                         throw table_error("table has no entry at index " + ord.render(idx));
                       return it->second;
                     },
                     "explicit");
}

namespace {

// Internal recursive filler for from_gb tables. Owns its own field context so
// table generation never pollutes a run's operation counter.
struct GbFiller {
  Ordering ord;
  std::shared_ptr<FieldCtx> ctx;
  std::vector<Poly> rels;  // monic, LMs form an antichain
  std::unordered_map<Monomial, Scalar, MonomialHash> memo;

  Scalar value_at(const Monomial& m) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    const Poly* g = nullptr;
    for (const auto& r : rels)
      if (r.lm().divides(m)) {
        g = &r;
        break;
      }
    if (!g) throw table_error("staircase value missing at index " + ord.render(m));
    Monomial v = m / g->lm();
    // [v*g] = 0  =>  u_m = -sum of trailing coefficients times shifted values
    Scalar acc = ctx->zero();
    for (std::size_t i = 1; i < g->terms().size(); ++i) {
      const auto& t = g->terms()[i];
      acc = ctx->add(acc, ctx->mul(t.coeff, value_at(t.mono * v)));
    }
    Scalar r = ctx->neg(acc);
    memo.emplace(m, r);
    return r;
  }
};

}  // namespace

TableOracle from_gb(const Ordering& ord, Field field, std::vector<Poly> relations,
                    std::vector<std::pair<Monomial, Scalar>> staircase_values) {
  auto filler = std::make_shared<GbFiller>();
  filler->ord = ord;
  filler->ctx = std::make_shared<FieldCtx>(field);
  PolyOps ops(*filler->ctx, ord);

  std::vector<Monomial> lms;
  for (auto& r : relations) {
    if (r.is_zero()) throw table_error("zero relation in table definition");
    filler->rels.push_back(ops.make_monic(r));
    lms.push_back(r.lm());
  }
  for (std::size_t i = 0; i < lms.size(); ++i)
    for (std::size_t j = 0; j < lms.size(); ++j)
      if (i != j && lms[i].divides(lms[j]))
        throw table_error("relation leading monomials must form an antichain");
  std::sort(filler->rels.begin(), filler->rels.end(),
            [&](const Poly& a, const Poly& b) { return ord.less(a.lm(), b.lm()); });

  Staircase expected = Staircase::stabilize(lms);  // only used for the window
  std::vector<Monomial> stair;
  {
    // staircase of the LM ideal: breadth-first closure from 1
    std::vector<Monomial> frontier{Monomial::one(ord.nvars())};
    std::unordered_map<Monomial, bool, MonomialHash> seen;
    while (!frontier.empty()) {
      Monomial m = frontier.back();
      frontier.pop_back();
      if (seen.count(m)) continue;
      bool outside = std::any_of(lms.begin(), lms.end(),
                                 [&](const Monomial& l) { return l.divides(m); });
      seen[m] = true;
      if (outside) continue;
      stair.push_back(m);
      if (stair.size() > 100000) throw table_error("staircase of the relation set is not finite");
      for (std::size_t i = 0; i < ord.nvars(); ++i)
        frontier.push_back(m * Monomial::var(ord.nvars(), i));
    }
  }
  if (stair.size() != staircase_values.size())
    throw table_error("expected " + std::to_string(stair.size()) + " staircase values, got " +
                      std::to_string(staircase_values.size()));
  for (auto& [m, v] : staircase_values) {
    bool inside = std::none_of(lms.begin(), lms.end(),
                               [&](const Monomial& l) { return l.divides(m); });
    if (!inside) throw table_error("value given at non-staircase index " + ord.render(m));
    if (!filler->memo.emplace(m, v).second)
      throw table_error("duplicate staircase value at " + ord.render(m));
  }

  // consistency window: every relation must vanish at all shifts of degree
  // up to 2*maxdeg(staircase)+2
  std::uint32_t maxdeg = 0;
  for (const auto& m : stair) maxdeg = std::max(maxdeg, m.degree());
  std::uint32_t window = 2 * maxdeg + 2;
  Ordering plain(OrderKind::DRL, ord.names());
  for (const auto& g : filler->rels) {
    Monomial shift = Monomial::one(ord.nvars());
    while (true) {
      Scalar acc = filler->ctx->zero();
      for (const auto& t : g.terms())
        acc = filler->ctx->add(acc, filler->ctx->mul(t.coeff, filler->value_at(t.mono * shift)));
      if (!filler->ctx->is_zero(acc))
        throw table_error("inconsistent relation system at index " + ord.render(g.lm() * shift));
      auto nx = plain.successor(shift, window);
      if (!nx) break;
      shift = *nx;
    }
  }

  return TableOracle(ord.nvars(), field,
                     [filler](const Monomial& idx) { return filler->value_at(idx); }, "from_gb");
}

namespace {

Scalar scalar_from_mpz(const Field& f, const mpz_class& z) {
  Scalar s;
  if (f.kind == FieldKind::Prime) {
    mpz_class m = z % static_cast<unsigned long>(f.p);
    if (m < 0) m += static_cast<unsigned long>(f.p);
    s.fp = m.get_ui();
  } else {
    s.mutable_rat() = z;
  }
  return s;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class fib(unsigned long n) {
  mpz_class r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

Field builtin_default_field(const std::string& name) {
  return name == "f11" ? Field::prime(11) : Field::rationals();
}

TableOracle builtin_table(const std::string& name, Field field) {
  if (name == "binomial") {
    return TableOracle(2, field,
                       [field](const Monomial& m) { return scalar_from_mpz(field, binom(m[0], m[1])); },
                       name);
  }
  if (name == "delta") {
    return TableOracle(2, field,
                       [field](const Monomial& m) {
                         return scalar_from_mpz(field, m[0] == 4 && m[1] == 1 ? 1 : 0);
                       },
                       name);
  }
  if (name == "t23") {
    return TableOracle(2, field,
                       [field](const Monomial& m) {
                         mpz_class v = 1;
                         mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), m[0]);
                         mpz_class p3;
                         mpz_ui_pow_ui(p3.get_mpz_t(), 3, m[1]);
                         v *= p3 * (m[0] + 1);
                         return scalar_from_mpz(field, v);
                       },
                       name);
  }
  if (name == "circle") {
    return TableOracle(2, field,
                       [field](const Monomial& m) {
                         mpz_class i = m[0], j = m[1];
                         return scalar_from_mpz(field, i * i + j * j - 1);
                       },
                       name);
  }
  if (name == "fib2d") {
    return TableOracle(2, field,
                       [field](const Monomial& m) { return scalar_from_mpz(field, fib(m[0] + 1)); },
                       name);
  }
  if (name == "fib3d") {
    return TableOracle(3, field,
                       [field](const Monomial& m) {
                         return scalar_from_mpz(field, fib(4ul * m[0] + m[2] + 1));
                       },
                       name);
  }
  if (name == "f11") {
    if (field.kind != FieldKind::Prime || field.p != 11)
      field = Field::prime(11);
    Ordering ord(OrderKind::DRL, {"x", "y"});
    FieldCtx ctx(field);
    PolyOps ops(ctx, ord);
    std::vector<Poly> rels = {ops.parse("y^2-y"), ops.parse("x^2*y-x*y"),
                              ops.parse("x^4-6*x^3+11*x^2-6*x")};
    std::vector<std::pair<Monomial, Scalar>> vals = {
        {ord.parse_monomial("1"), ctx.from_int(1)},  {ord.parse_monomial("y"), ctx.from_int(2)},
        {ord.parse_monomial("x"), ctx.from_int(3)},  {ord.parse_monomial("x*y"), ctx.from_int(4)},
        {ord.parse_monomial("x^2"), ctx.from_int(3)}, {ord.parse_monomial("x^3"), ctx.from_int(-1)}};
    TableOracle t = from_gb(ord, field, rels, vals);
    return TableOracle(2, field,
                       [src = t.fresh()](const Monomial& idx) mutable { return src.query(idx); },
                       name);
  }
  throw usage_error("unknown builtin table '" + name + "'");
}

}  // namespace lrg
