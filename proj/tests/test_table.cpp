#include <doctest.h>

#include "lrg/family.hpp"
#include "lrg/table.hpp"

using namespace lrg;

namespace {
Ordering drl2() { return Ordering::parse("drl:y<x"); }
}  // namespace

TEST_CASE("builtin values and memoized query counting") {
  Ordering d = drl2();
  TableOracle bin = builtin_table("binomial", Field::rationals());
  FieldCtx q(Field::rationals());
  CHECK(q.to_string(bin.query(d.parse_monomial("x^3"))) == "1");       // C(3,0)
  CHECK(q.to_string(bin.query(d.parse_monomial("x^4*y"))) == "4");     // C(4,1)
  CHECK(bin.distinct_queries() == 2);
  bin.query(d.parse_monomial("x^4*y"));
  CHECK(bin.distinct_queries() == 2);  // repeated access is free

  TableOracle delta = builtin_table("delta", Field::rationals());
  CHECK(q.to_string(delta.query(d.parse_monomial("x^4*y"))) == "1");
  CHECK(q.is_zero(delta.query(d.parse_monomial("x^2*y^3"))));

  TableOracle circle = builtin_table("circle", Field::rationals());
  CHECK(q.to_string(circle.query(d.parse_monomial("x*y"))) == "1");  // 1+1-1

  Ordering l3 = Ordering::parse("lex:z<y<x");
  TableOracle fib3 = builtin_table("fib3d", Field::rationals());
  CHECK(q.to_string(fib3.query(l3.parse_monomial("1"))) == "1");  // F_1
  CHECK(q.to_string(fib3.query(l3.parse_monomial("x"))) == "5");  // F_5
  CHECK_THROWS_AS(builtin_table("nope", Field::rationals()), Error);
}

TEST_CASE("bracket evaluation") {
  Ordering d = drl2();
  FieldCtx q(Field::rationals());
  PolyOps ops(q, d);
  TableOracle bin = builtin_table("binomial", Field::rationals());

  CHECK(q.is_zero(bracket(q, bin, ops.parse("x*y-y-1"), d.parse_monomial("1"))));  // Pascal
  CHECK(q.to_string(bracket(q, bin, ops.parse("1"), d.parse_monomial("1"))) == "1");
  CHECK(q.to_string(bracket(q, bin, ops.parse("x^3-2*x^2+x"), d.parse_monomial("y^2"))) == "1");

  // one query per distinct support index, |supp| muls, |supp|-1 adds
  TableOracle fresh = bin.fresh();
  FieldCtx cnt(Field::rationals());
  bracket(cnt, fresh, ops.parse("x*y-y-1"), d.parse_monomial("x"));
  CHECK(fresh.distinct_queries() == 3);
  CHECK(cnt.counter().multiplications == 3);
  CHECK(cnt.counter().additions == 2);
}

TEST_CASE("explicit tables report missing indices") {
  Ordering d = drl2();
  FieldCtx q(Field::rationals());
  TableOracle t = explicit_table(2, Field::rationals(),
                                 {{d.parse_monomial("1"), q.from_int(7)}}, d);
  CHECK(q.to_string(t.query(d.parse_monomial("1"))) == "7");
  CHECK_THROWS_WITH_AS(t.query(d.parse_monomial("x*y")), doctest::Contains("x*y"), Error);
}

TEST_CASE("from_gb: the F_11 grid of Example-style data") {
  Ordering d = drl2();
  Field f11 = Field::prime(11);
  FieldCtx ctx(f11);
  PolyOps ops(ctx, d);
  std::vector<Poly> rels = {ops.parse("y^2-y"), ops.parse("x^2*y-x*y"),
                            ops.parse("x^4-6*x^3+11*x^2-6*x")};
  std::vector<std::pair<Monomial, Scalar>> vals = {
      {d.parse_monomial("1"), ctx.from_int(1)},   {d.parse_monomial("y"), ctx.from_int(2)},
      {d.parse_monomial("x"), ctx.from_int(3)},   {d.parse_monomial("x*y"), ctx.from_int(4)},
      {d.parse_monomial("x^2"), ctx.from_int(3)}, {d.parse_monomial("x^3"), ctx.from_int(-1)}};
  TableOracle t = from_gb(d, f11, rels, vals);

  auto at = [&](unsigned i, unsigned j) {
    Monomial m(2);
    m[0] = i;
    m[1] = j;
    return t.query(m).fp;
  };
  // first grid rows of the documented sequence (-1 = 10 mod 11)
  CHECK(at(0, 0) == 1); CHECK(at(0, 1) == 2); CHECK(at(0, 2) == 2); CHECK(at(0, 3) == 2);
  CHECK(at(1, 0) == 3); CHECK(at(1, 1) == 4); CHECK(at(1, 2) == 4);
  CHECK(at(2, 0) == 3); CHECK(at(2, 1) == 4);
  CHECK(at(3, 0) == 10); CHECK(at(3, 1) == 4);
  CHECK(at(4, 0) == 1); CHECK(at(4, 1) == 4);
}

TEST_CASE("from_gb: one variable geometric and a closed-form cross check") {
  Ordering x1(OrderKind::DRL, {"x"});
  FieldCtx q(Field::rationals());
  PolyOps ops(q, x1);
  TableOracle t = from_gb(x1, Field::rationals(), {ops.parse("x-2")},
                          {{x1.parse_monomial("1"), q.one()}});
  Monomial m(1);
  m[0] = 10;
  CHECK(q.to_string(t.query(m)) == "1024");

  // u = 2^i 3^j (i+1): relations y-3 and x^2-4x+4, staircase {1, x}
  Ordering d = drl2();
  PolyOps ops2(q, d);
  TableOracle u = from_gb(d, Field::rationals(), {ops2.parse("y-3"), ops2.parse("x^2-4*x+4")},
                          {{d.parse_monomial("1"), q.one()}, {d.parse_monomial("x"), q.from_int(4)}});
  CHECK(q.to_string(u.query(d.parse_monomial("x*y"))) == "12");  // 2*3*2
}

TEST_CASE("from_gb rejects inconsistent systems naming an index") {
  Ordering d = drl2();
  FieldCtx q(Field::rationals());
  PolyOps ops(q, d);
  // x*y - y and y^2 - x disagree at x*y^2 once the values force a != b
  std::vector<Poly> rels = {ops.parse("x*y-y"), ops.parse("x^2-1"), ops.parse("y^2-x")};
  std::vector<std::pair<Monomial, Scalar>> vals = {{d.parse_monomial("1"), q.from_int(1)},
                                                   {d.parse_monomial("x"), q.from_int(2)},
                                                   {d.parse_monomial("y"), q.from_int(5)}};
  CHECK_THROWS_AS(from_gb(d, Field::rationals(), rels, vals), Error);
  // non-antichain leading monomials are rejected up front
  CHECK_THROWS_AS(from_gb(d, Field::rationals(),
                          {ops.parse("x-1"), ops.parse("x^2-1"), ops.parse("y-1")},
                          {{d.parse_monomial("1"), q.one()}}),
                  Error);
}

TEST_CASE("family instances expose the documented staircase sizes") {
  Field f = Field::prime(65521);
  CHECK(make_family("rectangle", 2, 4, f, 1).expected_staircase.size() == 8);
  CHECK(make_family("lshape", 3, 4, f, 1).expected_staircase.size() == 10);   // 3d-2
  CHECK(make_family("simplex", 2, 5, f, 1).expected_staircase.size() == 15);  // d(d+1)/2
  CHECK(make_family("shape", 3, 4, f, 1).expected_staircase.size() == 4);
  CHECK_THROWS_AS(make_family("rectangle", 2, 4, Field::rationals(), 1), Error);
  CHECK_THROWS_AS(make_family("blob", 2, 4, f, 1), Error);
}
