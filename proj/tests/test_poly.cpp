#include <doctest.h>

#include "lrg/poly.hpp"

using namespace lrg;

TEST_CASE("parse and render polynomials") {
  Ordering ord = Ordering::parse("drl:y<x");
  FieldCtx ctx(Field::rationals());
  PolyOps ops(ctx, ord);

  Poly p = ops.parse("x*y-y-1");
  CHECK(ord.render(p.lm()) == "x*y");
  CHECK(p.support_size() == 3);
  CHECK(ops.render(p) == "x*y-y-1");

  CHECK(ops.render(ops.parse("x^2 - 1/3*x*y - y^2 - 5/3*x + 7/3*y - 1/3")) ==
        "x^2-1/3*x*y-y^2-5/3*x+7/3*y-1/3");
  CHECK(ops.render(ops.parse("y + 2 - y")) == "2");
  CHECK(ops.render(ops.parse("3*x - x - 2*x")) == "0");
  CHECK(ops.render(ops.parse("-x + y")) == "-x+y");
}

TEST_CASE("prime field rendering uses canonical residues") {
  Ordering ord = Ordering::parse("drl:y<x");
  FieldCtx ctx(Field::prime(11));
  PolyOps ops(ctx, ord);
  CHECK(ops.render(ops.parse("x^4-6*x^3+11*x^2-6*x")) == "x^4+5*x^3+5*x");
}

TEST_CASE("arithmetic helpers") {
  Ordering ord = Ordering::parse("drl:y<x");
  FieldCtx ctx(Field::rationals());
  PolyOps ops(ctx, ord);

  Poly f = ops.parse("x^2-x");
  Poly g = ops.parse("x-1");
  CHECK(ops.render(ops.add_scaled(f, ctx.from_int(-1), g)) == "x^2-2*x+1");
  CHECK(ops.render(ops.make_monic(ops.parse("2*x^2-4"))) == "x^2-2");
  CHECK(ops.render(ops.parse("x*y-1").shifted(ord.parse_monomial("y"))) == "x*y^2-y");
  CHECK(ops.render(ops.divide(ops.parse("3*x+6"), ctx.from_int(3))) == "x+2");
}
