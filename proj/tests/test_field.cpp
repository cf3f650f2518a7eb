#include <doctest.h>

#include <random>

#include "lrg/field.hpp"

using namespace lrg;

TEST_CASE("prime field basics") {
  FieldCtx f11(Field::prime(11));
  CHECK(f11.to_string(f11.add(f11.from_int(10), f11.from_int(4))) == "3");
  CHECK(f11.to_string(f11.mul(f11.from_int(3), f11.from_int(4))) == "1");

  // 3/4 in F_11: brute-force inverse search as the independent oracle
  std::uint64_t expected = 0;
  for (std::uint64_t k = 1; k < 11; ++k)
    if (4 * k % 11 == 3) expected = k;
  CHECK(expected == 9);
  CHECK(f11.div(f11.from_int(3), f11.from_int(4)).fp == expected);
}

TEST_CASE("rational basics") {
  FieldCtx q(Field::rationals());
  Scalar third = q.parse("1/3");
  CHECK(q.is_one(q.mul(third, q.from_int(3))));
  CHECK(q.to_string(q.parse("4/6")) == "2/3");  // lowest terms
  CHECK(q.to_string(q.neg(q.parse("1/2"))) == "-1/2");
  CHECK(q.is_zero(q.sub(q.parse("7/3"), q.parse("14/6"))));
}

TEST_CASE("division by zero and bad specs") {
  FieldCtx f11(Field::prime(11));
  CHECK_THROWS_AS(f11.div(f11.one(), f11.zero()), Error);
  CHECK_THROWS_AS(Field::prime(10), Error);
  CHECK_THROWS_AS(Field::parse("fp:abc"), Error);
  CHECK_THROWS_AS(Field::parse("gf:11"), Error);
  CHECK(Field::parse("fp:65521").p == 65521);
  CHECK(Field::parse("q").kind == FieldKind::Rational);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (Field field : {Field::prime(11), Field::prime(65521), Field::rationals()}) {
    FieldCtx ctx(field);
    for (int i = 0; i < 200; ++i) {
      long av = long(rng() % 200) - 100, bv = long(rng() % 200) - 100,
           cv = long(rng() % 200) - 100;
      Scalar a = ctx.from_int(av), b = ctx.from_int(bv), c = ctx.from_int(cv);
      CHECK(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
      CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
      CHECK(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
      CHECK(ctx.add(a, ctx.neg(a)) == ctx.zero());
      if (!ctx.is_zero(b)) CHECK(ctx.mul(b, ctx.inv(b)) == ctx.one());
    }
  }
}

TEST_CASE("operation counters are deterministic and monotone") {
  auto run = [] {
    FieldCtx ctx(Field::prime(101));
    Scalar acc = ctx.one();
    for (int i = 1; i < 50; ++i) {
      acc = ctx.add(acc, ctx.mul(ctx.from_int(i), ctx.from_int(i + 1)));
      if (i % 7 == 0) acc = ctx.div(acc, ctx.from_int(3));
    }
    return ctx.counter();
  };
  OpCounter a = run(), b = run();
  CHECK(a.additions == b.additions);
  CHECK(a.multiplications == b.multiplications);
  CHECK(a.divisions == b.divisions);
  CHECK(a.basic_ops() == a.additions + a.multiplications + a.divisions);
}
