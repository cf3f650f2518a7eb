#include <doctest.h>

#include <random>

#include "lrg/monomial.hpp"

using namespace lrg;

namespace {
Ordering drl2() { return Ordering::parse("drl:y<x"); }
Ordering lex3() { return Ordering::parse("lex:z<y<x"); }
}  // namespace

TEST_CASE("compare: DRL and LEX definitions") {
  Ordering d = drl2();
  CHECK(d.compare(d.parse_monomial("y^2"), d.parse_monomial("x*y")) < 0);
  CHECK(d.compare(d.parse_monomial("x*y"), d.parse_monomial("x^2")) < 0);
  CHECK(d.compare(d.parse_monomial("x^2"), d.parse_monomial("y^3")) < 0);

  Ordering l = lex3();
  CHECK(l.compare(l.parse_monomial("z^3"), l.parse_monomial("y")) < 0);
  CHECK(l.compare(l.parse_monomial("y^9"), l.parse_monomial("x")) < 0);
}

TEST_CASE("divisibility and quotients") {
  Ordering d = drl2();
  Monomial xy = d.parse_monomial("x*y"), big = d.parse_monomial("x^3*y^2");
  CHECK(xy.divides(big));
  CHECK(d.render(big / xy) == "x^2*y");
  CHECK(!d.parse_monomial("x^2").divides(d.parse_monomial("x*y^3")));
  CHECK(xy.divides(xy));
  CHECK((xy / xy).is_one());
  CHECK_THROWS_AS(xy / d.parse_monomial("x^2"), Error);
}

TEST_CASE("enumerate: worked lists") {
  Ordering d = drl2();
  auto run = [&](const Ordering& o, const std::string& stop,
                 std::optional<std::uint32_t> cap) {
    std::vector<std::string> out;
    for (const auto& m : o.enumerate(o.parse_monomial(stop), cap)) out.push_back(o.render(m));
    return out;
  };
  CHECK(run(d, "x^2", {}) == std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x^2"});
  CHECK(run(d, "1", {}) == std::vector<std::string>{"1"});

  // the 12-element LEX prefix up to x*z with the degree cap 3
  Ordering l = lex3();
  CHECK(run(l, "x*z", 3) ==
        std::vector<std::string>{"1", "z", "z^2", "z^3", "y", "y*z", "y*z^2", "y^2", "y^2*z",
                                 "y^3", "x", "x*z"});
  CHECK_THROWS_AS(l.enumerate(l.parse_monomial("x*z"), {}), Error);
}

TEST_CASE("successor examples") {
  Ordering d = drl2();
  CHECK(d.render(*d.successor(d.parse_monomial("x^2"))) == "y^3");
  CHECK(d.render(*d.successor(d.parse_monomial("y^5"))) == "x*y^4");
  Ordering l2 = Ordering::parse("lex:y<x");
  CHECK(l2.render(*l2.successor(l2.parse_monomial("y^3"), 3)) == "x");
  CHECK(!l2.successor(l2.parse_monomial("x^3"), 3).has_value());
}

TEST_CASE("enumerate output is sorted, duplicate free, downward closed") {
  for (const Ordering& o :
       {drl2(), lex3(), Ordering::parse("weight:1,2:y<x"), Ordering::parse("drl:z<y<x")}) {
    std::optional<std::uint32_t> cap;
    if (!o.degree_compatible()) cap = 4;
    Monomial stop(o.nvars());
    stop[0] = 3;
    auto list = o.enumerate(stop, cap);
    REQUIRE(!list.empty());
    CHECK(list.front().is_one());
    CHECK(list.back() == stop);
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(o.less(list[i - 1], list[i]));
    for (const auto& m : list)
      for (const auto& t : list)
        if (t.divides(m))
          CHECK(std::find(list.begin(), list.end(), t) != list.end());
  }
}

TEST_CASE("successor agrees with enumerate adjacency") {
  for (const Ordering& o : {drl2(), Ordering::parse("drl:z<y<x"), lex3()}) {
    std::optional<std::uint32_t> cap = o.degree_compatible() ? std::nullopt : std::optional<std::uint32_t>(4);
    Monomial stop(o.nvars());
    stop[0] = 3;
    auto list = o.enumerate(stop, cap);
    for (std::size_t i = 0; i + 1 < list.size(); ++i)
      CHECK(*o.successor(list[i], cap) == list[i + 1]);
  }
}

TEST_CASE("multiplicativity on random triples") {
  std::mt19937_64 rng(11);
  for (const Ordering& o : {drl2(), lex3(), Ordering::parse("weight:2,3,1:z<y<x")}) {
    for (int i = 0; i < 300; ++i) {
      std::vector<std::uint32_t> a(o.nvars()), b(o.nvars()), s(o.nvars());
      for (auto& v : a) v = rng() % 5;
      for (auto& v : b) v = rng() % 5;
      for (auto& v : s) v = rng() % 5;
      Monomial ma(a), mb(b), ms(s);
      CHECK(o.compare(ma, mb) == o.compare(ma * ms, mb * ms));
      CHECK(o.compare(Monomial::one(o.nvars()), ma) <= 0);
    }
  }
}

TEST_CASE("ordering spec round trip and rendering") {
  for (const std::string& s : {"drl:y<x", "lex:z<y<x", "weight:2,3:y<x"}) {
    Ordering o = Ordering::parse(s);
    CHECK(o.spec() == s);
  }
  Ordering d = drl2();
  CHECK(d.render(d.parse_monomial("x^3*y^2")) == "x^3*y^2");
  CHECK(d.render(Monomial::one(2)) == "1");
  CHECK(d.render(d.parse_monomial("y")) == "y");
  CHECK_THROWS_AS(d.parse_monomial("x*w"), Error);
}
