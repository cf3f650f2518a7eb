#include "lrg/family.hpp"

#include <algorithm>
#include <random>

#include "lrg/asfglm.hpp"

namespace lrg {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

struct Drawer {
  std::mt19937_64 rng;
  std::uint64_t p;

  std::uint64_t nonzero() { return 1 + rng() % (p - 1); }

  std::vector<std::uint64_t> distinct_nonzero(std::size_t count) {
    std::vector<std::uint64_t> out;
    while (out.size() < count) {
      std::uint64_t v = nonzero();
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  }
};

// weighted point evaluations: u_e = sum_k gamma_k * prod_v coord_{k,v}^e_v
struct PointSum {
  std::uint64_t p;
  std::vector<std::vector<std::uint64_t>> points;
  std::vector<std::uint64_t> weights;

  Scalar operator()(const Monomial& e) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      std::uint64_t term = weights[k];
      for (std::size_t v = 0; v < e.nvars(); ++v) {
        if (e[v] == 0) continue;
        term = term * powmod(points[k][v], e[v], p) % p;
      }
      acc = (acc + term) % p;
    }
    Scalar s;
    s.fp = acc;
    return s;
  }
};

std::vector<Monomial> family_basis_lms(const std::string& name, std::size_t n, unsigned d) {
  auto mono = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    Monomial m(n);
    m[0] = a;
    if (n > 1) m[1] = b;
    if (n > 2) m[2] = c;
    return m;
  };
  std::vector<Monomial> lms;
  if (name == "rectangle") {
    if (n == 2) {
      lms = {mono(0, d / 2, 0), mono(d, 0, 0)};
    } else {
      lms = {mono(0, 0, (d + 2) / 3), mono(0, d / 2, 0), mono(d, 0, 0)};
    }
  } else if (name == "lshape") {
    if (n == 2) {
      lms = {mono(1, 1, 0), mono(0, d, 0), mono(d, 0, 0)};
    } else {
      lms = {mono(0, 1, 1), mono(1, 0, 1), mono(1, 1, 0),
             mono(0, 0, d), mono(0, d, 0), mono(d, 0, 0)};
    }
  } else if (name == "simplex") {
    // every monomial of total degree d
    Monomial m(n);
    m[n - 1] = d;
    Ordering plain(OrderKind::DRL, std::vector<std::string>(n, "v"));
    while (true) {
      lms.push_back(m);
      auto nx = plain.successor(m, d);
      if (!nx || nx->degree() != d) break;
      m = *nx;
    }
  } else if (name == "shape") {
    lms.push_back(mono(0, 0, 0));
    lms.back()[n - 1] = d;
    for (std::size_t v = 0; v + 1 < n; ++v) lms.push_back(Monomial::var(n, v));
  } else {
    throw usage_error("unknown family '" + name + "'");
  }
  return lms;
}

PointSum family_points(const std::string& name, std::size_t n, unsigned d, std::uint64_t p,
                       std::uint64_t seed) {
  Drawer draw{std::mt19937_64(seed), p};
  PointSum ps;
  ps.p = p;
  auto add_point = [&](std::vector<std::uint64_t> coords) {
    ps.points.push_back(std::move(coords));
    ps.weights.push_back(draw.nonzero());
  };

  if (name == "rectangle") {
    std::vector<std::vector<std::uint64_t>> axes;
    axes.push_back(draw.distinct_nonzero(d));
    axes.push_back(draw.distinct_nonzero(d / 2));
    if (n == 3) axes.push_back(draw.distinct_nonzero((d + 2) / 3));
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<std::uint64_t> coords(n);
      for (std::size_t v = 0; v < n; ++v) coords[v] = axes[v][idx[v]];
      add_point(std::move(coords));
      std::size_t v = 0;
      for (; v < n; ++v) {
        if (++idx[v] < axes[v].size()) break;
        idx[v] = 0;
      }
      if (v == n) break;
    }
  } else if (name == "lshape") {
    add_point(std::vector<std::uint64_t>(n, 0));  // the origin
    for (std::size_t v = 0; v < n; ++v)
      for (auto c : draw.distinct_nonzero(d - 1)) {
        std::vector<std::uint64_t> coords(n, 0);
        coords[v] = c;
        add_point(std::move(coords));
      }
  } else if (name == "simplex") {
    std::size_t count = n == 2 ? std::size_t(d) * (d + 1) / 2
                               : std::size_t(d) * (d + 1) * (d + 2) / 6;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<std::uint64_t> coords(n);
      for (auto& c : coords) c = draw.nonzero();
      add_point(std::move(coords));
    }
  } else {  // shape
    auto roots = draw.distinct_nonzero(d);
    // the other coordinates follow a random polynomial in the last one
    std::vector<std::vector<std::uint64_t>> fcoef(n - 1);
    for (auto& f : fcoef) {
      f.resize(d);
      for (auto& c : f) c = draw.rng() % p;
    }
    for (auto r : roots) {
      std::vector<std::uint64_t> coords(n);
      coords[n - 1] = r;
      for (std::size_t v = 0; v + 1 < n; ++v) {
        std::uint64_t val = 0;
        for (std::size_t k = fcoef[v].size(); k-- > 0;) val = (val * r + fcoef[v][k]) % p;
        coords[v] = val;
      }
      add_point(std::move(coords));
    }
  }
  return ps;
}

}  // namespace

Family make_family(const std::string& name, std::size_t nvars, unsigned d, Field field,
                   std::uint64_t seed) {
  if (nvars != 2 && nvars != 3) throw usage_error("families are defined for 2 or 3 variables");
  if (d < 2) throw usage_error("family parameter d must be at least 2");
  if (field.kind != FieldKind::Prime) throw usage_error("families need a prime field");

  std::vector<std::string> names =
      nvars == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};
  Ordering ord(name == "shape" ? OrderKind::LEX : OrderKind::DRL, names);

  std::vector<Monomial> lms = family_basis_lms(name, nvars, d);
  Staircase stair = Staircase::stabilize([&] {
    // the staircase is finite, walk it from 1
    std::vector<Monomial> inside;
    std::vector<Monomial> frontier{Monomial::one(nvars)};
    std::unordered_map<Monomial, bool, MonomialHash> seen;
    while (!frontier.empty()) {
      Monomial m = frontier.back();
      frontier.pop_back();
      if (seen.count(m)) continue;
      seen[m] = true;
      if (std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); }))
        continue;
      inside.push_back(m);
      for (std::size_t i = 0; i < nvars; ++i) frontier.push_back(m * Monomial::var(nvars, i));
    }
    return inside;
  }());
  if (field.p <= stair.size())
    throw usage_error("field too small for family genericity: need p > " +
                      std::to_string(stair.size()));

  std::sort(lms.begin(), lms.end(), OrdLess{&ord});

  const int max_retries = 32;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    PointSum ps = family_points(name, nvars, d, field.p, s);
    TableOracle oracle(nvars, field, ps, "family:" + name);

    // self-verification: the guessed leading monomials must match
    bool ok = false;
    try {
      FieldCtx ctx(field);
      TableOracle probe = oracle.fresh();
      GuessResult r = asfglm(ctx, probe, ord, stair.size());
      ok = leading_monomials(r) == lms;
    } catch (const RunSfglmError&) {
      ok = false;
    }
    if (ok) {
      Family fam{name, nvars, d, ord, lms, stair, s, std::move(oracle)};
      return fam;
    }
  }
  throw Error(5, "family self-verification exhausted its retries for " + name);
}

Family parse_family_spec(const std::string& spec, Field field, std::uint64_t seed) {
  // family:<name>:<nvars>:<d>
  std::string rest = spec;
  if (rest.rfind("family:", 0) == 0) rest = rest.substr(7);
  auto c1 = rest.find(':');
  auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw usage_error("family spec must look like family:<name>:<nvars>:<d>");
  std::string name = rest.substr(0, c1);
  std::size_t nv = std::stoul(rest.substr(c1 + 1, c2 - c1 - 1));
  unsigned d = static_cast<unsigned>(std::stoul(rest.substr(c2 + 1)));
  return make_family(name, nv, d, field, seed);
}

}  // namespace lrg
