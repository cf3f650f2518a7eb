#ifndef LRG_FAMILY_HPP
#define LRG_FAMILY_HPP

#include <cstdint>
#include <string>

#include "lrg/result.hpp"
#include "lrg/table.hpp"

namespace lrg {

/// A benchmark sequence family instance. The oracle member is unqueried;
/// every run should take its own fresh() copy so caches and counters stay
/// per run.
struct Family {
  std::string name;
  std::size_t nvars = 2;
  unsigned d = 2;
  Ordering ord;  // canonical ordering the family is benchmarked under
  std::vector<Monomial> expected_lms;
  Staircase expected_staircase;
  std::uint64_t seed = 0;  // the seed that passed self-verification
  TableOracle oracle;
};

/// Families of ideals of relations behind the benchmarks, realized as
/// weighted sums of point evaluations over F_p:
///   rectangle  grid of generic points; basis y^(d/2), x^d
///              (3D adds z^ceil(d/3))
///   lshape     generic points on the coordinate axes plus the origin;
///              basis xy, y^d, x^d (3D: all products of two variables and
///              the three pure powers)
///   simplex    generic points, one per monomial of degree < d; basis all
///              monomials of degree d
///   shape      generic points on the graph of a random polynomial map;
///              basis x_n^d and x_i - f_i(x_n), benchmarked under LEX
/// Construction is seeded and deterministic; the generator verifies itself
/// by running the adaptive Scalar-FGLM guesser and retries with the next
/// seed on a leading-monomial mismatch (bounded retries, exit code 5).
Family make_family(const std::string& name, std::size_t nvars, unsigned d, Field field,
                   std::uint64_t seed);

/// Parses `family:<name>:<nvars>:<d>` (used by the CLI table source).
Family parse_family_spec(const std::string& spec, Field field, std::uint64_t seed);

}  // namespace lrg

#endif
