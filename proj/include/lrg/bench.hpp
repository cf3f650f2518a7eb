#ifndef LRG_BENCH_HPP
#define LRG_BENCH_HPP

#include <iosfwd>

#include "lrg/family.hpp"
#include "lrg/result.hpp"

namespace lrg {

struct BenchRecord {
  std::string family;
  std::size_t nvars = 2;
  unsigned d = 2;
  std::string algorithm;
  std::string field;
  std::uint64_t seed = 0;
  std::uint64_t staircase_size = 0;
  std::uint64_t queries = 0;
  std::uint64_t basic_ops = 0;
  bool lms_ok = false;
  double wall_ms = 0.0;

  double queries_per_s() const { return double(queries) / double(staircase_size); }
  double ops_per_s3() const {
    double s = double(staircase_size);
    return double(basic_ops) / (s * s * s);
  }
  double ops_per_query() const { return double(basic_ops) / double(queries); }
};

struct BenchSpec {
  std::vector<std::string> families;    // subset of rectangle/lshape/simplex/shape
  std::size_t nvars = 2;
  unsigned dmin = 2;
  unsigned dmax = 10;
  std::vector<std::string> algorithms;  // subset of bms/abms/asfglm
  Field field = Field::prime(65521);
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

/// Runs one benchmark cell: builds the family table, runs the algorithm with
/// the sharp stopping monomial (BMS family) or the true staircase size
/// (both), and verifies the guessed leading monomials against the family's.
BenchRecord run_cell(const Family& fam, const std::string& algorithm);

/// Cross product of the spec; cells of one (family, nvars, d) share the seed
/// and therefore the sequence. Deterministic up to wall_ms.
std::vector<BenchRecord> run_sweep(const BenchSpec& spec);

extern const char* const kBenchCsvHeader;
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

/// Seed for one sweep cell, mixed deterministically from the base seed.
std::uint64_t cell_seed(std::uint64_t base, const std::string& family, std::size_t nvars,
                        unsigned d);

}  // namespace lrg

#endif
