#include "lrg/bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <thread>

#include "lrg/asfglm.hpp"
#include "lrg/bms.hpp"

namespace lrg {

std::uint64_t cell_seed(std::uint64_t base, const std::string& family, std::size_t nvars,
                        unsigned d) {
  std::uint64_t h = base ^ 0x9e3779b97f4a7c15ull;
  for (char c : family) h = (h ^ static_cast<std::uint64_t>(c)) * 0x100000001b3ull;
  h = (h ^ nvars) * 0x100000001b3ull;
  h = (h ^ d) * 0x100000001b3ull;
  return h;
}

BenchRecord run_cell(const Family& fam, const std::string& algorithm) {
  BenchRecord rec;
  rec.family = fam.name;
  rec.nvars = fam.nvars;
  rec.d = fam.d;
  rec.algorithm = algorithm;
  rec.field = fam.oracle.field().spec();
  rec.seed = fam.seed;
  rec.staircase_size = fam.expected_staircase.size();

  FieldCtx ctx(fam.oracle.field());
  TableOracle table = fam.oracle.fresh();
  auto start = std::chrono::steady_clock::now();

  GuessResult res;
  if (algorithm == "asfglm") {
    res = asfglm(ctx, table, fam.ord, fam.expected_staircase.size());
  } else if (algorithm == "abms" || algorithm == "bms") {
    Monomial stop = stopping_bound(fam.expected_staircase, fam.expected_lms, fam.ord);
    if (algorithm == "abms") {
      res = abms(ctx, table, fam.ord, fam.expected_staircase.size(), stop);
    } else {
      res = bms(ctx, table, fam.ord, stop);
    }
  } else {
    throw usage_error("unknown algorithm '" + algorithm + "'");
  }

  auto end = std::chrono::steady_clock::now();
  rec.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
  rec.queries = res.queries;
  rec.basic_ops = res.ops.basic_ops();
  rec.lms_ok = leading_monomials(res) == fam.expected_lms;
  return rec;
}

std::vector<BenchRecord> run_sweep(const BenchSpec& spec) {
  struct Cell {
    std::string family;
    unsigned d;
  };
  std::vector<Cell> cells;
  for (const auto& f : spec.families)
    for (unsigned d = spec.dmin; d <= spec.dmax; ++d) cells.push_back({f, d});

  // one record slot per (cell, algorithm); cells are independent
  std::vector<BenchRecord> records(cells.size() * spec.algorithms.size());
  auto work = [&](std::size_t ci) {
    const Cell& c = cells[ci];
    Family fam = make_family(c.family, spec.nvars, c.d, spec.field,
                             cell_seed(spec.seed, c.family, spec.nvars, c.d));
    for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai)
      records[ci * spec.algorithms.size() + ai] = run_cell(fam, spec.algorithms[ai]);
  };

  unsigned jobs = std::max(1u, spec.jobs);
  if (jobs == 1) {
    for (std::size_t ci = 0; ci < cells.size(); ++ci) work(ci);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        while (true) {
          std::size_t ci = next.fetch_add(1);
          if (ci >= cells.size()) return;
          work(ci);
        }
      });
    for (auto& t : pool) t.join();
  }
  return records;
}

const char* const kBenchCsvHeader =
    "family,nvars,d,algorithm,field,seed,staircase_size,queries,basic_ops,"
    "queries_per_S,ops_per_S3,ops_per_query,lms_ok,wall_ms";

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << kBenchCsvHeader << "\n";
  for (const auto& r : records) {
    std::ostringstream line;
    line.precision(6);
    line << r.family << ',' << r.nvars << ',' << r.d << ',' << r.algorithm << ',' << r.field
         << ',' << r.seed << ',' << r.staircase_size << ',' << r.queries << ',' << r.basic_ops
         << ',' << r.queries_per_s() << ',' << r.ops_per_s3() << ',' << r.ops_per_query() << ','
         << (r.lms_ok ? 1 : 0) << ',' << r.wall_ms;
    os << line.str() << "\n";
  }
}

}  // namespace lrg
