// lrg: guess the ideal of linear recurrence relations of a multidimensional
// sequence, trace the guessing step by step, or sweep the benchmark families.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lrg/asfglm.hpp"
#include "lrg/bench.hpp"
#include "lrg/bms.hpp"
#include "lrg/family.hpp"
#include "lrg/json_io.hpp"

using namespace lrg;

namespace {

struct GuessConfig {
  std::string table;
  std::string order;
  std::string field;
  std::string algo = "bms";
  std::string stop;
  std::optional<std::uint64_t> bound;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = 42;
  std::uint64_t max_staircase = 4096;
  bool inter_reduce_flag = false;
  std::string out = "-";
};

struct ResolvedRun {
  TableOracle oracle;
  Ordering ord;
  Field field;
};

ResolvedRun resolve_table(const GuessConfig& cfg) {
  std::optional<Field> field;
  if (!cfg.field.empty()) field = Field::parse(cfg.field);

  if (cfg.table.rfind("builtin:", 0) == 0) {
    std::string name = cfg.table.substr(8);
    Field f = field.value_or(builtin_default_field(name));
    TableOracle t = builtin_table(name, f);
    if (cfg.order.empty()) throw usage_error("--order is required for builtin tables");
    Ordering ord = Ordering::parse(cfg.order);
    if (ord.nvars() != t.nvars())
      throw usage_error("ordering has " + std::to_string(ord.nvars()) + " variables, table has " +
                        std::to_string(t.nvars()));
    return {std::move(t), std::move(ord), f};
  }
  if (cfg.table.rfind("family:", 0) == 0) {
    Field f = field.value_or(Field::prime(65521));
    Family fam = parse_family_spec(cfg.table, f, cfg.seed);
    Ordering ord = cfg.order.empty() ? fam.ord : Ordering::parse(cfg.order);
    return {fam.oracle.fresh(), std::move(ord), f};
  }
  LoadedTable lt = load_table_file(cfg.table);
  Field f = lt.oracle.field();
  Ordering ord = cfg.order.empty()
                     ? (lt.order ? *lt.order
                                 : throw usage_error("--order is required for this table"))
                     : Ordering::parse(cfg.order);
  return {std::move(lt.oracle), std::move(ord), f};
}

Monomial auto_stop(const GuessConfig& cfg, const Ordering& ord) {
  if (cfg.table.rfind("family:", 0) != 0)
    throw usage_error("--stop auto needs a family table (known target staircase)");
  Field f = cfg.field.empty() ? Field::prime(65521) : Field::parse(cfg.field);
  Family fam = parse_family_spec(cfg.table, f, cfg.seed);
  return stopping_bound(fam.expected_staircase, fam.expected_lms, ord);
}

int run_guess(const GuessConfig& cfg, bool trace_mode) {
  ResolvedRun run = resolve_table(cfg);
  FieldCtx ctx(run.field);
  std::vector<std::string> trace;

  GuessResult res;
  bool run_sfglm = false;
  std::optional<Monomial> stop;

  if (cfg.algo == "bms" || cfg.algo == "abms") {
    if (cfg.stop.empty()) throw usage_error("--stop is required for the BMS family");
    stop = cfg.stop == "auto" ? auto_stop(cfg, run.ord) : run.ord.parse_monomial(cfg.stop);
    BmsOptions opts;
    opts.inter_reduce = cfg.inter_reduce_flag;
    if (trace_mode) opts.trace = &trace;
    if (cfg.cap) opts.degree_cap = static_cast<std::uint32_t>(*cfg.cap);
    if (cfg.algo == "abms") {
      if (!cfg.bound) throw usage_error("abms needs --bound");
      res = abms(ctx, run.oracle, run.ord, *cfg.bound, *stop, opts);
    } else {
      res = bms_run(ctx, run.oracle, run.ord, *stop, opts);
    }
  } else if (cfg.algo == "asfglm" || cfg.algo == "asfglm-tweaked" || cfg.algo == "asfglm-nobound") {
    AsfglmOptions opts;
    opts.tweaked = cfg.algo == "asfglm-tweaked";
    opts.no_bound = cfg.algo == "asfglm-nobound";
    if (opts.no_bound) opts.max_staircase = cfg.max_staircase;
    if (trace_mode) opts.trace = &trace;
    if (!opts.no_bound && !cfg.bound) throw usage_error("asfglm needs --bound");
    try {
      res = asfglm(ctx, run.oracle, run.ord, cfg.bound.value_or(1), opts);
    } catch (RunSfglmError& e) {
      res = e.partial();
      run_sfglm = true;
    }
  } else {
    throw usage_error("unknown algorithm '" + cfg.algo + "'");
  }

  auto j = result_to_json(res, run.ord, ctx, cfg.algo, stop, cfg.bound, run_sfglm);

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (cfg.out != "-") {
    file.open(cfg.out);
    if (!file) throw usage_error("cannot open output file '" + cfg.out + "'");
    os = &file;
  }
  if (trace_mode) {
    for (const auto& line : trace) *os << line << "\n";
    *os << "result: " << j.dump() << "\n";
  } else {
    *os << j.dump(2) << "\n";
  }
  return run_sfglm ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"guess ideals of linear recurrence relations of multidimensional sequences"};
  app.require_subcommand(1);

  GuessConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--table", cfg.table,
                    "table source: builtin:<name>, family:<name>:<nvars>:<d>, or a JSON file")
        ->required();
    sub->add_option("--order", cfg.order, "ordering spec, e.g. drl:y<x or lex:z<y<x");
    sub->add_option("--field", cfg.field, "field spec: fp:<prime> or q");
    sub->add_option("--algo", cfg.algo, "bms | abms | asfglm | asfglm-tweaked | asfglm-nobound");
    sub->add_option("--stop", cfg.stop, "stopping monomial (x^3*y) or 'auto' for families");
    sub->add_option("--bound", cfg.bound, "staircase-size bound d");
    sub->add_option("--cap", cfg.cap, "degree cap for non-degree orderings");
    sub->add_option("--seed", cfg.seed, "seed for family construction");
    sub->add_option("--max-staircase", cfg.max_staircase, "safety cap in no-bound mode");
    sub->add_flag("--inter-reduce", cfg.inter_reduce_flag, "inter-reduce the returned basis");
    sub->add_option("--out", cfg.out, "output path or - for stdout");
  };

  CLI::App* guess = app.add_subcommand("guess", "run a guessing algorithm, print JSON");
  add_common(guess);
  CLI::App* trace = app.add_subcommand("trace", "run with a step-by-step log");
  add_common(trace);

  BenchSpec bspec;
  std::string bfamilies = "rectangle,lshape,simplex,shape";
  std::string balgos = "asfglm,abms";
  std::string bfield = "fp:65521";
  std::string bout = "-";
  CLI::App* bench = app.add_subcommand("bench", "sweep the benchmark families to CSV");
  bench->add_option("--family", bfamilies, "comma-separated families");
  bench->add_option("--dim", bspec.nvars, "number of variables (2 or 3)");
  bench->add_option("--dmin", bspec.dmin, "smallest d");
  bench->add_option("--dmax", bspec.dmax, "largest d");
  bench->add_option("--algos", balgos, "comma-separated algorithms");
  bench->add_option("--field", bfield, "field spec (prime field)");
  bench->add_option("--seed", bspec.seed, "base seed");
  bench->add_option("--jobs", bspec.jobs, "parallel cells");
  bench->add_option("--out", bout, "CSV path or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (guess->parsed()) return run_guess(cfg, false);
    if (trace->parsed()) return run_guess(cfg, true);
    if (bench->parsed()) {
      auto split_list = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
          if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
          } else {
            cur.push_back(c);
          }
        }
        if (!cur.empty()) out.push_back(cur);
        return out;
      };
      bspec.families = split_list(bfamilies);
      bspec.algorithms = split_list(balgos);
      bspec.field = Field::parse(bfield);
      auto records = run_sweep(bspec);
      if (bout == "-") {
        write_csv(std::cout, records);
      } else {
        std::ofstream f(bout);
        if (!f) throw usage_error("cannot open output file '" + bout + "'");
        write_csv(f, records);
      }
      bool all_ok = true;
      for (const auto& r : records) all_ok = all_ok && r.lms_ok;
      if (!all_ok) {
        std::cerr << "warning: some cells guessed unexpected leading monomials\n";
        return 1;
      }
      return 0;
    }
  } catch (const RunSfglmError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
