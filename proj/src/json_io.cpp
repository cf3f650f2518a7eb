#include "lrg/json_io.hpp"

#include <fstream>

namespace lrg {

using nlohmann::json;

json monomial_to_json(const Monomial& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.nvars(); ++i) a.push_back(m[i]);
  return a;
}

Monomial monomial_from_json(const json& j) {
  std::vector<std::uint32_t> e;
  for (const auto& v : j) e.push_back(v.get<std::uint32_t>());
  return Monomial(std::move(e));
}

json result_to_json(const GuessResult& res, const Ordering& ord, const FieldCtx& ctx,
                    const std::string& algorithm, const std::optional<Monomial>& stop,
                    std::optional<std::uint64_t> bound, bool run_sfglm) {
  json j;
  j["algorithm"] = algorithm;
  j["field"] = ctx.field().spec();
  j["order"] = ord.spec();
  j["stop"] = stop ? json(ord.render(*stop)) : json();
  j["bound"] = bound ? json(*bound) : json();
  if (run_sfglm) j["failure"] = "RunSfglm";

  json rels = json::array();
  FieldCtx render_ctx(ctx.field());
  PolyOps render_ops(render_ctx, ord);
  for (const auto& r : res.relations) {
    json jr;
    jr["poly"] = render_ops.render(r.poly);
    json terms = json::array();
    for (const auto& t : r.poly.terms())
      terms.push_back(json::array({monomial_to_json(t.mono), ctx.to_string(t.coeff)}));
    jr["terms"] = terms;
    jr["lm"] = monomial_to_json(r.poly.lm());
    jr["shift"] = r.shift ? json(ord.render(*r.shift)) : json();
    jr["fail"] = r.fail ? json(ord.render(*r.fail)) : json();
    json ss = json::array();
    for (const auto& m : r.shift_set) ss.push_back(ord.render(m));
    jr["shift_set"] = ss;
    json sk = json::array();
    for (const auto& m : r.skipped_shifts) sk.push_back(ord.render(m));
    jr["skipped_shifts"] = sk;
    rels.push_back(jr);
  }
  j["relations"] = rels;

  json st = json::array();
  for (const auto& m : res.staircase) st.push_back(ord.render(m));
  j["staircase"] = st;

  j["counters"] = {{"queries", res.queries},
                   {"additions", res.ops.additions},
                   {"multiplications", res.ops.multiplications},
                   {"divisions", res.ops.divisions},
                   {"basic_ops", res.ops.basic_ops()}};
  json fsk = json::array();
  for (const auto& m : res.skips.fully_skipped) fsk.push_back(ord.render(m));
  j["skip_stats"] = {{"skipped_tests", res.skips.skipped_tests},
                     {"fully_skipped_monomials", fsk}};
  return j;
}

LoadedTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open table file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw table_error("bad JSON in '" + path + "': " + e.what());
  }

  std::size_t nvars = j.at("nvars").get<std::size_t>();
  Field field = Field::parse(j.at("field").get<std::string>());
  FieldCtx ctx(field);

  if (j.contains("relations")) {
    Ordering ord = Ordering::parse(j.at("order").get<std::string>());
    if (ord.nvars() != nvars) throw table_error("order/nvars mismatch in '" + path + "'");
    PolyOps ops(ctx, ord);
    std::vector<Poly> rels;
    for (const auto& r : j.at("relations")) rels.push_back(ops.parse(r.get<std::string>()));
    std::vector<std::pair<Monomial, Scalar>> vals;
    for (const auto& e : j.at("staircase_values"))
      vals.push_back({monomial_from_json(e.at(0)), ctx.parse(e.at(1).get<std::string>())});
    return LoadedTable{from_gb(ord, field, std::move(rels), std::move(vals)), ord};
  }

  std::vector<std::string> defaults = {"x", "y", "z", "w"};
  std::vector<std::string> names(defaults.begin(), defaults.begin() + std::min<std::size_t>(nvars, 4));
  while (names.size() < nvars) names.push_back("v" + std::to_string(names.size()));
  Ordering msgs(OrderKind::DRL, names);
  std::vector<std::pair<Monomial, Scalar>> entries;
  for (const auto& e : j.at("entries"))
    entries.push_back({monomial_from_json(e.at(0)), ctx.parse(e.at(1).get<std::string>())});
  return LoadedTable{explicit_table(nvars, field, std::move(entries), msgs), std::nullopt};
}

}  // namespace lrg
