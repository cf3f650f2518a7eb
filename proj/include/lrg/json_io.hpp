#ifndef LRG_JSON_IO_HPP
#define LRG_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "lrg/result.hpp"
#include "lrg/table.hpp"

namespace lrg {

nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j);

/// Serializes a guess result with run metadata. The output is byte-stable
/// for identical inputs.
nlohmann::json result_to_json(const GuessResult& res, const Ordering& ord, const FieldCtx& ctx,
                              const std::string& algorithm,
                              const std::optional<Monomial>& stop,
                              std::optional<std::uint64_t> bound, bool run_sfglm = false);

struct LoadedTable {
  TableOracle oracle;
  std::optional<Ordering> order;  // present for relation-driven files
};

/// Reads the JSON table formats: explicit entry lists
///   {"nvars": n, "field": "fp:11", "entries": [[[i,j], "value"], ...]}
/// and relation-driven tables
///   {"nvars": n, "field": ..., "order": "drl:y<x", "relations": [...],
///    "staircase_values": [[[i,j], "value"], ...]}.
LoadedTable load_table_file(const std::string& path);

}  // namespace lrg

#endif
