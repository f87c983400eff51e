#pragma once

// JSON forms of the library's values and the deterministic table exports.
// Rationals are strings "a/b"; partitions are integer arrays; pair-indexed
// tables use keys "[a,b]|[c,d]". Key order is the canonical partition order.

#include <filesystem>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "twc/gamma.hpp"
#include "twc/partitions.hpp"
#include "twc/rational.hpp"
#include "twc/schur_graph.hpp"
#include "twc/sergeev.hpp"

namespace twc {

using Json = nlohmann::ordered_json;

Json to_json(const Partition &p);
Partition partition_from_json(const Json &j);

/// {"[3,1]": "a/b", ...} in canonical key order.
Json to_json(const Coordinates &coords);
/// p-basis coordinates.
Json to_json(const GammaElement &f);
GammaElement gamma_from_json(const Json &j);

/// [{"clifford": [1,3], "perm": [2,1,3], "coeff": "a/b"}, ...]
Json to_json(const SergeevElement &x);
SergeevElement sergeev_from_json(const Json &j, int n);

/// {"source": [..], "targets": [{"partition": [..], "prob": "a/b"}, ...]}
Json to_json(const TransitionRow &row);

enum class TableKind { characters, x_matrix, transitions, plancherel };
TableKind parse_table_kind(const std::string &name);
std::string table_kind_name(TableKind kind);

/// characters: "[λ]|[μ]" ↦ χ^λ(μ); x-matrix: "[μ]|[λ]" ↦ X_μ^λ;
/// plancherel: "[λ]" ↦ Pl_n(λ); transitions: {"down": {"[λ]|[ν]": p↓},
/// "up": {"[λ]|[κ]": p↑}} for λ ∈ SP_n, nonzero entries only.
Json export_table(TableKind kind, int n);
/// Writes export_table to path; throws std::runtime_error on I/O failure.
void write_table(TableKind kind, int n, const std::filesystem::path &path);

Json read_json_file(const std::filesystem::path &path);
void write_json_file(const Json &j, const std::filesystem::path &path);

using PairTable = std::map<std::pair<Partition, Partition>, Rational>;
using SingleTable = std::map<Partition, Rational>;
PairTable parse_pair_table(const Json &j);
SingleTable parse_single_table(const Json &j);
Json pair_table_json(const PairTable &t);
Json single_table_json(const SingleTable &t);

}  // namespace twc
