#include "twc/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace twc {

namespace {

std::string pair_key(const Partition &a, const Partition &b) { return a.to_string() + "|" + b.to_string(); }

std::pair<Partition, Partition> split_pair_key(const std::string &key) {
  const auto bar = key.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("table key without '|': " + key);
  return {parse_partition(key.substr(0, bar)), parse_partition(key.substr(bar + 1))};
}

}  // namespace

Json to_json(const Partition &p) { return Json(p.parts()); }

Partition partition_from_json(const Json &j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const Coordinates &coords) {
  Json out = Json::object();
  for (const auto &[p, c] : coords) out[p.to_string()] = to_string(c);
  return out;
}

Json to_json(const GammaElement &f) {
  Json out = Json::object();
  for (const auto &[mu, c] : f.terms()) out[mu.to_string()] = to_string(c);
  return out;
}

GammaElement gamma_from_json(const Json &j) {
  GammaElement out;
  for (const auto &[key, value] : j.items())
    out.add_term(OddPartition(parse_partition(key)), parse_rational(value.get<std::string>()));
  return out;
}

Json to_json(const SergeevElement &x) {
  Json out = Json::array();
  for (const auto &[m, c] : x.sorted_terms()) {
    Json term = Json::object();
    term["clifford"] = clifford_indices(m.clifford);
    term["perm"] = m.perm.images();
    term["coeff"] = to_string(c);
    out.push_back(std::move(term));
  }
  return out;
}

SergeevElement sergeev_from_json(const Json &j, int n) {
  SergeevElement out(n);
  for (const auto &term : j) {
    const SergeevMonomial m{clifford_word(term.at("clifford").get<std::vector<int>>()),
                            Permutation::from_images(term.at("perm").get<std::vector<int>>())};
    out += SergeevElement::monomial(n, m, parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

Json to_json(const TransitionRow &row) {
  Json out = Json::object();
  out["source"] = to_json(row.source);
  Json targets = Json::array();
  for (const auto &[nu, p] : row.targets) {
    Json t = Json::object();
    t["partition"] = to_json(nu);
    t["prob"] = to_string(p);
    targets.push_back(std::move(t));
  }
  out["targets"] = std::move(targets);
  return out;
}

TableKind parse_table_kind(const std::string &name) {
  if (name == "characters") return TableKind::characters;
  if (name == "x-matrix") return TableKind::x_matrix;
  if (name == "transitions") return TableKind::transitions;
  if (name == "plancherel") return TableKind::plancherel;
  throw std::invalid_argument("unknown table kind: " + name);
}

std::string table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::characters: return "characters";
    case TableKind::x_matrix: return "x-matrix";
    case TableKind::transitions: return "transitions";
    case TableKind::plancherel: return "plancherel";
  }
  return "?";
}

Json export_table(TableKind kind, int n) {
  if (n < 0) throw std::invalid_argument("table level must be nonnegative");
  switch (kind) {
    case TableKind::characters: {
      PairTable t;
      for (const auto &lambda : enumerate_strict(n))
        for (const auto &mu : enumerate_odd(n)) t.emplace(std::pair<Partition, Partition>{lambda, mu}, character(lambda, mu));
      return pair_table_json(t);
    }
    case TableKind::x_matrix: {
      const auto &x = x_matrix(n);
      PairTable t;
      for (const auto &mu : x.rows)
        for (const auto &lambda : x.cols) t.emplace(std::pair<Partition, Partition>{mu, lambda}, x.at(mu, lambda));
      return pair_table_json(t);
    }
    case TableKind::plancherel: {
      SingleTable t;
      for (const auto &[lambda, p] : plancherel(n)) t.emplace(lambda, p);
      return single_table_json(t);
    }
    case TableKind::transitions: {
      PairTable down, up;
      for (const auto &lambda : enumerate_strict(n)) {
        if (n >= 1)
          for (const auto &[nu, p] : down_row(lambda).targets) down.emplace(std::pair<Partition, Partition>{lambda, nu}, p);
        for (const auto &[nu, p] : up_row(lambda).targets) up.emplace(std::pair<Partition, Partition>{lambda, nu}, p);
      }
      Json out = Json::object();
      out["down"] = pair_table_json(down);
      out["up"] = pair_table_json(up);
      return out;
    }
  }
  throw std::invalid_argument("unknown table kind");
}

void write_table(TableKind kind, int n, const std::filesystem::path &path) {
  write_json_file(export_table(kind, n), path);
}

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const Json &j, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

PairTable parse_pair_table(const Json &j) {
  PairTable t;
  for (const auto &[key, value] : j.items()) t.emplace(split_pair_key(key), parse_rational(value.get<std::string>()));
  return t;
}

SingleTable parse_single_table(const Json &j) {
  SingleTable t;
  for (const auto &[key, value] : j.items()) t.emplace(parse_partition(key), parse_rational(value.get<std::string>()));
  return t;
}

Json pair_table_json(const PairTable &t) {
  Json out = Json::object();
  for (const auto &[key, value] : t) out[pair_key(key.first, key.second)] = to_string(value);
  return out;
}

Json single_table_json(const SingleTable &t) {
  Json out = Json::object();
  for (const auto &[key, value] : t) out[key.to_string()] = to_string(value);
  return out;
}

}  // namespace twc
