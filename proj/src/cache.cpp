#include "twc/cache.hpp"

#include <cstdlib>
#include <system_error>

#include "twc/gamma.hpp"
#include "twc/json_io.hpp"

namespace twc {

namespace {

constexpr const char *kXFile = "x_matrices.json";
constexpr const char *kPfrakFile = "pfrak.json";

bool version_ok(const Json &j) { return j.is_object() && j.value("version", -1) == kCacheFormatVersion; }

}  // namespace

std::filesystem::path resolve_cache_dir(const std::string &flag) {
  if (!flag.empty()) return flag;
  if (const char *env = std::getenv("TWC_CACHE_DIR"); env && *env) return env;
  return {};
}

CacheLoad load_cache(const std::filesystem::path &dir) {
  CacheLoad out;
  if (dir.empty()) return out;
  if (const auto path = dir / kXFile; std::filesystem::exists(path)) {
    const Json j = read_json_file(path);
    if (!version_ok(j)) {
      out.stale = true;
    } else {
      for (const auto &[key, level] : j.at("levels").items()) {
        CharacterMatrix m;
        m.n = std::stoi(key);
        for (const auto &r : level.at("rows")) m.rows.emplace_back(partition_from_json(r));
        for (const auto &c : level.at("cols")) m.cols.emplace_back(partition_from_json(c));
        for (const auto &row : level.at("entries")) {
          RationalVector v;
          for (const auto &e : row) v.push_back(parse_rational(e.get<std::string>()));
          m.entries.push_back(std::move(v));
        }
        install_x_matrix(std::move(m));
        ++out.x_levels;
      }
    }
  }
  if (const auto path = dir / kPfrakFile; std::filesystem::exists(path)) {
    const Json j = read_json_file(path);
    if (!version_ok(j)) {
      out.stale = true;
    } else {
      for (const auto &entry : j.at("entries")) {
        install_pfrak(OddPartition(partition_from_json(entry.at("mu"))), gamma_from_json(entry.at("p")));
        ++out.pfrak_entries;
      }
    }
  }
  return out;
}

void save_cache(const std::filesystem::path &dir) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir.string() + ": " + ec.message());

  Json x = Json::object();
  x["version"] = kCacheFormatVersion;
  Json levels = Json::object();
  for (int n : cached_x_levels()) {
    const auto &m = x_matrix(n);
    Json level = Json::object();
    level["rows"] = Json::array();
    for (const auto &r : m.rows) level["rows"].push_back(to_json(r));
    level["cols"] = Json::array();
    for (const auto &c : m.cols) level["cols"].push_back(to_json(c));
    level["entries"] = Json::array();
    for (const auto &row : m.entries) {
      Json jr = Json::array();
      for (const auto &e : row) jr.push_back(to_string(e));
      level["entries"].push_back(std::move(jr));
    }
    levels[std::to_string(n)] = std::move(level);
  }
  x["levels"] = std::move(levels);
  write_json_file(x, dir / kXFile);

  Json p = Json::object();
  p["version"] = kCacheFormatVersion;
  p["entries"] = Json::array();
  for (const auto &[mu, f] : cached_pfrak()) {
    Json e = Json::object();
    e["mu"] = to_json(mu);
    e["p"] = to_json(f);
    p["entries"].push_back(std::move(e));
  }
  write_json_file(p, dir / kPfrakFile);
}

}  // namespace twc
