// twc: command-line front end.
//
// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage
// error (bad flags or invalid mathematical input).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "twc/cache.hpp"
#include "twc/center.hpp"
#include "twc/gamma.hpp"
#include "twc/json_io.hpp"
#include "twc/schur_graph.hpp"
#include "twc/sergeev.hpp"
#include "twc/verify.hpp"
#include "twc/waction.hpp"

namespace {

using namespace twc;

struct Globals {
  bool json = false;
  int max_level = 5;
  int cutoff = 8;
  std::uint64_t seed = 1;
  std::string cache_dir;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals &g, const Json &j, const std::string &human) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

std::string coords_text(const Coordinates &c) {
  std::ostringstream out;
  for (const auto &[p, q] : c) out << p.to_string() << "\t" << to_string(q) << "\n";
  return out.str();
}

std::string gamma_text(const GammaElement &f) { return f.to_string(); }

std::string sergeev_text(const SergeevElement &x) {
  std::ostringstream out;
  for (const auto &[m, c] : x.sorted_terms()) {
    out << to_string(c) << "\tc" << Json(clifford_indices(m.clifford)).dump() << "\t" << Json(m.perm.images()).dump()
        << "\n";
  }
  return out.str();
}

std::string pfrak_text(const PfrakVector &v) {
  std::ostringstream out;
  for (const auto &[mu, c] : v) out << "𝔭" << mu.to_string() << "\t" << to_string(c) << "\n";
  return out.str();
}

Json pfrak_json(const PfrakVector &v) {
  Json out = Json::object();
  for (const auto &[mu, c] : v) out[mu.to_string()] = to_string(c);
  return out;
}

// Subscripts may repeat and include 0, so this is not a partition.
std::vector<int> parse_subscripts(const std::string &text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    int s = -1;
    try {
      s = std::stoi(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != item.size() || s < 0 || s % 2)
      throw std::invalid_argument("bubble subscripts must be even and non-negative: " + text);
    out.push_back(s);
  }
  return out;
}

CenterElement d_monomial(const std::vector<int> &subscripts) {
  CenterElement x = CenterElement::scalar(1, Chart::d);
  for (int s : subscripts) x = x * d_generator(s / 2);
  return x;
}

int run_verify_command(const Globals &g, const std::vector<std::string> &names) {
  VerifyOptions opts;
  opts.n_max = g.max_level;
  opts.cutoff = g.cutoff;
  opts.seed = g.seed;
  std::vector<VerifyReport> reports;
  try {
    reports = run_verify(std::set<std::string>(names.begin(), names.end()), opts);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  Json arr = Json::array();
  std::ostringstream human;
  for (const auto &r : reports) {
    ok = ok && r.ok();
    arr.push_back(to_json(r));
    human << (r.ok() ? "PASS " : "FAIL ") << r.suite << "  cases=" << r.cases << "  failures=" << r.failures.size()
          << "  " << r.seconds << "s\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
      human << "    " << r.failures[i].inputs << ": " << r.failures[i].lhs << " != " << r.failures[i].rhs << "\n";
    for (const auto &n : r.notes) human << "    note: " << n << "\n";
  }
  Json out = Json::object();
  out["ok"] = ok;
  out["reports"] = std::move(arr);
  emit(g, out, human.str() + (ok ? "all suites passed" : "verification FAILED"));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"twc: twisted Heisenberg center, Γ, the Schur graph and Sergeev algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("-n,--max-level", g.max_level, "Level n (Sergeev level, table level, verify bound)")
      ->check(CLI::Range(0, kMaxLevel));
  app.add_option("--cutoff", g.cutoff, "Degree cutoff for Γ-side computations")->check(CLI::Range(0, 16));
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_option("--cache-dir", g.cache_dir, "Directory for X-matrix and 𝔭 caches (env TWC_CACHE_DIR)");

  std::function<int()> action;

  // partitions
  auto *parts = app.add_subcommand("partitions", "List strict, odd or all partitions of n");
  std::string parts_kind = "strict";
  parts->add_option("--kind", parts_kind, "strict | odd | all")->check(CLI::IsMember({"strict", "odd", "all"}));
  parts->callback([&] {
    action = [&] {
      std::vector<Partition> list;
      if (parts_kind == "strict")
        for (const auto &p : enumerate_strict(g.max_level)) list.push_back(p);
      else if (parts_kind == "odd")
        for (const auto &p : enumerate_odd(g.max_level)) list.push_back(p);
      else
        list = enumerate_partitions(g.max_level);
      Json j = Json::array();
      std::string human;
      for (const auto &p : list) {
        j.push_back(to_json(p));
        human += p.to_string() + "\n";
      }
      emit(g, j, human);
      return 0;
    };
  });

  // graph
  auto *graph = app.add_subcommand("graph", "Transition row of the Schur graph");
  std::string graph_lambda, graph_dir = "down";
  graph->add_option("--lambda", graph_lambda, "Strict partition, e.g. 3,1")->required();
  graph->add_option("--direction", graph_dir, "down | up")->check(CLI::IsMember({"down", "up"}));
  graph->callback([&] {
    action = [&] {
      const StrictPartition lambda(parse_partition(graph_lambda));
      if (graph_dir == "down" && lambda.size() == 0) throw std::invalid_argument("no down transitions from ∅");
      const TransitionRow row = graph_dir == "down" ? down_row(lambda) : up_row(lambda);
      std::string human;
      for (const auto &[nu, p] : row.targets) human += nu.to_string() + "\t" + to_string(p) + "\n";
      emit(g, to_json(row), human);
      return 0;
    };
  });

  // gamma
  auto *gamma = app.add_subcommand("gamma", "The algebra Γ");
  gamma->require_subcommand(1);
  std::string g_basis = "p", g_index, g_at;
  auto *expand = gamma->add_subcommand("expand", "p-basis coordinates of a basis element");
  expand->add_option("--basis", g_basis, "p | pfrak | Q | Qstar")->check(CLI::IsMember({"p", "pfrak", "Q", "Qstar"}));
  expand->add_option("--index", g_index, "Index partition")->required();
  expand->callback([&] {
    action = [&] {
      const GammaElement f = basis_element(parse_partition(g_index), parse_basis(g_basis));
      emit(g, to_json(to_basis(f, Basis::p)), coords_text(to_basis(f, Basis::p)));
      return 0;
    };
  });
  auto *eval = gamma->add_subcommand("eval", "Evaluate a basis element at a strict partition");
  eval->add_option("--basis", g_basis, "p | pfrak | Q | Qstar")->check(CLI::IsMember({"p", "pfrak", "Q", "Qstar"}));
  eval->add_option("--index", g_index, "Index partition")->required();
  eval->add_option("--at", g_at, "Strict partition λ")->required();
  eval->callback([&] {
    action = [&] {
      const GammaElement f = basis_element(parse_partition(g_index), parse_basis(g_basis));
      const Rational v = evaluate(f, StrictPartition(parse_partition(g_at)));
      emit(g, Json(to_string(v)), to_string(v));
      return 0;
    };
  });
  auto *xm = gamma->add_subcommand("x-matrix", "The matrix X at level n");
  xm->callback([&] {
    action = [&] {
      const Json j = export_table(TableKind::x_matrix, g.max_level);
      std::string human;
      for (const auto &[k, v] : j.items()) human += k + "\t" + v.get<std::string>() + "\n";
      emit(g, j, human);
      return 0;
    };
  });

  // sergeev
  auto *ser = app.add_subcommand("sergeev", "Sergeev superalgebras");
  ser->require_subcommand(1);
  std::string s_mu, s_lambda;
  auto *cls = ser->add_subcommand("class-sum", "a_μ^(n) at level n");
  cls->add_option("--mu", s_mu, "Odd partition μ")->required();
  cls->callback([&] {
    action = [&] {
      const OddPartition mu(parse_partition(s_mu));
      if (mu.size() > g.max_level) throw std::invalid_argument("|μ| exceeds n");
      const auto &x = class_sum_scaled(mu, g.max_level);
      emit(g, to_json(x), sergeev_text(x));
      return 0;
    };
  });
  auto *idem = ser->add_subcommand("idempotent", "Central idempotent e_λ");
  idem->add_option("--lambda", s_lambda, "Strict partition λ")->required();
  idem->callback([&] {
    action = [&] {
      const StrictPartition lambda(parse_partition(s_lambda));
      if (lambda.size() > kMaxLevel) throw std::invalid_argument("|λ| exceeds the supported level");
      const auto &e = central_idempotent(lambda);
      emit(g, to_json(e), sergeev_text(e));
      return 0;
    };
  });
  auto *chr = ser->add_subcommand("character", "χ^λ(μ), padding μ with ones");
  chr->add_option("--lambda", s_lambda, "Strict partition λ")->required();
  chr->add_option("--mu", s_mu, "Odd partition μ")->required();
  chr->callback([&] {
    action = [&] {
      const StrictPartition lambda(parse_partition(s_lambda));
      const OddPartition mu(parse_partition(s_mu));
      if (mu.size() > lambda.size()) throw std::invalid_argument("|μ| exceeds |λ|");
      const Rational v = character(lambda, pad_with_ones(mu, lambda.size()));
      emit(g, Json(to_string(v)), to_string(v));
      return 0;
    };
  });

  // center
  auto *cen = app.add_subcommand("center", "The center End(1)");
  cen->require_subcommand(1);
  std::string c_alpha, c_d, c_lambda;
  auto make_element = [&]() {
    if (c_alpha.empty() == c_d.empty()) throw UsageError("give exactly one of --alpha and --d");
    return c_alpha.empty() ? d_monomial(parse_subscripts(c_d)) : alpha_of_partition(parse_partition(c_alpha));
  };
  auto *cphi = cen->add_subcommand("phi", "φ(x) in the p-basis");
  cphi->add_option("--alpha", c_alpha, "Closure α_ν, ν odd");
  cphi->add_option("--d", c_d, "Bubble monomial by subscripts, e.g. 2,0");
  cphi->callback([&] {
    action = [&] {
      const GammaElement f = phi(make_element());
      emit(g, to_json(f), gamma_text(f));
      return 0;
    };
  });
  auto *fock = cen->add_subcommand("fock", "F_n(x) at level n");
  fock->add_option("--alpha", c_alpha, "Closure α_ν, ν odd");
  fock->add_option("--d", c_d, "Bubble monomial by subscripts, e.g. 2,0");
  fock->callback([&] {
    action = [&] {
      const SergeevElement x = fock_image(make_element(), g.max_level);
      emit(g, to_json(x), sergeev_text(x));
      return 0;
    };
  });
  auto *clo = cen->add_subcommand("idempotent-closure", "Closure of e_λ in Γ");
  clo->add_option("--lambda", c_lambda, "Strict partition λ")->required();
  clo->callback([&] {
    action = [&] {
      const StrictPartition lambda(parse_partition(c_lambda));
      if (lambda.size() > kMaxLevel) throw std::invalid_argument("|λ| exceeds the supported level");
      const GammaElement f = idempotent_closure(lambda);
      emit(g, to_json(f), gamma_text(f));
      return 0;
    };
  });

  // w
  auto *w = app.add_subcommand("w", "Action of D̂⁻ generators on Γ");
  w->require_subcommand(1);
  std::string w_gen, w_pfrak;
  auto *wapply = w->add_subcommand("apply", "Image of 𝔭_μ");
  wapply->add_option("--gen", w_gen, "Aminus, Aplus, omega03, omega01, omega_m1, omega_m2, omega_p1, omega_p2, B3, B5, ...")
      ->required();
  wapply->add_option("--pfrak", w_pfrak, "Odd partition μ")->required();
  wapply->callback([&] {
    action = [&] {
      const WOperator op = operator_by_name(w_gen);
      const PfrakVector in{{OddPartition(parse_partition(w_pfrak)), Rational(1)}};
      const PfrakVector out = op.apply(in, g.cutoff);
      emit(g, pfrak_json(out), pfrak_text(out));
      return 0;
    };
  });

  // verify
  auto *ver = app.add_subcommand("verify", "Run acceptance suites");
  std::vector<std::string> suites_requested{"all"};
  ver->add_option("--suite", suites_requested, "Suite names or 'all'")->delimiter(',');
  ver->callback([&] { action = [&] { return run_verify_command(g, suites_requested); }; });

  // export
  auto *exp = app.add_subcommand("export", "Write a table as JSON");
  std::string e_kind, e_out;
  exp->add_option("--kind", e_kind, "characters | x-matrix | transitions | plancherel")
      ->required()
      ->check(CLI::IsMember({"characters", "x-matrix", "transitions", "plancherel"}));
  exp->add_option("--out", e_out, "Output path (stdout if omitted)");
  exp->callback([&] {
    action = [&] {
      const TableKind kind = parse_table_kind(e_kind);
      if (e_out.empty())
        std::cout << export_table(kind, g.max_level).dump(2) << "\n";
      else
        write_table(kind, g.max_level, e_out);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  const auto cache = resolve_cache_dir(g.cache_dir);
  try {
    const CacheLoad loaded = load_cache(cache);
    if (loaded.stale) std::cerr << "twc: ignoring cache files with another format version\n";
    const int code = action();
    save_cache(cache);
    return code;
  } catch (const UsageError &e) {
    std::cerr << "twc: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "twc: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error &e) {
    std::cerr << "twc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "twc: " << e.what() << "\n";
    return 1;
  }
}
