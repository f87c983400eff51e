#include "twc/schur_graph.hpp"

#include <stdexcept>

namespace twc {

int edge_multiplicity(const StrictPartition &nu, const StrictPartition &lambda) {
  if (lambda.size() != nu.size() + 1) return 0;
  if (lambda.length() != nu.length() && lambda.length() != nu.length() + 1) return 0;
  int differing = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    const int d = lambda.part(i) - nu.part(i);
    if (d < 0 || d > 1) return 0;
    differing += d;
  }
  if (differing != 1) return 0;
  return lambda.length() == nu.length() ? 2 : 1;
}

Rational down_transition(const StrictPartition &lambda, const StrictPartition &nu) {
  if (lambda.size() < 1) throw std::invalid_argument("down transition from the empty partition");
  const int kappa = edge_multiplicity(nu, lambda);
  if (kappa == 0) return 0;
  Rational p(path_count(nu) * kappa, path_count(lambda));
  p.canonicalize();
  return p;
}

Rational up_transition(const StrictPartition &nu, const StrictPartition &lambda) {
  if (edge_multiplicity(nu, lambda) == 0) return 0;
  Rational p(path_count(lambda), path_count(nu) * (nu.size() + 1));
  p.canonicalize();
  return p;
}

TransitionRow down_row(const StrictPartition &lambda) {
  TransitionRow row{lambda, {}};
  for (int y : kerov_coordinates(lambda).removable) {
    auto nu = remove_cell(lambda, y);
    row.targets.emplace(nu, down_transition(lambda, nu));
  }
  return row;
}

TransitionRow up_row(const StrictPartition &nu) {
  TransitionRow row{nu, {}};
  for (int x : kerov_coordinates(nu).addable) {
    auto lambda = add_cell(nu, x);
    row.targets.emplace(lambda, up_transition(nu, lambda));
  }
  return row;
}

std::map<StrictPartition, Rational> plancherel(int n) {
  std::map<StrictPartition, Rational> measure;
  const Rational n_fact(factorial(n));
  for (const auto &lambda : enumerate_strict(n)) {
    const Integer g = path_count(lambda);
    measure.emplace(lambda, pow2(lambda.length() - n) * Rational(g * g) / n_fact);
  }
  return measure;
}

Integer path_count_dp(const StrictPartition &lambda) {
  // level-by-level sweep over all of SP_k, k <= |λ|
  std::map<StrictPartition, Integer> paths{{StrictPartition{}, Integer(1)}};
  for (int k = 1; k <= lambda.size(); ++k) {
    std::map<StrictPartition, Integer> next;
    for (const auto &target : enumerate_strict(k)) {
      Integer total = 0;
      for (const auto &[source, count] : paths) total += count * edge_multiplicity(source, target);
      next.emplace(target, total);
    }
    paths = std::move(next);
  }
  return paths.at(lambda);
}

Rational up_moment(int k, const StrictPartition &lambda) {
  if (k < 0) throw std::invalid_argument("up moment index must be nonnegative");
  Rational total = 0;
  for (int x : kerov_coordinates(lambda).addable) {
    Integer sk;
    mpz_pow_ui(sk.get_mpz_t(), jm_eigenvalue(x).get_mpz_t(), static_cast<unsigned long>(k));
    total += up_transition(lambda, add_cell(lambda, x)) * Rational(sk);
  }
  return total;
}

Rational down_moment(int k, const StrictPartition &lambda) {
  if (k < 1) throw std::invalid_argument("down moment index starts at 1");
  Rational total = 0;
  for (int y : kerov_coordinates(lambda).removable) {
    Integer sk;
    mpz_pow_ui(sk.get_mpz_t(), jm_eigenvalue(y).get_mpz_t(), static_cast<unsigned long>(k - 1));
    total += down_transition(lambda, remove_cell(lambda, y)) * Rational(sk);
  }
  return Rational(2 * lambda.size()) * total;
}

}  // namespace twc
