#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "twc/gamma.hpp"

using namespace twc;

namespace {

GammaElement p(std::initializer_list<int> parts) { return GammaElement::power_sum(OddPartition(parts)); }

// q_r = Σ_{μ ⊢ r odd} 2^{ℓ(μ)} z_μ^{-1} p_μ, read off the exponential.
GammaElement q_oracle(int r) {
  GammaElement out;
  for (const auto &mu : enumerate_odd(r)) out.add_term(mu, pow2(mu.length()) / Rational(z_stat(mu)));
  return out;
}

Rational falling(const Rational &x, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= x - i;
  return out;
}

// Q*_λ(x_1..x_N) by symmetrizing 2^ℓ Π x_i^{↓λ_i} Π_{i≤ℓ, i<j} (x_i+x_j)/(x_i-x_j)
// over S_N, divided by (N-ℓ)!. The x_j are distinct and nonzero here.
Rational qstar_oracle(const StrictPartition &lambda, const StrictPartition &nu) {
  const int N = nu.length(), l = lambda.length();
  if (l > N) return 0;
  std::vector<int> w(N);
  std::iota(w.begin(), w.end(), 0);
  Rational total = 0;
  do {
    Rational term = pow2(l);
    for (int i = 0; i < l; ++i) {
      const Rational xi = nu.parts()[w[i]];
      term *= falling(xi, lambda.parts()[i]);
      for (int j = i + 1; j < N; ++j) {
        const Rational xj = nu.parts()[w[j]];
        term *= (xi + xj) / (xi - xj);
      }
    }
    total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total / Rational(factorial(N - l));
}

}  // namespace

TEST_CASE("products and evaluation") {
  CHECK(p({1}) * p({1}) == p({1, 1}));
  CHECK(p({3}) * p({1, 1}) == p({3, 1, 1}));
  CHECK((p({1}) + p({3})) * p({1}) == p({1, 1}) + p({3, 1}));
  CHECK(evaluate(p({1}), Partition{3, 1}) == 4);
  CHECK(evaluate(p({3}), Partition{2, 1}) == 9);
  CHECK(evaluate(p({3, 1}), Partition{3}) == 81);
  CHECK(evaluate(GammaElement(7), Partition{}) == 7);
  CHECK(GammaElement().degree() == -1);
  CHECK((p({3, 1}) + p({1})).degree() == 4);
}

TEST_CASE("q_r against the odd-partition expansion") {
  CHECK(q_series(0) == GammaElement(1));
  CHECK(q_series(1) == Rational(2) * p({1}));
  CHECK(q_series(2) == Rational(2) * p({1, 1}));
  for (int r = 0; r <= 10; ++r) CHECK(q_series(r) == q_oracle(r));
}

TEST_CASE("Schur Q-functions") {
  CHECK(schur_q(StrictPartition{}) == GammaElement(1));
  CHECK(schur_q(StrictPartition{2}) == Rational(2) * p({1, 1}));
  for (int r = 0; r <= 8; ++r)
    if (r > 0) CHECK(schur_q(StrictPartition{r}) == q_series(r));
  // Two-row formula Q_(r,s) = q_r q_s + 2 Σ_{i=1}^{s} (-1)^i q_{r+i} q_{s-i}.
  for (int r = 2; r <= 6; ++r)
    for (int s = 1; s < r; ++s) {
      GammaElement want = q_series(r) * q_series(s);
      for (int i = 1; i <= s; ++i) want += Rational(i % 2 ? -2 : 2) * (q_series(r + i) * q_series(s - i));
      CHECK(schur_q(StrictPartition{r, s}) == want);
    }
  for (const auto &lambda : enumerate_strict_upto(8)) {
    const auto q = schur_q(lambda);
    CHECK(q.homogeneous_part(lambda.size()) == q);
  }
}

TEST_CASE("X matrix: defining relations and orthogonality") {
  const auto &x2 = x_matrix(2);
  CHECK(x2.at(OddPartition{1, 1}, StrictPartition{2}) == 1);
  CHECK(x_matrix(0).entries == RationalMatrix{{Rational(1)}});
  for (int n = 0; n <= 8; ++n) {
    const auto &x = x_matrix(n);
    CHECK(x.rows.size() == x.cols.size());
    // Σ_μ 2^{ℓ(μ)} z_μ^{-1} X_μ^λ X_μ^ν = 2^{ℓ(λ)} δ_{λν}.
    for (const auto &lambda : x.cols)
      for (const auto &nu : x.cols) {
        Rational s = 0;
        for (const auto &mu : x.rows) s += pow2(mu.length()) / Rational(z_stat(mu)) * x.at(mu, lambda) * x.at(mu, nu);
        CHECK(s == (lambda == nu ? pow2(lambda.length()) : Rational(0)));
      }
    // p_μ = Σ_λ 2^{-ℓ(λ)} X_μ^λ Q_λ.
    for (const auto &mu : x.rows) {
      GammaElement sum;
      for (const auto &lambda : x.cols) sum += pow2(-lambda.length()) * x.at(mu, lambda) * schur_q(lambda);
      CHECK(sum == GammaElement::power_sum(mu));
    }
  }
}

TEST_CASE("characters and dimensions") {
  CHECK(character(StrictPartition{2}, OddPartition{1, 1}) == 4);
  CHECK(character(StrictPartition{2, 1}, OddPartition{1, 1, 1}) == 4);
  CHECK(character(StrictPartition{3}, OddPartition{1, 1, 1}) == 8);
  CHECK_THROWS_AS(character(StrictPartition{3}, OddPartition{1}), std::invalid_argument);
  for (int n = 0; n <= 9; ++n)
    for (const auto &lambda : enumerate_strict(n))
      CHECK(character(lambda, pad_with_ones({}, n)) == Rational(simple_dimension(lambda)));
}

TEST_CASE("inhomogeneous power sums") {
  CHECK(pfrak(OddPartition{}) == GammaElement(1));
  CHECK(pfrak(OddPartition{1}) == p({1}));
  CHECK(pfrak(OddPartition{1, 1}) == p({1, 1}) - p({1}));
  CHECK((pfrak(OddPartition{3}) - p({3})).degree() < 3);
  for (const auto &mu : enumerate_odd_upto(6))
    for (const auto &lambda : enumerate_strict_upto(9))
      CHECK(evaluate(pfrak(mu), lambda) == pfrak_value(mu, lambda));
  // 𝔭_{1^k}(λ) = n^{↓k}.
  for (int k = 0; k <= 4; ++k)
    for (const auto &lambda : enumerate_strict_upto(8))
      CHECK(evaluate(pfrak(pad_with_ones({}, k)), lambda) == Rational(falling_factorial(lambda.size(), k)));
}

TEST_CASE("factorial Schur Q against the symmetrization formula") {
  CHECK(factorial_schur_q(StrictPartition{}) == GammaElement(1));
  CHECK(evaluate(factorial_schur_q(StrictPartition{2}), Partition{1}) == 0);
  CHECK((factorial_schur_q(StrictPartition{2}) - schur_q(StrictPartition{2})).degree() <= 1);
  for (const auto &lambda : enumerate_strict_upto(5)) {
    const auto qs = factorial_schur_q(lambda);
    for (const auto &nu : enumerate_strict_upto(8)) {
      if (nu.empty()) continue;
      CHECK_MESSAGE(evaluate(qs, nu) == qstar_oracle(lambda, nu), "λ=", lambda.to_string(), " ν=", nu.to_string());
    }
  }
}

TEST_CASE("moment elements") {
  CHECK(up_moment_element(0) == GammaElement(1));
  CHECK(down_moment_element(1) == Rational(2) * p({1}));
  CHECK_THROWS_AS(down_moment_element(0), std::invalid_argument);
}

TEST_CASE("change of basis") {
  const auto c = to_basis(p({1}), Basis::pfrak);
  CHECK(c == Coordinates{{OddPartition{1}, 1}});
  CHECK(to_basis(p({1, 1}), Basis::pfrak) == Coordinates{{OddPartition{1, 1}, 1}, {OddPartition{1}, 1}});
  CHECK(to_basis(schur_q(StrictPartition{2}), Basis::Q) == Coordinates{{StrictPartition{2}, 1}});
  for (Basis b : {Basis::p, Basis::pfrak, Basis::Q, Basis::Qstar}) {
    const GammaElement f = p({3, 1}) - Rational(5, 2) * p({1, 1, 1}) + p({3}) + 7;
    CHECK(from_basis(to_basis(f, b), b) == f);
  }
  CHECK(parse_basis("Qstar") == Basis::Qstar);
  CHECK(basis_name(Basis::pfrak) == "pfrak");
  CHECK_THROWS_AS(parse_basis("schur"), std::invalid_argument);
  CHECK_THROWS_AS(basis_element(Partition{2}, Basis::p), std::invalid_argument);
}
