#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twc/center.hpp"
#include "twc/schur_graph.hpp"

using namespace twc;

namespace {

GammaElement p(std::initializer_list<int> parts) { return GammaElement::power_sum(OddPartition(parts)); }
CenterElement alpha(std::initializer_list<int> parts) { return alpha_of_partition(Partition(parts)); }

}  // namespace

TEST_CASE("generators and phi") {
  CHECK_THROWS_AS(alpha_of_partition(Partition{2}), std::invalid_argument);
  CHECK(alpha({}) == CenterElement::scalar(1));
  CHECK(phi(alpha({1})) == Rational(2) * p({1}));
  CHECK(phi(d_generator(0)) == Rational(2) * p({1}));
  CHECK(phi(dbar(0)) == GammaElement(1));
  for (const auto &mu : enumerate_odd_upto(6))
    CHECK(phi(alpha_of_partition(mu)) == pow2(mu.length()) * pfrak(mu));
}

TEST_CASE("counterclockwise bubbles") {
  CHECK(dbar(0) == CenterElement::scalar(1, Chart::d));
  CHECK(dbar(1) == d_generator(0));
  CHECK(dbar(2) == d_generator(1) + d_generator(0) * d_generator(0));
  for (int k = 1; k <= 4; ++k) {
    CenterElement sum(Chart::d);
    for (int a = 0; a < k; ++a) sum += dbar(a) * d_generator(k - 1 - a);
    CHECK(dbar(k) == sum);
  }
}

TEST_CASE("grading") {
  CHECK(grade(d_generator(0)) == 0);
  CHECK(grade(d_generator(1)) == 3);
  CHECK(grade(d_generator(1) * d_generator(2)) == 8);
  CHECK(grade(CenterElement(Chart::d)) == -1);
  CHECK(alpha_leading_term_graded_check(0));
  CHECK(alpha_leading_term_graded_check(1));
  CHECK(alpha_leading_term_graded_check(2));
  CHECK(alpha_leading_term_check(0));
  CHECK(phi(alpha({1})) - phi(d_generator(0)) == GammaElement());
}

TEST_CASE("leading term by Γ-degree") {
  for (int k = 1; k <= 3; ++k) {
    const GammaElement diff = phi(alpha({2 * k + 1})) - phi(d_generator(k));
    CHECK(diff.degree() < 2 * k + 1);
    CHECK(alpha_leading_term_check(k));
  }
}

TEST_CASE("charts and inverse") {
  for (const auto &mu : enumerate_odd_upto(6)) {
    const auto a = alpha_of_partition(mu);
    CHECK(phi_inverse(phi(a), Chart::alpha) == a);
    const auto d = to_chart(a, Chart::d);
    CHECK(d.chart() == Chart::d);
    CHECK(phi(d) == phi(a));
    CHECK(to_chart(d, Chart::alpha) == a);
  }
  const CenterElement m = d_generator(2) * d_generator(0) - Rational(3) * d_generator(1);
  CHECK(phi_inverse(phi(m), Chart::d) == m);
}

TEST_CASE("algebra structure") {
  for (const auto &mu : enumerate_odd_upto(4))
    for (const auto &nu : enumerate_odd_upto(4)) {
      const auto a = alpha_of_partition(mu), b = alpha_of_partition(nu);
      CHECK(phi(a * b) == phi(a) * phi(b));
      CHECK(a * b == b * a);
    }
  // α_{(μ,1)} = α_μ α_1 - 2|μ| α_μ.
  for (const auto &mu : enumerate_odd_upto(6)) {
    const auto a = alpha_of_partition(mu);
    CHECK(alpha_of_partition(merge(mu, OddPartition{1})) == a * alpha({1}) - Rational(2 * mu.size()) * a);
  }
}

TEST_CASE("Fock images") {
  CHECK(fock_image(alpha({3}), 3) == class_sum_scaled(OddPartition{3}, 3));
  CHECK(fock_image(alpha({3}), 2).is_zero());
  for (int n = 0; n <= 5; ++n) CHECK(fock_image(d_generator(0), n) == SergeevElement::scalar(n, 2 * n));
  for (int n = 1; n <= 4; ++n) {
    const auto x = d_generator(1), y = d_generator(0) * d_generator(0) + Rational(2) * d_generator(1);
    CHECK(fock_image(x * y, n) == fock_image(x, n) * fock_image(y, n));
    for (const auto &lambda : enumerate_strict(n))
      CHECK(normalized_character(lambda, fock_image(y, n)) == evaluate(phi(y), lambda));
  }
}

TEST_CASE("class-sum coordinates") {
  for (int n = 1; n <= 4; ++n)
    for (const auto &mu : enumerate_odd_upto(n)) {
      const auto coords = class_sum_coordinates(class_sum_scaled(mu, n));
      CHECK(coords.size() == 1);
      CHECK(coords.at(pad_with_ones(mu, n)) == class_sum_scalar(mu, n));
    }
  CHECK_THROWS_AS(class_sum_coordinates(SergeevElement::clifford_generator(1, 2)), std::logic_error);
}

TEST_CASE("idempotent closures") {
  CHECK(idempotent_closure(StrictPartition{1}) == Rational(2) * p({1}));
  CHECK(idempotent_closure(StrictPartition{2}) == Rational(2) * factorial_schur_q(StrictPartition{2}));
  CHECK(idempotent_closure(StrictPartition{2, 1}) == Rational(2) * factorial_schur_q(StrictPartition{2, 1}));
  for (const auto &lambda : enumerate_strict_upto(4))
    CHECK(idempotent_closure(lambda) == Rational(path_count(lambda)) * factorial_schur_q(lambda));
}

TEST_CASE("printing") {
  CHECK_FALSE(alpha({3, 1}).to_string().empty());
  CHECK_FALSE((d_generator(1) * d_generator(0)).to_string().empty());
}
