#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twc/waction.hpp"

using namespace twc;

namespace {

const Polynomial D = Polynomial::variable();

PfrakVector pv(std::initializer_list<std::pair<OddPartition, Rational>> entries) {
  PfrakVector out;
  for (const auto &[mu, c] : entries) out[mu] = c;
  return out;
}

PfrakVector image(const WOperator &op, std::initializer_list<int> mu) {
  return op.apply(pv({{OddPartition(mu), 1}}), 8);
}

// ψ straight from its definition for r = -s >= 0; antisymmetry otherwise.
Rational cocycle_oracle(int r, const Polynomial &f, int s, const Polynomial &g) {
  if (r + s != 0) return 0;
  if (r < 0) return -cocycle_oracle(s, g, r, f);
  Rational sum = 0;
  for (int j = -r; j <= -1; ++j) sum += f(Rational(j)) * g(Rational(j + r));
  return sum;
}

Polynomial random_poly(std::mt19937 &rng) {
  std::uniform_int_distribution<int> deg(0, 3), coeff(-4, 4);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto &x : c) x = coeff(rng);
  return Polynomial(c);
}

}  // namespace

TEST_CASE("polynomials") {
  const Polynomial f = D * D + Rational(3) * D + 1;
  CHECK(f(Rational(2)) == 11);
  CHECK(f.shifted(Rational(1))(Rational(0)) == f(Rational(1)));
  CHECK(f.reflected()(Rational(2)) == f(Rational(-2)));
  CHECK(Polynomial().degree() == -1);
  CHECK((f - f).is_zero());
}

TEST_CASE("bracket examples") {
  CHECK(bracket(LieElement::term(1, 1), LieElement::term(-1, 1)) == LieElement::central(1));
  const Polynomial odd1 = D, odd2 = D * D * D - D;
  CHECK(bracket(LieElement::term(0, odd1), LieElement::term(0, odd2)).is_zero());
  // The literal example t^{-1}D² is outside D̂⁻ but the ambient bracket still
  // satisfies Jacobi.
  const auto x = LieElement::term(1, 1), y = LieElement::term(-1, D * D), z = LieElement::term(0, D);
  CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  CHECK_THROWS_AS(LieElement::twisted(-1, D * D), std::invalid_argument);
  CHECK_NOTHROW(LieElement::twisted(-1, Polynomial(1)));
  CHECK_NOTHROW(LieElement::twisted(0, D));
  CHECK_THROWS_AS(LieElement::twisted(0, Polynomial(1)), std::invalid_argument);
}

TEST_CASE("twisted parity") {
  // t^{2k-1} g(D + (2k-1)/2) with g even, t^{2k} f(D + k) with f odd.
  const Polynomial even = D * D + 5, odd = D * D * D - Rational(2) * D;
  for (int k = -2; k <= 2; ++k) {
    CHECK(satisfies_twisted_parity(2 * k - 1, even.shifted(Rational(2 * k - 1) / 2)));
    CHECK(satisfies_twisted_parity(2 * k, odd.shifted(Rational(k))));
    CHECK_FALSE(satisfies_twisted_parity(2 * k, even.shifted(Rational(k))));
  }
}

TEST_CASE("cocycle and ambient identities on random elements") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> rd(-3, 3);
  for (int t = 0; t < 60; ++t) {
    const int r = rd(rng), s = rd(rng), u = rd(rng);
    const auto f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    CHECK(cocycle(r, f, s, g) == cocycle_oracle(r, f, s, g));
    CHECK(cocycle(r, f, s, g) == -cocycle(s, g, r, f));
    const auto x = LieElement::term(r, f), y = LieElement::term(s, g), z = LieElement::term(u, h);
    CHECK((bracket(x, y) + bracket(y, x)).is_zero());
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST_CASE("generator actions on the 𝔭-basis") {
  CHECK(image(a_minus(), {3}) == pv({{OddPartition{3, 1}, 2}}));
  CHECK(image(a_minus(), {}) == pv({{OddPartition{1}, 2}}));
  CHECK(image(a_minus(), {1, 1}) == pv({{OddPartition{1, 1, 1}, 2}}));
  CHECK(image(a_plus(), {3}) == pv({{OddPartition{3}, 1}}));
  CHECK(image(a_plus(), {1, 1}) == pv({{OddPartition{1, 1}, 1}, {OddPartition{1}, 2}}));
  CHECK(image(a_plus(), {1}) == pv({{OddPartition{1}, 1}, {OddPartition{}, 1}}));
  CHECK(image(b_operator(3), {1}) == pv({{OddPartition{3, 1}, 2}}));
  CHECK(image(b_operator(5), {}) == pv({{OddPartition{5}, 2}}));
  CHECK(image(b_operator(3), {3}) == pv({{OddPartition{3, 3}, 2}}));
  CHECK(from_pfrak_vector(image(omega03(), {})) == -pfrak(OddPartition{3}) - Rational(2) * pfrak(OddPartition{1, 1}));
  const GammaElement p1 = pfrak(OddPartition{1});
  CHECK(apply_omega03(p1) == (-pfrak(OddPartition{3}) - Rational(2) * pfrak(OddPartition{1, 1})) * p1);
  const GammaElement f = pfrak(OddPartition{3}) + p1;
  CHECK(apply_omega03(f) == apply_omega03(pfrak(OddPartition{3})) + apply_omega03(p1));
  CHECK_THROWS_AS(b_operator(4), std::invalid_argument);
  CHECK_THROWS_AS(operator_by_name("nope"), std::invalid_argument);
  CHECK(operator_by_name("B7").name() == "B7");
}

TEST_CASE("cutoff") {
  CHECK_THROWS_AS(a_minus().apply(pv({{OddPartition{5, 3, 1}, 1}}), 8), CutoffExceeded);
  CHECK_NOTHROW(a_minus().apply(pv({{OddPartition{5, 3}, 1}}), 8));
  CHECK(a_minus().matrix(4).size() == enumerate_odd_upto(4).size());
}

TEST_CASE("commutators at the cutoff") {
  const auto minus_two = Rational(-2) * identity_operator();
  const auto c = commutator(a_minus(), a_plus());
  for (const auto &[mu, col] : c.matrix(8)) CHECK(col == minus_two.column(mu));
  for (int m : {3, 5, 7})
    for (const auto &[mu, col] : commutator(b_operator(m), a_plus()).matrix(8)) CHECK(col.empty());
}

TEST_CASE("pfrak vectors round trip") {
  const GammaElement f = GammaElement::power_sum(OddPartition{3, 1}) + Rational(2, 3);
  CHECK(from_pfrak_vector(to_pfrak_vector(f)) == f);
}

TEST_CASE("derived operators are defined up to the cutoff") {
  for (const char *name : {"omega01", "omega_m1", "omega_m2", "omega_p1", "omega_p2"}) {
    const auto op = operator_by_name(name);
    CHECK(op.matrix(6).size() == enumerate_odd_upto(6).size());
  }
  CHECK(omega01().name() == operator_by_name("omega01").name());
}
