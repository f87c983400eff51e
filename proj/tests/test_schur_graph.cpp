#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twc/schur_graph.hpp"

using namespace twc;

TEST_CASE("edge multiplicities") {
  CHECK(edge_multiplicity(StrictPartition{2, 1}, StrictPartition{3, 1}) == 2);
  CHECK(edge_multiplicity(StrictPartition{2}, StrictPartition{2, 1}) == 1);
  CHECK(edge_multiplicity(StrictPartition{2}, StrictPartition{4}) == 0);
  CHECK(edge_multiplicity(StrictPartition{}, StrictPartition{1}) == 1);
}

TEST_CASE("transition probabilities") {
  CHECK(down_transition(StrictPartition{3, 1}, StrictPartition{2, 1}) == Rational(1, 2));
  CHECK(down_transition(StrictPartition{3, 1}, StrictPartition{3}) == Rational(1, 2));
  CHECK(down_transition(StrictPartition{1}, StrictPartition{}) == 1);
  CHECK(up_transition(StrictPartition{1}, StrictPartition{2}) == 1);
  CHECK(up_transition(StrictPartition{2, 1}, StrictPartition{3, 1}) == 1);
  CHECK(up_transition(StrictPartition{2}, StrictPartition{3}) == Rational(2, 3));
  CHECK(up_transition(StrictPartition{2}, StrictPartition{4}) == 0);
}

TEST_CASE("Plancherel measures") {
  CHECK(plancherel(0) == std::map<StrictPartition, Rational>{{StrictPartition{}, 1}});
  CHECK(plancherel(2) == std::map<StrictPartition, Rational>{{StrictPartition{2}, 1}});
  CHECK(plancherel(3) ==
        std::map<StrictPartition, Rational>{{StrictPartition{3}, Rational(2, 3)}, {StrictPartition{2, 1}, Rational(1, 3)}});
}

TEST_CASE("kernel invariants") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto &lambda : enumerate_strict(n)) {
      Rational total = 0;
      for (const auto &[nu, p] : down_row(lambda).targets) {
        CHECK(sgn(p) > 0);
        total += p;
      }
      CHECK(total == 1);
    }
  }
  for (const auto &nu : enumerate_strict_upto(8)) {
    Rational total = 0;
    for (const auto &[lambda, p] : up_row(nu).targets) {
      total += p;
      CHECK(p * Rational(path_count(nu)) * (nu.size() + 1) == Rational(path_count(lambda)));
    }
    CHECK(total == 1);
  }
}

TEST_CASE("path counts by dynamic programming") {
  for (const auto &lambda : enumerate_strict_upto(12)) CHECK(path_count_dp(lambda) == path_count(lambda));
}

TEST_CASE("moments") {
  for (const auto &lambda : enumerate_strict_upto(8)) {
    CHECK(up_moment(0, lambda) == 1);
    if (lambda.size() > 0) CHECK(down_moment(1, lambda) == 2 * lambda.size());
  }
  CHECK(up_moment(1, StrictPartition{1}) == 2);
  CHECK(up_moment(1, StrictPartition{2, 1}) == 6);
  CHECK(down_moment(1, StrictPartition{2, 1}) == 6);
  CHECK(down_moment(2, StrictPartition{1}) == 0);
  CHECK_THROWS_AS(down_moment(0, StrictPartition{1}), std::invalid_argument);
}

TEST_CASE("up moments from a direct sum over addable contents") {
  // Oracle: recompute from Kerov coordinates and the up-transition formula.
  for (const auto &lambda : enumerate_strict_upto(7)) {
    for (int k = 0; k <= 4; ++k) {
      Rational sum = 0;
      for (int x : kerov_coordinates(lambda).addable) {
        const auto up = add_cell(lambda, x);
        Rational s = Rational(x) * (x + 1), power = 1;
        for (int i = 0; i < k; ++i) power *= s;
        sum += Rational(path_count(up)) / (Rational(path_count(lambda)) * (lambda.size() + 1)) * power;
      }
      CHECK(up_moment(k, lambda) == sum);
    }
  }
}
