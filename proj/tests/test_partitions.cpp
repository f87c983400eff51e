#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "twc/partitions.hpp"

using namespace twc;

namespace {

// Brute force: permutations of S_n commuting with a fixed one of type rho.
long brute_centralizer(const Partition &rho) {
  const int n = rho.size();
  std::vector<int> fixed(n);
  int pos = 0;
  for (int len : rho.parts()) {
    for (int i = 0; i < len; ++i) fixed[pos + i] = pos + (i + 1) % len;
    pos += len;
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = sigma[fixed[i]] == fixed[sigma[i]];
    count += ok;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

// Standard shifted tableaux by peeling off the cell holding the largest entry.
long brute_tableaux(const std::vector<int> &rows) {
  if (rows.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto smaller = rows;
    --smaller[i];
    const bool strict = i + 1 >= rows.size() || smaller[i] > rows[i + 1];
    if (!strict) continue;
    if (smaller[i] == 0) smaller.pop_back();
    total += brute_tableaux(smaller);
  }
  return total;
}

std::set<std::pair<int, int>> cell_set(const StrictPartition &p) {
  std::set<std::pair<int, int>> out;
  for (const auto &c : shifted_cells(p)) out.insert({c.row, c.col});
  return out;
}

int differing_content(const StrictPartition &big, const StrictPartition &small) {
  const auto a = cell_set(big), b = cell_set(small);
  std::vector<std::pair<int, int>> diff;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  REQUIRE(diff.size() == 1);
  return diff[0].second - diff[0].first;
}

// Every strict partition one cell larger or smaller, from the raw parts.
KerovCoordinates brute_kerov(const StrictPartition &lambda) {
  KerovCoordinates out;
  auto parts = lambda.parts();
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    auto bigger = parts;
    if (i == parts.size())
      bigger.push_back(1);
    else
      ++bigger[i];
    if (Partition(bigger).is_strict() && std::is_sorted(bigger.rbegin(), bigger.rend()))
      out.addable.insert(differing_content(StrictPartition(bigger), lambda));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto smaller = parts;
    if (--smaller[i] == 0) smaller.erase(smaller.begin() + i);
    if (Partition(smaller).is_strict() && std::is_sorted(smaller.rbegin(), smaller.rend()))
      out.removable.insert(differing_content(lambda, StrictPartition(smaller)));
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration counts and order") {
  const std::vector<std::size_t> strict_counts{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12};
  for (int n = 0; n <= 11; ++n) {
    const auto s = enumerate_strict(n);
    const auto o = enumerate_odd(n);
    CHECK(s.size() == strict_counts[n]);
    CHECK(o.size() == s.size());  // Euler
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    for (const auto &p : s) CHECK((p.size() == n && p.is_strict()));
    for (const auto &p : o) CHECK((p.size() == n && p.is_odd()));
    // Brute-force filter of all partitions.
    std::size_t filtered = 0;
    for (const auto &p : enumerate_partitions(n)) filtered += p.is_strict();
    CHECK(filtered == s.size());
  }
  CHECK(enumerate_strict(0).size() == 1);
  CHECK(enumerate_strict(0)[0].empty());
  CHECK(enumerate_strict(3) == std::vector<StrictPartition>{{3}, {2, 1}});
  CHECK(enumerate_strict(8).size() == 6);
  CHECK(enumerate_odd(3) == std::vector<OddPartition>{{3}, {1, 1, 1}});
}

TEST_CASE("canonical order puts smaller sizes first") {
  CHECK(Partition{3} < Partition{2, 1});
  CHECK(Partition{2, 1} < Partition{1, 1, 1});
  CHECK(Partition{5} < Partition{1, 1, 1, 1, 1, 1});
  const auto all = enumerate_strict_upto(6);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("length parity") {
  CHECK(length_parity(StrictPartition{}) == 0);
  CHECK(length_parity(StrictPartition{2, 1}) == 0);
  CHECK(length_parity(StrictPartition{6, 5, 2, 1}) == 0);
  CHECK(length_parity(StrictPartition{3}) == 1);
}

TEST_CASE("z statistic against brute-force centralizers") {
  CHECK(z_stat(Partition{1, 1}) == 2);
  CHECK(z_stat(Partition{3}) == 3);
  CHECK(z_stat(Partition{3, 1, 1}) == 6);
  for (int n = 1; n <= 6; ++n)
    for (const auto &rho : enumerate_partitions(n)) CHECK(z_stat(rho) == brute_centralizer(rho));
}

TEST_CASE("shifted tableaux: product formula against enumeration") {
  CHECK(count_shifted_tableaux(StrictPartition{2, 1}) == 1);
  CHECK(count_shifted_tableaux(StrictPartition{3, 1}) == 2);
  CHECK(count_shifted_tableaux(StrictPartition{3}) == 1);
  for (const auto &lambda : enumerate_strict_upto(12))
    CHECK(count_shifted_tableaux(lambda) == brute_tableaux(lambda.parts()));
}

TEST_CASE("path counts") {
  CHECK(path_count(StrictPartition{1}) == 1);
  CHECK(path_count(StrictPartition{2, 1}) == 2);
  CHECK(path_count(StrictPartition{3, 1}) == 8);
  CHECK(path_count(StrictPartition{}) == 1);
}

TEST_CASE("Kerov coordinates") {
  const auto k = kerov_coordinates(StrictPartition{6, 5, 2, 1});
  CHECK(k.addable == std::set<int>{2, 6});
  CHECK(k.removable == std::set<int>{0, 4});
  CHECK(kerov_coordinates(StrictPartition{1}).addable == std::set<int>{1});
  CHECK(kerov_coordinates(StrictPartition{1}).removable == std::set<int>{0});
  CHECK(kerov_coordinates(StrictPartition{}).addable == std::set<int>{0});
  CHECK(kerov_coordinates(StrictPartition{}).removable.empty());
  for (const auto &lambda : enumerate_strict_upto(10)) {
    const auto got = kerov_coordinates(lambda), want = brute_kerov(lambda);
    CHECK(got.addable == want.addable);
    CHECK(got.removable == want.removable);
    for (int x : got.addable) CHECK(remove_cell(add_cell(lambda, x), x) == lambda);
    for (int y : got.removable) CHECK(add_cell(remove_cell(lambda, y), y) == lambda);
  }
  CHECK_THROWS_AS(add_cell(StrictPartition{2, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(remove_cell(StrictPartition{2, 1}, 1), std::invalid_argument);
}

TEST_CASE("parsing and validation") {
  CHECK(parse_partition("3,1") == Partition{3, 1});
  CHECK(parse_partition("[3,1]") == Partition{3, 1});
  CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
  CHECK(parse_partition("").empty());
  CHECK(parse_partition("[]").empty());
  CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);
  CHECK_THROWS_AS(StrictPartition(Partition{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(OddPartition(Partition{2}), std::invalid_argument);
  CHECK(pad_with_ones(OddPartition{3}, 5) == OddPartition{3, 1, 1});
  CHECK(merge(OddPartition{3, 1}, OddPartition{5, 1}) == OddPartition{5, 3, 1, 1});
  CHECK(Partition{6, 5, 2, 1}.to_string() == "[6,5,2,1]");
}
