#pragma once

// Integer partitions, strict and odd partitions, shifted diagrams and the
// counting formulas attached to them.

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "twc/rational.hpp"

namespace twc {

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is the canonical listing order used everywhere in the library:
/// smaller size first, and within one size descending lexicographic, so
/// that partitions of 3 list as (3), (2,1), (1,1,1).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int> &parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i, 0-based; zero past the last part.
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  /// Number of parts equal to value.
  int multiplicity(int value) const;

  bool is_strict() const;
  bool is_odd() const;
  /// Containment of Young diagrams: parts()[i] >= other.part(i) for all i.
  bool contains(const Partition &other) const;

  std::string to_string() const;  // "[6,5,2,1]"

  friend bool operator==(const Partition &, const Partition &) = default;
  friend std::strong_ordering operator<=>(const Partition &a, const Partition &b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Partition with pairwise distinct parts.
class StrictPartition : public Partition {
 public:
  StrictPartition() = default;
  StrictPartition(std::initializer_list<int> parts);
  explicit StrictPartition(std::vector<int> parts);
  explicit StrictPartition(const Partition &p);
};

/// Partition whose parts are all odd.
class OddPartition : public Partition {
 public:
  OddPartition() = default;
  OddPartition(std::initializer_list<int> parts);
  explicit OddPartition(std::vector<int> parts);
  explicit OddPartition(const Partition &p);
};

/// Cell of a shifted diagram, 1-based: row i occupies columns i .. i+λ_i-1.
struct ShiftedCell {
  int row = 1;
  int col = 1;
  /// col - row; nonnegative on shifted diagrams.
  int content() const { return col - row; }
  friend bool operator==(const ShiftedCell &, const ShiftedCell &) = default;
};

std::vector<ShiftedCell> shifted_cells(const StrictPartition &lambda);

/// Multiset union of parts.
Partition merge(const Partition &a, const Partition &b);
OddPartition merge(const OddPartition &a, const OddPartition &b);
/// mu with (n - |mu|) parts equal to one appended.
OddPartition pad_with_ones(const OddPartition &mu, int n);

std::vector<Partition> enumerate_partitions(int n);
std::vector<StrictPartition> enumerate_strict(int n);
std::vector<OddPartition> enumerate_odd(int n);
/// All strict partitions of size 0..max_size, in canonical order.
std::vector<StrictPartition> enumerate_strict_upto(int max_size);
std::vector<OddPartition> enumerate_odd_upto(int max_size);

/// δ(λ) = ℓ(λ) mod 2.
int length_parity(const StrictPartition &lambda);

/// z_ρ = Π i^{m_i} m_i!, the centralizer order of a permutation of type ρ.
Integer z_stat(const Partition &rho);

/// g'_λ, standard shifted tableaux count, by the hook-free product formula.
Integer count_shifted_tableaux(const StrictPartition &lambda);

/// g_λ = 2^{|λ|-ℓ(λ)} g'_λ, the number of κ-weighted paths from ∅ in the
/// Schur graph.
Integer path_count(const StrictPartition &lambda);

struct KerovCoordinates {
  std::set<int> addable;    // contents of cells that can be added
  std::set<int> removable;  // contents of cells that can be removed
};

KerovCoordinates kerov_coordinates(const StrictPartition &lambda);

/// λ + □(x); throws std::invalid_argument if x is not an addable content.
StrictPartition add_cell(const StrictPartition &lambda, int content);
/// λ - □(y); throws std::invalid_argument if y is not a removable content.
StrictPartition remove_cell(const StrictPartition &lambda, int content);

/// Parses "3,1" or "[3,1]" (empty string or "[]" is ∅).
Partition parse_partition(const std::string &text);

}  // namespace twc
