#pragma once

// Exact arithmetic in the finite Sergeev superalgebra Ser_n = Cl_n ⋊ ℚ[S_n]
// and in the twisted hyperoctahedral group B̂_n that covers it.
//
// Basis monomials are normal-ordered: a Clifford word c_{i_1}...c_{i_t} with
// i_1 < ... < i_t on the left, a permutation on the right. Products reduce
// with σ c_i = c_{σ(i)} σ, c_i² = -1 and c_i c_j = -c_j c_i.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twc/partitions.hpp"
#include "twc/rational.hpp"

namespace twc {

/// Largest supported level; monomials pack into 64-bit keys.
inline constexpr int kMaxLevel = 12;

/// Permutation of {1..n}. Products compose right to left: (σ τ)(i) = σ(τ(i)).
class Permutation {
 public:
  explicit Permutation(int n = 0);
  /// One-line notation, 1-based.
  static Permutation from_images(const std::vector<int> &images);
  static Permutation transposition(int i, int j, int n);
  /// Coxeter generator s_i = (i, i+1).
  static Permutation simple(int i, int n);
  /// Longest element τ_0: i ↦ n+1-i.
  static Permutation longest(int n);

  int level() const { return n_; }
  /// Image of i, 1-based.
  int operator()(int i) const { return img_[i - 1] + 1; }
  bool fixes(int i) const { return img_[i - 1] == i - 1; }
  bool is_identity() const;
  std::vector<int> images() const;
  Permutation inverse() const;
  Partition cycle_type() const;
  /// Same permutation at level m; moving down requires fixing n, n-1, ..., m+1.
  Permutation releveled(int m) const;

  std::uint64_t packed() const;
  static Permutation unpack(std::uint64_t bits, int n);

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &a, const Permutation &b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxLevel> img_{};
};

/// Bit i-1 set ⇔ c_i occurs.
using CliffordWord = std::uint32_t;

std::vector<int> clifford_indices(CliffordWord w);
CliffordWord clifford_word(const std::vector<int> &indices);

/// c_A σ in normal form.
struct SergeevMonomial {
  CliffordWord clifford = 0;
  Permutation perm;

  int parity() const;
  std::uint64_t packed() const;
  static SergeevMonomial unpack(std::uint64_t bits, int n);
  friend bool operator==(const SergeevMonomial &, const SergeevMonomial &) = default;
};

/// Product of two monomials at the same level: sign ∈ {±1} and the
/// normal-form result.
std::pair<int, SergeevMonomial> multiply(const SergeevMonomial &a, const SergeevMonomial &b);

/// Element of Ser_n with exact rational coefficients.
class SergeevElement {
 public:
  explicit SergeevElement(int n = 0);
  static SergeevElement scalar(int n, const Rational &c);
  static SergeevElement identity(int n) { return scalar(n, Rational(1)); }
  static SergeevElement monomial(int n, const SergeevMonomial &m, const Rational &c = Rational(1));
  static SergeevElement clifford_generator(int i, int n);
  static SergeevElement permutation(const Permutation &p);

  int level() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const SergeevMonomial &m) const;
  void add_term(const SergeevMonomial &m, const Rational &c);
  /// Terms sorted by packed key; deterministic.
  std::vector<std::pair<SergeevMonomial, Rational>> sorted_terms() const;
  bool is_even() const;

  /// Standard embedding Ser_n ↪ Ser_m for m >= n; for m < n every term
  /// must already lie in Ser_m (throws std::invalid_argument otherwise).
  SergeevElement releveled(int m) const;

  SergeevElement &operator+=(const SergeevElement &other);
  SergeevElement &operator-=(const SergeevElement &other);
  SergeevElement &operator*=(const Rational &c);
  friend SergeevElement operator+(SergeevElement a, const SergeevElement &b) { return a += b; }
  friend SergeevElement operator-(SergeevElement a, const SergeevElement &b) { return a -= b; }
  friend SergeevElement operator*(SergeevElement a, const Rational &c) { return a *= c; }
  friend SergeevElement operator*(const Rational &c, SergeevElement a) { return a *= c; }
  /// Throws std::invalid_argument on a level mismatch.
  friend SergeevElement operator*(const SergeevElement &a, const SergeevElement &b);
  friend bool operator==(const SergeevElement &a, const SergeevElement &b);

  std::string to_string() const;

 private:
  void check_level(const SergeevElement &other) const;

  int n_ = 0;
  std::unordered_map<std::uint64_t, Rational> terms_;
};

SergeevElement multiply(const SergeevElement &x, const SergeevElement &y);
SergeevElement power(const SergeevElement &x, int exponent);
/// The inverse of a basis monomial at level n.
SergeevElement inverse_monomial(const SergeevMonomial &m, int n);
/// pr_{n-1}: keeps the terms lying in Ser_{n-1}, re-leveled to n-1.
SergeevElement project_to_lower(const SergeevElement &x);
/// Commutes with every s_i and c_j.
bool is_central(const SergeevElement &x);

/// Element z^β a_A σ of the twisted hyperoctahedral group B̂_n.
class HyperElement {
 public:
  explicit HyperElement(int n = 0) : perm_(n) {}
  HyperElement(bool z, CliffordWord a, Permutation perm) : z_(z), a_(a), perm_(std::move(perm)) {}
  static HyperElement central_z(int n) { return HyperElement(true, 0, Permutation(n)); }
  static HyperElement generator_a(int i, int n);
  static HyperElement generator_s(int i, int n);

  int level() const { return perm_.level(); }
  bool z() const { return z_; }
  CliffordWord clifford() const { return a_; }
  const Permutation &perm() const { return perm_; }
  HyperElement inverse() const;
  /// π_n: z ↦ -1.
  SergeevElement project() const;
  std::uint64_t packed() const;

  friend HyperElement operator*(const HyperElement &a, const HyperElement &b);
  friend bool operator==(const HyperElement &, const HyperElement &) = default;

 private:
  bool z_ = false;
  CliffordWord a_ = 0;
  Permutation perm_;
};

/// Every element of B̂_n (2^{n+1} n! of them).
std::vector<HyperElement> all_group_elements(int n);
/// Conjugacy class of h in B̂_n, by saturation under the generators s_i, a_j.
std::vector<HyperElement> conjugacy_orbit(const HyperElement &h);
/// π_n(Σ_{g ∈ B̂_n} g h g^{-1}).
SergeevElement projected_conjugation_sum(const HyperElement &h);
/// Whether h is conjugate to π̃_μ or z π̃_μ for some odd μ ⊢ n.
bool in_odd_split_class(const HyperElement &h);

/// L_{n,k}: left coset representatives of B̂_k in B̂_n, n^{↓(n-k)} 2^{n-k} of them.
std::vector<HyperElement> coset_reps(int n, int k);

/// π̃_μ^{(n)} = τ_0 π_μ τ_0^{-1}: cycle type μ ∪ 1^{n-k}, fixing 1..n-k.
Permutation distinguished_perm(const OddPartition &mu, int n);

/// J_1 = 0, J_k = Σ_{j<k} (1 + c_j c_k)(j, k), at level n.
SergeevElement jm_element(int k, int n);
/// J_k^e at level n (memoized).
const SergeevElement &jm_power(int k, int n, int exponent);

/// a_μ^{(n)} = π(Σ_{g ∈ L_{n,n-k}} g π̃_μ^{(n)} g^{-1}) for μ ⊢ k <= n.
const SergeevElement &class_sum_scaled(const OddPartition &mu, int n);
/// C_μ = π(Ĉ_{(μ,∅,0)}) for μ ⊢ n, by orbit saturation.
const SergeevElement &class_sum_full(const OddPartition &mu);
/// 2^{ℓ(μ)} z_{μ∪1^{n-k}} / (n-k)!, the factor with a_μ^{(n)} = factor · C_{μ∪1^{n-k}}.
Rational class_sum_scalar(const OddPartition &mu, int n);

/// e_λ = 2^{(-ℓ(λ)-δ(λ))/2} g'_λ / n! Σ_μ χ^λ(μ) C_μ.
const SergeevElement &central_idempotent(const StrictPartition &lambda);

/// χ̃^λ(x) for central even x, read off x e_λ = χ̃^λ(x) e_λ. Throws
/// std::domain_error if x e_λ is not proportional to e_λ.
Rational normalized_character(const StrictPartition &lambda, const SergeevElement &x);

/// pr_n(J_{n+1}^{2k}) in Ser_n.
const SergeevElement &up_jm_projection(int k, int n);
/// Σ_{x ∈ L_{n,n-1}} x J_n^r x^{-1} in Ser_n.
const SergeevElement &down_jm_class_sum(int r, int n);

Rational up_moment_via_jm(int k, const StrictPartition &lambda);
Rational down_moment_via_jm(int k, const StrictPartition &lambda);

/// Multiplicities m_ν in res χ^λ = Σ_ν m_ν χ^ν, solved from the character
/// tables. Only nonzero entries are returned. Requires |λ| >= 1.
std::map<StrictPartition, Integer> restriction_multiplicities(const StrictPartition &lambda);
/// 2^{(2+ℓ(ν)-δ(ν)-ℓ(λ)+δ(λ))/2} if λ ↘ ν, else 0.
Integer branching_multiplicity(const StrictPartition &lambda, const StrictPartition &nu);

}  // namespace twc
