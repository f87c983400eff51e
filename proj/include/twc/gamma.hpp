#pragma once

// The algebra Γ = ℚ[p_1, p_3, p_5, ...] stored in the odd power-sum basis,
// together with the Schur Q-functions, the character matrix X, the
// inhomogeneous power sums 𝔭_μ and the factorial Schur Q-functions Q*_λ.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twc/linalg.hpp"
#include "twc/partitions.hpp"
#include "twc/rational.hpp"

namespace twc {

/// Sparse linear combination of p_μ, μ odd. Zero coefficients are never stored.
class GammaElement {
 public:
  using Terms = std::map<OddPartition, Rational>;

  GammaElement() = default;
  GammaElement(const Rational &constant);  // NOLINT: scalars embed implicitly
  GammaElement(int constant) : GammaElement(Rational(constant)) {}
  /// p_μ.
  static GammaElement power_sum(const OddPartition &mu);

  const Terms &terms() const { return terms_; }
  Rational coeff(const OddPartition &mu) const;
  void add_term(const OddPartition &mu, const Rational &c);
  bool is_zero() const { return terms_.empty(); }
  /// Max |μ| over the support; -1 for the zero element.
  int degree() const;
  GammaElement homogeneous_part(int degree) const;

  GammaElement &operator+=(const GammaElement &other);
  GammaElement &operator-=(const GammaElement &other);
  GammaElement &operator*=(const Rational &c);
  friend GammaElement operator+(GammaElement a, const GammaElement &b) { return a += b; }
  friend GammaElement operator-(GammaElement a, const GammaElement &b) { return a -= b; }
  friend GammaElement operator-(GammaElement a) { return a *= Rational(-1); }
  friend GammaElement operator*(GammaElement a, const Rational &c) { return a *= c; }
  friend GammaElement operator*(const Rational &c, GammaElement a) { return a *= c; }
  /// Bilinear product, p_μ p_γ = p_{μ∪γ}.
  friend GammaElement operator*(const GammaElement &a, const GammaElement &b);
  friend bool operator==(const GammaElement &, const GammaElement &) = default;

  std::string to_string() const;  // "4/3 p[1,1,1] - 4/3 p[3]"

 private:
  Terms terms_;
};

GammaElement multiply(const GammaElement &f, const GammaElement &g);

/// f(λ_1, λ_2, ...) with p_k(λ) = Σ λ_i^k.
Rational evaluate(const GammaElement &f, const Partition &lambda);

/// q_r from Σ q_r t^r = exp(2 Σ_{k odd} p_k t^k / k).
GammaElement q_series(int r);

/// Q_λ as the Pfaffian of the two-row functions Q_{(λ_i, λ_j)}.
GammaElement schur_q(const StrictPartition &lambda);

/// X_μ^λ for μ ∈ OP_n (rows), λ ∈ SP_n (columns), defined by
/// p_μ = Σ_λ 2^{-ℓ(λ)} X_μ^λ Q_λ.
struct CharacterMatrix {
  int n = 0;
  std::vector<OddPartition> rows;
  std::vector<StrictPartition> cols;
  RationalMatrix entries;

  const Rational &at(const OddPartition &mu, const StrictPartition &lambda) const;
};

/// Computed by solving for p_μ in the Q-basis and checked against the
/// inverse relation Q_λ = Σ_μ 2^{ℓ(μ)} z_μ^{-1} X_μ^λ p_μ. Throws
/// std::logic_error if the solve is singular or the check fails.
const CharacterMatrix &x_matrix(int n);

/// χ^λ(μ) = 2^{ℓ(μ) - (ℓ(λ)-δ(λ))/2} X_μ^λ. Requires |λ| = |μ|.
Rational character(const StrictPartition &lambda, const OddPartition &mu);

/// dim L^λ = 2^{n - (ℓ(λ)-δ(λ))/2} g'_λ.
Integer simple_dimension(const StrictPartition &lambda);

/// 𝔭_μ(λ) = 2^{k-ℓ(μ)} n^{↓k} χ^λ(μ ∪ 1^{n-k}) / χ^λ(1^n), zero for n < k.
Rational pfrak_value(const OddPartition &mu, const StrictPartition &lambda);

/// Unique element of degree <= `degree` matching `values` on strict
/// partitions of size <= degree + slack; slack grows from `slack` to
/// `max_slack` until the system has a unique solution. Throws
/// std::runtime_error if it never does, or if the data is inconsistent with
/// any element of that degree.
GammaElement interpolate(const std::function<Rational(const StrictPartition &)> &values, int degree,
                         int slack = 2, int max_slack = 8);

/// 𝔭_μ, by interpolation of pfrak_value with degree bound |μ|.
GammaElement pfrak(const OddPartition &mu);

/// Q*_λ = 2^{(ℓ(λ)-δ(λ))/2} Σ_μ χ^λ(μ) / z_μ · 𝔭_μ.
GammaElement factorial_schur_q(const StrictPartition &lambda);

/// 𝕞↑_k and 𝕞↓_k as elements of Γ (interpolated with degree bound 2k-1).
GammaElement up_moment_element(int k);
GammaElement down_moment_element(int k);

enum class Basis { p, pfrak, Q, Qstar };
Basis parse_basis(const std::string &name);
std::string basis_name(Basis b);

using Coordinates = std::map<Partition, Rational>;

/// Coordinates of f in the chosen basis (keys are odd partitions for p and
/// pfrak, strict partitions for Q and Qstar).
Coordinates to_basis(const GammaElement &f, Basis basis);
GammaElement from_basis(const Coordinates &coords, Basis basis);
/// The basis element itself, for a key of the right kind.
GammaElement basis_element(const Partition &index, Basis basis);

// Cache import/export for on-disk persistence.
std::vector<int> cached_x_levels();
void install_x_matrix(CharacterMatrix m);
std::map<OddPartition, GammaElement> cached_pfrak();
void install_pfrak(const OddPartition &mu, GammaElement value);

}  // namespace twc
