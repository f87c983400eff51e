#pragma once

// The Lie algebra D̂⁻ (bracket with central extension) and the action of its
// generators on Γ in the 𝔭-basis.
//
// To keep scalars rational the generators are rescaled:
//   A₋ = √2 ω_{-1,0},  A₊ = √2 ω_{1,0},  B_m = √2 ω_{-m,0}.

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "twc/gamma.hpp"
#include "twc/memo.hpp"
#include "twc/partitions.hpp"
#include "twc/rational.hpp"

namespace twc {

/// Univariate polynomial in D with rational coefficients; coeffs()[i] is the
/// coefficient of D^i, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational &c);  // NOLINT: constants embed implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial variable();  // D

  const std::vector<Rational> &coeffs() const { return c_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational operator()(const Rational &x) const;
  /// f(D + a).
  Polynomial shifted(const Rational &a) const;
  /// f(-D).
  Polynomial reflected() const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a * Rational(-1); }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Σ_r t^r f_r(D) + c·C in the ambient algebra of differential operators.
class LieElement {
 public:
  LieElement() = default;
  /// t^r f(D), unchecked.
  static LieElement term(int r, const Polynomial &f);
  /// t^r f(D), required to lie in D̂⁻: f(-D-r) = f(D) for r odd and
  /// f(-D-r) = -f(D) for r even. Throws std::invalid_argument otherwise.
  static LieElement twisted(int r, const Polynomial &f);
  static LieElement central(const Rational &c);

  const std::map<int, Polynomial> &terms() const { return terms_; }
  const Rational &central_coeff() const { return central_; }
  bool is_zero() const { return terms_.empty() && sgn(central_) == 0; }
  /// Every component satisfies the D̂⁻ parity condition.
  bool in_twisted_subalgebra() const;

  LieElement &operator+=(const LieElement &o);
  LieElement &operator-=(const LieElement &o);
  LieElement &operator*=(const Rational &c);
  friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
  friend LieElement operator*(const Rational &c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement &, const LieElement &) = default;

  std::string to_string() const;

 private:
  void add(int r, const Polynomial &f);
  std::map<int, Polynomial> terms_;
  Rational central_ = 0;
};

bool satisfies_twisted_parity(int r, const Polynomial &f);

/// ψ(t^r f, t^s g): Σ_{-r<=j<=-1} f(j) g(j+r) if r = -s >= 0, extended to
/// r < 0 by antisymmetry, 0 if r + s ≠ 0.
Rational cocycle(int r, const Polynomial &f, int s, const Polynomial &g);

/// [t^r f, t^s g] = t^{r+s}(f(D+s) g(D) - f(D) g(D+r)) + ψ C, bilinearly.
LieElement bracket(const LieElement &x, const LieElement &y);

/// Coordinates in the 𝔭-basis.
using PfrakVector = std::map<OddPartition, Rational>;

PfrakVector to_pfrak_vector(const GammaElement &f);
GammaElement from_pfrak_vector(const PfrakVector &v);

/// Thrown when an input has 𝔭-degree above the cutoff.
class CutoffExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Linear operator on Γ given by its images of 𝔭_μ. Columns are computed on
/// demand and memoized; the cutoff bounds the degree of accepted inputs.
class WOperator {
 public:
  using Column = std::function<PfrakVector(const OddPartition &)>;

  WOperator(std::string name, Column column);

  const std::string &name() const { return name_; }
  /// Image of 𝔭_μ, without any cutoff check.
  const PfrakVector &column(const OddPartition &mu) const;
  /// Throws CutoffExceeded if some 𝔭_μ in v has |μ| > cutoff.
  PfrakVector apply(const PfrakVector &v, int cutoff) const;
  GammaElement apply(const GammaElement &f, int cutoff) const;
  /// Columns for every odd μ with |μ| <= cutoff.
  std::map<OddPartition, PfrakVector> matrix(int cutoff) const;

  friend WOperator operator*(const WOperator &a, const WOperator &b);  // a ∘ b
  friend WOperator operator+(const WOperator &a, const WOperator &b);
  friend WOperator operator-(const WOperator &a, const WOperator &b);
  friend WOperator operator*(const Rational &c, const WOperator &a);

 private:
  PfrakVector apply_unchecked(const PfrakVector &v) const;

  std::string name_;
  Column column_;
  std::shared_ptr<Memo<std::vector<int>, PfrakVector>> cache_;
};

WOperator commutator(const WOperator &a, const WOperator &b);
WOperator identity_operator();
/// Multiplication by g.
WOperator multiplication_operator(const GammaElement &g, std::string name);

/// 𝔭_μ ↦ 2 𝔭_{(μ,1)}.
const WOperator &a_minus();
/// 𝔭_μ ↦ 𝔭_μ + k 𝔭_{μ̂}, k the number of parts of μ equal to 1.
const WOperator &a_plus();
/// Multiplication by -𝔭_3 - 2 𝔭_{(1,1)}.
const WOperator &omega03();
/// 𝔭_μ ↦ 2 𝔭_{(μ,m)}; m odd and >= 3, else std::invalid_argument.
WOperator b_operator(int m);

GammaElement apply_A_minus(const GammaElement &f, int cutoff = 8);
GammaElement apply_A_plus(const GammaElement &f, int cutoff = 8);
GammaElement apply_omega03(const GammaElement &f, int cutoff = 8);
GammaElement apply_B(int m, const GammaElement &f, int cutoff = 8);

/// Operators obtained from A±, ω_{0,3} by the generator identities:
///   ω_{0,1}                  = -1/40 [[ω_{0,3},A₋],A₊] + 1/10 A₋A₊
///   √2(ω_{-1,2} - ω_{-1,1})  = 1/6 [ω_{0,3},A₋] + 1/3 A₋ω_{0,1}
///   ω_{-2,1} - ω_{-2,0}      = 1/4 [√2(ω_{-1,2} - ω_{-1,1}), A₋]
///   √2(ω_{1,2} + ω_{1,1})    = -1/6 [ω_{0,3},A₊] + 1/3 ω_{0,1}A₊
///   ω_{2,1} + ω_{2,0}        = -1/4 [√2(ω_{1,2} + ω_{1,1}), A₊]
const WOperator &omega01();
const WOperator &omega_minus1_diff();
const WOperator &omega_minus2_diff();
const WOperator &omega_plus1_sum();
const WOperator &omega_plus2_sum();

/// Look up a generator by CLI name: Aminus, Aplus, omega03, B3, B5, ...,
/// omega01, omega_m1, omega_m2, omega_p1, omega_p2.
WOperator operator_by_name(const std::string &name);

}  // namespace twc
