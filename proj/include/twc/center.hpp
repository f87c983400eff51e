#pragma once

// Symbolic model of the center End(1) of the twisted Heisenberg category.
//
// Two charts are used. In the alpha chart an element is a linear
// combination of the closures α_ν, ν odd (a linear basis; note that
// α_{(μ,1)} ≠ α_μ α_1, so products are computed through φ). In the d chart
// it is an honest polynomial in the clockwise bubbles d_0, d_2, d_4, ...

#include <map>
#include <string>
#include <vector>

#include "twc/gamma.hpp"
#include "twc/partitions.hpp"
#include "twc/rational.hpp"
#include "twc/sergeev.hpp"

namespace twc {

enum class Chart { alpha, d };

class CenterElement {
 public:
  /// alpha chart: parts of ν; d chart: bubble subscripts 2k. Both descending.
  using Key = std::vector<int>;

  explicit CenterElement(Chart chart = Chart::alpha) : chart_(chart) {}
  static CenterElement scalar(const Rational &c, Chart chart = Chart::alpha);

  Chart chart() const { return chart_; }
  const std::map<Key, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Key key, const Rational &c);

  CenterElement &operator+=(const CenterElement &other);
  CenterElement &operator-=(const CenterElement &other);
  CenterElement &operator*=(const Rational &c);
  friend CenterElement operator+(CenterElement a, const CenterElement &b) { return a += b; }
  friend CenterElement operator-(CenterElement a, const CenterElement &b) { return a -= b; }
  friend CenterElement operator*(CenterElement a, const Rational &c) { return a *= c; }
  friend CenterElement operator*(const Rational &c, CenterElement a) { return a *= c; }
  /// Algebra product, in the chart of a.
  friend CenterElement operator*(const CenterElement &a, const CenterElement &b);
  friend bool operator==(const CenterElement &, const CenterElement &) = default;

  std::string to_string() const;  // "α[3,1] - 2 α[3]", "d2 d0^2 + 1"

 private:
  Chart chart_;
  std::map<Key, Rational> terms_;
};

/// α_ν. Throws std::invalid_argument if ν has an even part.
CenterElement alpha_of_partition(const Partition &nu);
/// d_{2k}.
CenterElement d_generator(int k);
/// d̄_{2k} = Σ_{a+b=k-1} d̄_{2a} d_{2b}, d̄_0 = 1, in the d chart.
CenterElement dbar(int k);

/// α_μ ↦ 2^{ℓ(μ)} 𝔭_μ, d_{2k} ↦ 𝕞↓_{k+1}.
GammaElement phi(const CenterElement &x);
/// Inverse of phi, landing in the requested chart.
CenterElement phi_inverse(const GammaElement &f, Chart chart);
CenterElement to_chart(const CenterElement &x, Chart chart);

/// deg(d_0) = 0, deg(d_{2k}) = 2k+1, extended as the max over monomials.
/// Returns -1 for zero. Alpha-chart input is converted first.
int grade(const CenterElement &x);

/// F_n(x) ∈ Z(Ser_n)_0.
SergeevElement fock_image(const CenterElement &x, int n);
/// F_n(d̄_{2k}) = pr_n(J_{n+1}^{2k}), computed directly.
const SergeevElement &fock_image_dbar(int k, int n);

/// Γ-degree of φ(α_{2k+1}) - φ(d_{2k}) is below 2k+1.
bool alpha_leading_term_check(int k);
/// α_{2k+1} - d_{2k} has grade below 2k+1.
bool alpha_leading_term_graded_check(int k);

/// Coordinates of an element of Z(Ser_n)_0 in the class-sum basis {C_μ}.
/// Throws std::logic_error if x is not in their span.
std::map<OddPartition, Rational> class_sum_coordinates(const SergeevElement &x);

/// Closure of e_λ, via closure(C_μ) ↦ (n!/z_μ) 2^n 𝔭_μ.
GammaElement idempotent_closure(const StrictPartition &lambda);

}  // namespace twc
