#include "twc/center.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "twc/linalg.hpp"
#include "twc/memo.hpp"

namespace twc {

namespace {

void check_chart(const CenterElement &a, const CenterElement &b) {
  if (a.chart() != b.chart()) throw std::invalid_argument("center elements live in different charts");
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

GammaElement d_image(int subscript) { return down_moment_element(subscript / 2 + 1); }

// Top homogeneous part of φ(d_{ν_1-1} ... d_{ν_r-1}), ν odd, of Γ-degree |ν|.
GammaElement d_monomial_top(const OddPartition &nu) {
  GammaElement out(1);
  for (int part : nu.parts()) out = out * d_image(part - 1).homogeneous_part(part);
  return out;
}

GammaElement d_monomial_image(const CenterElement::Key &key) {
  GammaElement out(1);
  for (int s : key) out = out * d_image(s);
  return out;
}

// Coordinates of a homogeneous degree-D element in the tops of the
// d-monomials of Γ-degree D.
std::map<OddPartition, Rational> solve_d_level(const GammaElement &top, int degree) {
  static Memo<int, std::optional<RationalMatrix>> inverse_memo;
  const auto odd = enumerate_odd(degree);
  const auto &inv = inverse_memo.get(degree, [&] {
    RationalMatrix m(odd.size(), RationalVector(odd.size()));
    for (std::size_t j = 0; j < odd.size(); ++j) {
      const auto t = d_monomial_top(odd[j]);
      for (std::size_t i = 0; i < odd.size(); ++i) m[i][j] = t.coeff(odd[i]);
    }
    return inverse(m);
  });
  if (!inv) throw std::logic_error("bubble tops are dependent in degree " + std::to_string(degree));
  std::map<OddPartition, Rational> out;
  for (std::size_t j = 0; j < odd.size(); ++j) {
    Rational c = 0;
    for (std::size_t i = 0; i < odd.size(); ++i) c += (*inv)[j][i] * top.coeff(odd[i]);
    if (sgn(c) != 0) out.emplace(odd[j], c);
  }
  return out;
}

}  // namespace

CenterElement CenterElement::scalar(const Rational &c, Chart chart) {
  CenterElement x(chart);
  x.add_term({}, c);
  return x;
}

void CenterElement::add_term(Key key, const Rational &c) {
  if (sgn(c) == 0) return;
  key = sorted_desc(std::move(key));
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CenterElement &CenterElement::operator+=(const CenterElement &other) {
  check_chart(*this, other);
  for (const auto &[k, c] : other.terms_) add_term(k, c);
  return *this;
}

CenterElement &CenterElement::operator-=(const CenterElement &other) {
  check_chart(*this, other);
  for (const auto &[k, c] : other.terms_) add_term(k, -c);
  return *this;
}

CenterElement &CenterElement::operator*=(const Rational &c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto &entry : terms_) entry.second *= c;
  return *this;
}

CenterElement operator*(const CenterElement &a, const CenterElement &b) {
  const CenterElement bb = to_chart(b, a.chart());
  if (a.chart() == Chart::alpha) return phi_inverse(phi(a) * phi(bb), Chart::alpha);
  CenterElement out(Chart::d);
  for (const auto &[ka, ca] : a.terms_)
    for (const auto &[kb, cb] : bb.terms_) {
      auto key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add_term(std::move(key), ca * cb);
    }
  return out;
}

std::string CenterElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[key, c] = *it;
    const Rational mag = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    if (key.empty()) {
      os << twc::to_string(mag);
      continue;
    }
    if (mag != 1) os << twc::to_string(mag) << " ";
    if (chart_ == Chart::alpha) {
      os << "α" << Partition(key).to_string();
    } else {
      for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        if (i) os << " ";
        os << "d" << key[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
      }
    }
  }
  return os.str();
}

CenterElement alpha_of_partition(const Partition &nu) {
  if (!nu.is_odd()) throw std::invalid_argument("α_ν needs an odd partition, got " + nu.to_string());
  CenterElement x(Chart::alpha);
  x.add_term(nu.parts(), 1);
  return x;
}

CenterElement d_generator(int k) {
  if (k < 0) throw std::invalid_argument("d_{2k} needs k >= 0");
  CenterElement x(Chart::d);
  x.add_term({2 * k}, 1);
  return x;
}

CenterElement dbar(int k) {
  if (k < 0) throw std::invalid_argument("d̄_{2k} needs k >= 0");
  static Memo<int, CenterElement> memo;
  return memo.get(k, [k] {
    if (k == 0) return CenterElement::scalar(1, Chart::d);
    CenterElement out(Chart::d);
    for (int a = 0; a < k; ++a) out += dbar(a) * d_generator(k - 1 - a);
    return out;
  });
}

GammaElement phi(const CenterElement &x) {
  GammaElement out;
  for (const auto &[key, c] : x.terms()) {
    if (x.chart() == Chart::alpha) {
      const OddPartition nu(key);
      out += c * pow2(nu.length()) * pfrak(nu);
    } else {
      out += c * d_monomial_image(key);
    }
  }
  return out;
}

CenterElement phi_inverse(const GammaElement &f, Chart chart) {
  CenterElement out(chart);
  if (chart == Chart::alpha) {
    for (const auto &[mu, c] : to_basis(f, Basis::pfrak)) out.add_term(mu.parts(), c / pow2(mu.length()));
    return out;
  }
  GammaElement rem = f;
  while (!rem.is_zero()) {
    const int d = rem.degree();
    for (const auto &[nu, c] : solve_d_level(rem.homogeneous_part(d), d)) {
      CenterElement::Key key;
      for (int part : nu.parts()) key.push_back(part - 1);
      rem -= c * d_monomial_image(key);
      out.add_term(std::move(key), c);
    }
    if (rem.degree() >= d) throw std::logic_error("bubble peeling did not lower the degree");
  }
  return out;
}

CenterElement to_chart(const CenterElement &x, Chart chart) {
  if (x.chart() == chart) return x;
  return phi_inverse(phi(x), chart);
}

int grade(const CenterElement &x) {
  const CenterElement y = to_chart(x, Chart::d);
  int best = -1;
  for (const auto &[key, c] : y.terms()) {
    int g = 0;
    for (int s : key) g += s == 0 ? 0 : s + 1;
    best = std::max(best, g);
  }
  return best;
}

SergeevElement fock_image(const CenterElement &x, int n) {
  SergeevElement out(n);
  for (const auto &[key, c] : x.terms()) {
    if (x.chart() == Chart::alpha) {
      const OddPartition nu(key);
      if (nu.size() <= n) out += class_sum_scaled(nu, n) * c;
      continue;
    }
    SergeevElement term = SergeevElement::identity(n);
    for (int s : key) {
      if (n == 0) {
        term = SergeevElement(0);
        break;
      }
      term = term * down_jm_class_sum(s, n);
    }
    out += term * c;
  }
  return out;
}

const SergeevElement &fock_image_dbar(int k, int n) { return up_jm_projection(k, n); }

bool alpha_leading_term_check(int k) {
  const GammaElement diff = phi(alpha_of_partition(Partition{2 * k + 1})) - phi(d_generator(k));
  return diff.degree() < 2 * k + 1;
}

bool alpha_leading_term_graded_check(int k) {
  const CenterElement diff = to_chart(alpha_of_partition(Partition{2 * k + 1}), Chart::d) - d_generator(k);
  return grade(diff) < 2 * k + 1;
}

std::map<OddPartition, Rational> class_sum_coordinates(const SergeevElement &x) {
  const int n = x.level();
  std::map<OddPartition, Rational> out;
  SergeevElement rebuilt(n);
  for (const auto &mu : enumerate_odd(n)) {
    const Rational c = x.coeff({0, distinguished_perm(mu, n)});
    if (sgn(c) == 0) continue;
    out.emplace(mu, c);
    rebuilt += class_sum_full(mu) * c;
  }
  if (!(rebuilt == x)) throw std::logic_error("element is not in the span of the odd class sums");
  return out;
}

GammaElement idempotent_closure(const StrictPartition &lambda) {
  const int n = lambda.size();
  GammaElement out;
  for (const auto &[mu, c] : class_sum_coordinates(central_idempotent(lambda)))
    out += c * Rational(factorial(n)) / Rational(z_stat(mu)) * pow2(n) * pfrak(mu);
  return out;
}

}  // namespace twc
