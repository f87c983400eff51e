#include "twc/gamma.hpp"

#include <sstream>
#include <stdexcept>

#include "twc/memo.hpp"
#include "twc/schur_graph.hpp"

namespace twc {

// ---------------------------------------------------------------- element

GammaElement::GammaElement(const Rational &constant) {
  if (sgn(constant) != 0) terms_.emplace(OddPartition{}, constant);
}

GammaElement GammaElement::power_sum(const OddPartition &mu) {
  GammaElement f;
  f.terms_.emplace(mu, Rational(1));
  return f;
}

Rational GammaElement::coeff(const OddPartition &mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GammaElement::add_term(const OddPartition &mu, const Rational &c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int GammaElement::degree() const {
  int d = -1;
  for (const auto &[mu, c] : terms_) d = std::max(d, mu.size());
  return d;
}

GammaElement GammaElement::homogeneous_part(int degree) const {
  GammaElement h;
  for (const auto &[mu, c] : terms_)
    if (mu.size() == degree) h.terms_.emplace(mu, c);
  return h;
}

GammaElement &GammaElement::operator+=(const GammaElement &other) {
  for (const auto &[mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

GammaElement &GammaElement::operator-=(const GammaElement &other) {
  for (const auto &[mu, c] : other.terms_) add_term(mu, -c);
  return *this;
}

GammaElement &GammaElement::operator*=(const Rational &c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto &entry : terms_) entry.second *= c;
  }
  return *this;
}

GammaElement operator*(const GammaElement &a, const GammaElement &b) {
  GammaElement out;
  for (const auto &[mu, c] : a.terms_)
    for (const auto &[gamma, d] : b.terms_) out.add_term(merge(mu, gamma), c * d);
  return out;
}

GammaElement multiply(const GammaElement &f, const GammaElement &g) { return f * g; }

std::string GammaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[mu, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mu.empty()) {
      os << twc::to_string(mag);
    } else {
      if (mag != 1) os << twc::to_string(mag) << ' ';
      os << 'p' << mu.to_string();
    }
  }
  return os.str();
}

Rational evaluate(const GammaElement &f, const Partition &lambda) {
  std::map<int, Integer> power_sums;
  auto power_sum = [&](int k) -> const Integer & {
    auto it = power_sums.find(k);
    if (it != power_sums.end()) return it->second;
    Integer s = 0;
    for (int part : lambda.parts()) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(k));
      s += t;
    }
    return power_sums.emplace(k, s).first->second;
  };
  Rational total = 0;
  for (const auto &[mu, c] : f.terms()) {
    Integer v = 1;
    for (int k : mu.parts()) v *= power_sum(k);
    total += c * v;
  }
  return total;
}

// ---------------------------------------------------------------- Q-functions

namespace {

Memo<int, GammaElement> &q_memo() {
  static Memo<int, GammaElement> memo;
  return memo;
}
Memo<std::pair<int, int>, GammaElement> &two_row_memo() {
  static Memo<std::pair<int, int>, GammaElement> memo;
  return memo;
}
Memo<StrictPartition, GammaElement> &schur_q_memo() {
  static Memo<StrictPartition, GammaElement> memo;
  return memo;
}
Memo<int, CharacterMatrix> &x_memo() {
  static Memo<int, CharacterMatrix> memo;
  return memo;
}
Memo<OddPartition, GammaElement> &pfrak_memo() {
  static Memo<OddPartition, GammaElement> memo;
  return memo;
}
Memo<StrictPartition, GammaElement> &qstar_memo() {
  static Memo<StrictPartition, GammaElement> memo;
  return memo;
}
Memo<std::pair<int, bool>, GammaElement> &moment_memo() {
  static Memo<std::pair<int, bool>, GammaElement> memo;
  return memo;
}

// Q_{(r,s)} = q_r q_s + 2 Σ_{i=1}^{s} (-1)^i q_{r+i} q_{s-i}, r > s >= 0.
const GammaElement &two_row_q(int r, int s) {
  return two_row_memo().get({r, s}, [&] {
    GammaElement out = q_series(r) * q_series(s);
    for (int i = 1; i <= s; ++i) {
      Rational c = (i % 2 ? -2 : 2);
      out += c * (q_series(r + i) * q_series(s - i));
    }
    return out;
  });
}

// Pfaffian by expansion along the first remaining row.
GammaElement pfaffian(const std::vector<std::vector<GammaElement>> &a, const std::vector<int> &idx) {
  if (idx.empty()) return GammaElement(1);
  GammaElement out;
  std::vector<int> rest;
  for (std::size_t t = 1; t < idx.size(); ++t) {
    rest.clear();
    for (std::size_t u = 1; u < idx.size(); ++u)
      if (u != t) rest.push_back(idx[u]);
    GammaElement term = a[idx[0]][idx[t]] * pfaffian(a, rest);
    if (t % 2 == 1)
      out += term;
    else
      out -= term;
  }
  return out;
}

}  // namespace

GammaElement q_series(int r) {
  if (r < 0) return GammaElement();
  return q_memo().get(r, [r] {
    if (r == 0) return GammaElement(1);
    // r q_r = 2 Σ_{k odd <= r} p_k q_{r-k}
    GammaElement out;
    for (int k = 1; k <= r; k += 2) out += GammaElement::power_sum(OddPartition{k}) * q_series(r - k);
    return out * Rational(2, r);
  });
}

GammaElement schur_q(const StrictPartition &lambda) {
  return schur_q_memo().get(lambda, [&] {
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    const int m = static_cast<int>(parts.size());
    std::vector<std::vector<GammaElement>> a(m, std::vector<GammaElement>(m));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) a[i][j] = two_row_q(parts[i], parts[j]);
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    return pfaffian(a, idx);
  });
}

const Rational &CharacterMatrix::at(const OddPartition &mu, const StrictPartition &lambda) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != mu) continue;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (cols[j] == lambda) return entries[i][j];
  }
  throw std::out_of_range("no X entry for " + mu.to_string() + ", " + lambda.to_string());
}

const CharacterMatrix &x_matrix(int n) {
  if (n < 0) throw std::invalid_argument("negative level");
  return x_memo().get(n, [n] {
    CharacterMatrix m;
    m.n = n;
    m.rows = enumerate_odd(n);
    m.cols = enumerate_strict(n);
    const std::size_t size = m.rows.size();
    if (size != m.cols.size()) throw std::logic_error("OP_n and SP_n differ in size");
    // q_coords[μ][λ] = coefficient of p_μ in Q_λ
    RationalMatrix q_coords(size, RationalVector(size));
    for (std::size_t j = 0; j < size; ++j) {
      const GammaElement q = schur_q(m.cols[j]);
      for (std::size_t i = 0; i < size; ++i) q_coords[i][j] = q.coeff(m.rows[i]);
    }
    // p_μ = Σ_λ inv[λ][μ] Q_λ
    auto inv = inverse(q_coords);
    if (!inv) throw std::logic_error("Q-basis is singular at level " + std::to_string(n));
    m.entries.assign(size, RationalVector(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m.entries[i][j] = pow2(m.cols[j].length()) * (*inv)[j][i];
    for (std::size_t i = 0; i < size; ++i) {
      const Rational scale = pow2(m.rows[i].length()) / Rational(z_stat(m.rows[i]));
      for (std::size_t j = 0; j < size; ++j)
        if (scale * m.entries[i][j] != q_coords[i][j])
          throw std::logic_error("X matrix fails the inverse relation at level " + std::to_string(n));
    }
    return m;
  });
}

Rational character(const StrictPartition &lambda, const OddPartition &mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character needs |λ| = |μ|: " + lambda.to_string() + " vs " + mu.to_string());
  const int shift = (lambda.length() - length_parity(lambda)) / 2;
  return pow2(mu.length() - shift) * x_matrix(lambda.size()).at(mu, lambda);
}

Integer simple_dimension(const StrictPartition &lambda) {
  const int shift = (lambda.length() - length_parity(lambda)) / 2;
  return to_integer(pow2(lambda.size() - shift)) * count_shifted_tableaux(lambda);
}

Rational pfrak_value(const OddPartition &mu, const StrictPartition &lambda) {
  const int n = lambda.size();
  const int k = mu.size();
  if (n < k) return 0;
  const Rational ratio = character(lambda, pad_with_ones(mu, n)) / character(lambda, pad_with_ones(OddPartition{}, n));
  return pow2(k - mu.length()) * Rational(falling_factorial(n, k)) * ratio;
}

GammaElement interpolate(const std::function<Rational(const StrictPartition &)> &values, int degree, int slack,
                         int max_slack) {
  if (degree < 0) return GammaElement();
  const auto unknowns = enumerate_odd_upto(degree);
  for (int b = slack; b <= max_slack; ++b) {
    const auto points = enumerate_strict_upto(degree + b);
    RationalMatrix a;
    RationalVector rhs;
    for (const auto &lambda : points) {
      RationalVector row;
      for (const auto &gamma : unknowns) row.push_back(evaluate(GammaElement::power_sum(gamma), lambda));
      a.push_back(std::move(row));
      rhs.push_back(values(lambda));
    }
    if (rank(a) < static_cast<int>(unknowns.size())) continue;
    auto x = solve_unique(a, rhs);
    if (!x) throw std::runtime_error("values are not those of an element of degree <= " + std::to_string(degree));
    GammaElement out;
    for (std::size_t i = 0; i < unknowns.size(); ++i) out.add_term(unknowns[i], (*x)[i]);
    return out;
  }
  throw std::runtime_error("interpolation system stays rank-deficient up to slack " + std::to_string(max_slack));
}

GammaElement pfrak(const OddPartition &mu) {
  return pfrak_memo().get(mu, [&] {
    return interpolate([&](const StrictPartition &lambda) { return pfrak_value(mu, lambda); }, mu.size());
  });
}

GammaElement factorial_schur_q(const StrictPartition &lambda) {
  return qstar_memo().get(lambda, [&] {
    GammaElement out;
    for (const auto &mu : enumerate_odd(lambda.size()))
      out += (character(lambda, mu) / Rational(z_stat(mu))) * pfrak(mu);
    return out * pow2((lambda.length() - length_parity(lambda)) / 2);
  });
}

GammaElement up_moment_element(int k) {
  if (k < 0) throw std::invalid_argument("up moment index must be nonnegative");
  return moment_memo().get({k, true}, [k] {
    return interpolate([k](const StrictPartition &lambda) { return up_moment(k, lambda); }, std::max(2 * k - 1, 0));
  });
}

GammaElement down_moment_element(int k) {
  if (k < 1) throw std::invalid_argument("down moment index starts at 1");
  return moment_memo().get({k, false}, [k] {
    return interpolate([k](const StrictPartition &lambda) { return down_moment(k, lambda); }, 2 * k - 1);
  });
}

// ---------------------------------------------------------------- bases

Basis parse_basis(const std::string &name) {
  if (name == "p") return Basis::p;
  if (name == "pfrak") return Basis::pfrak;
  if (name == "Q") return Basis::Q;
  if (name == "Qstar") return Basis::Qstar;
  throw std::invalid_argument("unknown basis: " + name);
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::pfrak: return "pfrak";
    case Basis::Q: return "Q";
    case Basis::Qstar: return "Qstar";
  }
  return "?";
}

GammaElement basis_element(const Partition &index, Basis basis) {
  switch (basis) {
    case Basis::p: return GammaElement::power_sum(OddPartition(index));
    case Basis::pfrak: return pfrak(OddPartition(index));
    case Basis::Q: return schur_q(StrictPartition(index));
    case Basis::Qstar: return factorial_schur_q(StrictPartition(index));
  }
  throw std::logic_error("unreachable");
}

namespace {

// Q-coordinates of a homogeneous element of degree d.
Coordinates homogeneous_to_q(const GammaElement &h, int d) {
  Coordinates out;
  const auto &x = x_matrix(d);
  for (const auto &lambda : x.cols) {
    Rational c = 0;
    for (const auto &[mu, coeff] : h.terms()) c += coeff * x.at(mu, lambda);
    c *= pow2(-lambda.length());
    if (sgn(c) != 0) out.emplace(lambda, c);
  }
  return out;
}

}  // namespace

Coordinates to_basis(const GammaElement &f, Basis basis) {
  Coordinates out;
  if (basis == Basis::p) {
    for (const auto &[mu, c] : f.terms()) out.emplace(mu, c);
    return out;
  }
  // Triangular peeling: each basis element is its leading homogeneous part
  // (p_μ resp. Q_λ) plus lower-degree terms.
  GammaElement rem = f;
  while (!rem.is_zero()) {
    const int d = rem.degree();
    const GammaElement top = rem.homogeneous_part(d);
    Coordinates level;
    if (basis == Basis::pfrak) {
      for (const auto &[mu, c] : top.terms()) level.emplace(mu, c);
    } else {
      level = homogeneous_to_q(top, d);
    }
    for (const auto &[index, c] : level) {
      out[index] += c;
      rem -= c * basis_element(index, basis);
    }
    if (rem.degree() >= d) throw std::logic_error("basis peeling did not lower the degree");
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

GammaElement from_basis(const Coordinates &coords, Basis basis) {
  GammaElement out;
  for (const auto &[index, c] : coords) out += c * basis_element(index, basis);
  return out;
}

// ---------------------------------------------------------------- caches

std::vector<int> cached_x_levels() { return x_memo().keys(); }

void install_x_matrix(CharacterMatrix m) {
  const int n = m.n;
  x_memo().insert(n, std::move(m));
}

std::map<OddPartition, GammaElement> cached_pfrak() { return pfrak_memo().snapshot(); }

void install_pfrak(const OddPartition &mu, GammaElement value) { pfrak_memo().insert(mu, std::move(value)); }

}  // namespace twc
