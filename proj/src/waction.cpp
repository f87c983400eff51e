#include "twc/waction.hpp"

#include <sstream>

namespace twc {

// ----------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational &c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() { return Polynomial(std::vector<Rational>{0, 1}); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational &x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational &a) const {
  // Horner in the polynomial ring: ((c_d)(D+a) + c_{d-1})(D+a) + ...
  Polynomial out;
  const Polynomial lin(std::vector<Rational>{a, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + Polynomial(*it);
  return out;
}

Polynomial Polynomial::reflected() const {
  Polynomial out = *this;
  for (std::size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
  return out;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational &c = c_[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || i == 0) os << twc::to_string(mag);
    if (i > 0) os << (mag != 1 ? " " : "") << "D";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ----------------------------------------------------------------- LieElement

bool satisfies_twisted_parity(int r, const Polynomial &f) {
  // f(-D-r) = (f(-·))(D + r).
  const Polynomial g = f.reflected().shifted(Rational(r));
  return (r % 2 != 0) ? g == f : g == -f;
}

LieElement LieElement::term(int r, const Polynomial &f) {
  LieElement x;
  x.add(r, f);
  return x;
}

LieElement LieElement::twisted(int r, const Polynomial &f) {
  if (!satisfies_twisted_parity(r, f))
    throw std::invalid_argument("t^" + std::to_string(r) + " (" + f.to_string() + ") is not in the twisted subalgebra");
  return term(r, f);
}

LieElement LieElement::central(const Rational &c) {
  LieElement x;
  x.central_ = c;
  return x;
}

void LieElement::add(int r, const Polynomial &f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(r, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LieElement::in_twisted_subalgebra() const {
  for (const auto &[r, f] : terms_)
    if (!satisfies_twisted_parity(r, f)) return false;
  return true;
}

LieElement &LieElement::operator+=(const LieElement &o) {
  for (const auto &[r, f] : o.terms_) add(r, f);
  central_ += o.central_;
  return *this;
}

LieElement &LieElement::operator-=(const LieElement &o) {
  for (const auto &[r, f] : o.terms_) add(r, -f);
  central_ -= o.central_;
  return *this;
}

LieElement &LieElement::operator*=(const Rational &c) {
  if (sgn(c) == 0) {
    terms_.clear();
    central_ = 0;
    return *this;
  }
  for (auto &[r, f] : terms_) f = f * Polynomial(c);
  central_ *= c;
  return *this;
}

std::string LieElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto &[r, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "t^" << r << "(" << f.to_string() << ")";
  }
  if (sgn(central_) != 0) {
    if (!first) os << " + ";
    first = false;
    os << twc::to_string(central_) << " C";
  }
  return first ? "0" : os.str();
}

Rational cocycle(int r, const Polynomial &f, int s, const Polynomial &g) {
  if (r + s != 0) return 0;
  if (r < 0) return -cocycle(s, g, r, f);
  Rational acc = 0;
  for (int j = -r; j <= -1; ++j) acc += f(j) * g(j + r);
  return acc;
}

LieElement bracket(const LieElement &x, const LieElement &y) {
  LieElement out;
  for (const auto &[r, f] : x.terms())
    for (const auto &[s, g] : y.terms()) {
      out += LieElement::term(r + s, f.shifted(s) * g - f * g.shifted(r));
      out += LieElement::central(cocycle(r, f, s, g));
    }
  return out;
}

// ------------------------------------------------------------------ operators

PfrakVector to_pfrak_vector(const GammaElement &f) {
  PfrakVector out;
  for (const auto &[mu, c] : to_basis(f, Basis::pfrak)) out.emplace(OddPartition(mu), c);
  return out;
}

GammaElement from_pfrak_vector(const PfrakVector &v) {
  GammaElement out;
  for (const auto &[mu, c] : v) out += c * pfrak(mu);
  return out;
}

namespace {

void accumulate(PfrakVector &acc, const PfrakVector &v, const Rational &scale) {
  if (sgn(scale) == 0) return;
  for (const auto &[mu, c] : v) {
    auto [it, inserted] = acc.emplace(mu, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (sgn(it->second) == 0) acc.erase(it);
    }
  }
}

}  // namespace

WOperator::WOperator(std::string name, Column column)
    : name_(std::move(name)),
      column_(std::move(column)),
      cache_(std::make_shared<Memo<std::vector<int>, PfrakVector>>()) {}

const PfrakVector &WOperator::column(const OddPartition &mu) const {
  return cache_->get(mu.parts(), [&] { return column_(mu); });
}

PfrakVector WOperator::apply_unchecked(const PfrakVector &v) const {
  PfrakVector out;
  for (const auto &[mu, c] : v) accumulate(out, column(mu), c);
  return out;
}

PfrakVector WOperator::apply(const PfrakVector &v, int cutoff) const {
  for (const auto &[mu, c] : v)
    if (mu.size() > cutoff)
      throw CutoffExceeded(name_ + ": input 𝔭" + mu.to_string() + " exceeds degree cutoff " + std::to_string(cutoff));
  return apply_unchecked(v);
}

GammaElement WOperator::apply(const GammaElement &f, int cutoff) const {
  return from_pfrak_vector(apply(to_pfrak_vector(f), cutoff));
}

std::map<OddPartition, PfrakVector> WOperator::matrix(int cutoff) const {
  std::map<OddPartition, PfrakVector> out;
  for (const auto &mu : enumerate_odd_upto(cutoff)) out.emplace(mu, column(mu));
  return out;
}

WOperator operator*(const WOperator &a, const WOperator &b) {
  return WOperator("(" + a.name_ + " " + b.name_ + ")",
                   [a, b](const OddPartition &mu) { return a.apply_unchecked(b.column(mu)); });
}

WOperator operator+(const WOperator &a, const WOperator &b) {
  return WOperator("(" + a.name_ + " + " + b.name_ + ")", [a, b](const OddPartition &mu) {
    PfrakVector out = a.column(mu);
    accumulate(out, b.column(mu), 1);
    return out;
  });
}

WOperator operator-(const WOperator &a, const WOperator &b) {
  return WOperator("(" + a.name_ + " - " + b.name_ + ")", [a, b](const OddPartition &mu) {
    PfrakVector out = a.column(mu);
    accumulate(out, b.column(mu), -1);
    return out;
  });
}

WOperator operator*(const Rational &c, const WOperator &a) {
  return WOperator(twc::to_string(c) + " " + a.name_, [c, a](const OddPartition &mu) {
    PfrakVector out;
    accumulate(out, a.column(mu), c);
    return out;
  });
}

WOperator commutator(const WOperator &a, const WOperator &b) { return a * b - b * a; }

WOperator identity_operator() {
  return WOperator("id", [](const OddPartition &mu) { return PfrakVector{{mu, Rational(1)}}; });
}

WOperator multiplication_operator(const GammaElement &g, std::string name) {
  return WOperator(std::move(name), [g](const OddPartition &mu) { return to_pfrak_vector(g * pfrak(mu)); });
}

const WOperator &a_minus() {
  static const WOperator op("A-", [](const OddPartition &mu) {
    return PfrakVector{{merge(mu, OddPartition{1}), Rational(2)}};
  });
  return op;
}

const WOperator &a_plus() {
  static const WOperator op("A+", [](const OddPartition &mu) {
    PfrakVector out{{mu, Rational(1)}};
    const int k = mu.multiplicity(1);
    if (k > 0) {
      std::vector<int> parts = mu.parts();
      parts.pop_back();  // parts are descending, so the last one is a 1
      out.emplace(OddPartition(parts), Rational(k));
    }
    return out;
  });
  return op;
}

const WOperator &omega03() {
  static const WOperator op =
      multiplication_operator(-pfrak(OddPartition{3}) - Rational(2) * pfrak(OddPartition{1, 1}), "omega03");
  return op;
}

WOperator b_operator(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("B_m needs an odd m >= 3, got " + std::to_string(m));
  return WOperator("B" + std::to_string(m), [m](const OddPartition &mu) {
    return PfrakVector{{merge(mu, OddPartition{m}), Rational(2)}};
  });
}

GammaElement apply_A_minus(const GammaElement &f, int cutoff) { return a_minus().apply(f, cutoff); }
GammaElement apply_A_plus(const GammaElement &f, int cutoff) { return a_plus().apply(f, cutoff); }
GammaElement apply_omega03(const GammaElement &f, int cutoff) { return omega03().apply(f, cutoff); }
GammaElement apply_B(int m, const GammaElement &f, int cutoff) { return b_operator(m).apply(f, cutoff); }

const WOperator &omega01() {
  static const WOperator op = Rational(-1, 40) * commutator(commutator(omega03(), a_minus()), a_plus()) +
                              Rational(1, 10) * (a_minus() * a_plus());
  return op;
}

const WOperator &omega_minus1_diff() {
  static const WOperator op =
      Rational(1, 6) * commutator(omega03(), a_minus()) + Rational(1, 3) * (a_minus() * omega01());
  return op;
}

const WOperator &omega_minus2_diff() {
  static const WOperator op = Rational(1, 4) * commutator(omega_minus1_diff(), a_minus());
  return op;
}

const WOperator &omega_plus1_sum() {
  static const WOperator op =
      Rational(-1, 6) * commutator(omega03(), a_plus()) + Rational(1, 3) * (omega01() * a_plus());
  return op;
}

const WOperator &omega_plus2_sum() {
  static const WOperator op = Rational(-1, 4) * commutator(omega_plus1_sum(), a_plus());
  return op;
}

WOperator operator_by_name(const std::string &name) {
  if (name == "Aminus") return a_minus();
  if (name == "Aplus") return a_plus();
  if (name == "omega03") return omega03();
  if (name == "omega01") return omega01();
  if (name == "omega_m1") return omega_minus1_diff();
  if (name == "omega_m2") return omega_minus2_diff();
  if (name == "omega_p1") return omega_plus1_sum();
  if (name == "omega_p2") return omega_plus2_sum();
  if (name.size() > 1 && name[0] == 'B') {
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(name.substr(1), &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == name.size() - 1) return b_operator(m);
  }
  throw std::invalid_argument("unknown generator: " + name);
}

}  // namespace twc
