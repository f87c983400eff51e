#include "twc/sergeev.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "twc/gamma.hpp"
#include "twc/linalg.hpp"
#include "twc/memo.hpp"
#include "twc/schur_graph.hpp"

namespace twc {

namespace {

constexpr int kCliffordShift = 48;
constexpr std::uint64_t kPermMask = (std::uint64_t{1} << kCliffordShift) - 1;
constexpr std::uint64_t kCliffordMask = 0xFFF;
constexpr int kZShift = 60;

void check_level_range(int n) {
  if (n < 0 || n > kMaxLevel)
    throw std::invalid_argument("level " + std::to_string(n) + " outside 0.." + std::to_string(kMaxLevel));
}

inline int nibble(std::uint64_t bits, int i) { return static_cast<int>((bits >> (4 * i)) & 0xF); }

std::uint64_t identity_bits(int n) {
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) bits |= std::uint64_t(i) << (4 * i);
  return bits;
}

// Product of packed monomials c_A σ · c_B τ at level n. Returns (negative?, key).
inline std::pair<bool, std::uint64_t> multiply_keys(std::uint64_t a, std::uint64_t b, int n) {
  const std::uint64_t sigma = a & kPermMask;
  const std::uint64_t tau = b & kPermMask;
  const auto A = static_cast<std::uint32_t>((a >> kCliffordShift) & kCliffordMask);
  const auto B = static_cast<std::uint32_t>((b >> kCliffordShift) & kCliffordMask);
  int swaps = 0;
  std::uint32_t placed = 0;
  // σ c_{b_1} ... c_{b_t} = c_{σ(b_1)} ... c_{σ(b_t)} σ, then sort the word.
  for (std::uint32_t bits = B; bits; bits &= bits - 1) {
    const int v = nibble(sigma, std::countr_zero(bits));
    swaps += std::popcount(placed >> (v + 1));
    placed |= 1u << v;
  }
  // c_A c_{B'}: each c_b passes the larger a's, and c_i² = -1.
  for (std::uint32_t bits = placed; bits; bits &= bits - 1)
    swaps += std::popcount(A >> (std::countr_zero(bits) + 1));
  swaps += std::popcount(A & placed);
  std::uint64_t composed = 0;
  for (int i = 0; i < n; ++i) composed |= std::uint64_t(nibble(sigma, nibble(tau, i))) << (4 * i);
  return {(swaps & 1) != 0, composed | (std::uint64_t(A ^ placed) << kCliffordShift)};
}

std::string join(const std::vector<int> &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(int n) : n_(n) {
  check_level_range(n);
  for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(const std::vector<int> &images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("not a permutation: " + join(images));
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("transposition index out of range");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("s_i needs 1 <= i < n");
  return transposition(i, i + 1, n);
}

Permutation Permutation::longest(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(n - 1 - i);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p(n_);
  for (int i = 0; i < n_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(n_, false);
  std::vector<int> lengths;
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

Permutation Permutation::releveled(int m) const {
  check_level_range(m);
  Permutation p(m);
  for (int i = 0; i < std::min(m, n_); ++i) p.img_[i] = img_[i];
  for (int i = m; i < n_; ++i)
    if (img_[i] != i) throw std::invalid_argument("permutation does not lie in S_" + std::to_string(m));
  return p;
}

std::uint64_t Permutation::packed() const {
  std::uint64_t bits = 0;
  for (int i = 0; i < n_; ++i) bits |= std::uint64_t(img_[i]) << (4 * i);
  return bits;
}

Permutation Permutation::unpack(std::uint64_t bits, int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(nibble(bits, i));
  return p;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("permutation level mismatch");
  Permutation p(a.n_);
  for (int i = 0; i < a.n_; ++i) p.img_[i] = a.img_[b.img_[i]];
  return p;
}

// ------------------------------------------------------------------- Clifford

std::vector<int> clifford_indices(CliffordWord w) {
  std::vector<int> out;
  for (; w; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
  return out;
}

CliffordWord clifford_word(const std::vector<int> &indices) {
  CliffordWord w = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxLevel) throw std::invalid_argument("Clifford index out of range");
    if (w & (1u << (i - 1))) throw std::invalid_argument("repeated Clifford index");
    w |= 1u << (i - 1);
  }
  return w;
}

int SergeevMonomial::parity() const { return std::popcount(clifford) & 1; }

std::uint64_t SergeevMonomial::packed() const {
  return perm.packed() | (std::uint64_t(clifford) << kCliffordShift);
}

SergeevMonomial SergeevMonomial::unpack(std::uint64_t bits, int n) {
  return {static_cast<CliffordWord>((bits >> kCliffordShift) & kCliffordMask),
          Permutation::unpack(bits & kPermMask, n)};
}

std::pair<int, SergeevMonomial> multiply(const SergeevMonomial &a, const SergeevMonomial &b) {
  const int n = a.perm.level();
  if (b.perm.level() != n) throw std::invalid_argument("monomial level mismatch");
  auto [negative, key] = multiply_keys(a.packed(), b.packed(), n);
  return {negative ? -1 : 1, SergeevMonomial::unpack(key, n)};
}

// ------------------------------------------------------------ SergeevElement

SergeevElement::SergeevElement(int n) : n_(n) { check_level_range(n); }

SergeevElement SergeevElement::scalar(int n, const Rational &c) {
  SergeevElement x(n);
  if (sgn(c) != 0) x.terms_.emplace(identity_bits(n), c);
  return x;
}

SergeevElement SergeevElement::monomial(int n, const SergeevMonomial &m, const Rational &c) {
  if (m.perm.level() != n) throw std::invalid_argument("monomial level mismatch");
  if (m.clifford >> n) throw std::invalid_argument("Clifford index exceeds level");
  SergeevElement x(n);
  x.add_term(m, c);
  return x;
}

SergeevElement SergeevElement::clifford_generator(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("c_i needs 1 <= i <= n");
  return monomial(n, {CliffordWord(1u << (i - 1)), Permutation(n)});
}

SergeevElement SergeevElement::permutation(const Permutation &p) { return monomial(p.level(), {0, p}); }

Rational SergeevElement::coeff(const SergeevMonomial &m) const {
  auto it = terms_.find(m.packed());
  return it == terms_.end() ? Rational(0) : it->second;
}

void SergeevElement::add_term(const SergeevMonomial &m, const Rational &c) {
  if (sgn(c) == 0) return;
  const auto key = m.packed();
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<std::pair<SergeevMonomial, Rational>> SergeevElement::sorted_terms() const {
  std::vector<std::pair<SergeevMonomial, Rational>> out;
  out.reserve(terms_.size());
  for (const auto &[key, c] : terms_) out.emplace_back(SergeevMonomial::unpack(key, n_), c);
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    const auto cx = std::popcount(x.first.clifford), cy = std::popcount(y.first.clifford);
    if (cx != cy) return cx < cy;
    const auto ix = clifford_indices(x.first.clifford), iy = clifford_indices(y.first.clifford);
    if (ix != iy) return ix < iy;
    return x.first.perm.images() < y.first.perm.images();
  });
  return out;
}

bool SergeevElement::is_even() const {
  for (const auto &[key, c] : terms_)
    if (std::popcount((key >> kCliffordShift) & kCliffordMask) & 1) return false;
  return true;
}

SergeevElement SergeevElement::releveled(int m) const {
  check_level_range(m);
  SergeevElement out(m);
  if (m >= n_) {
    std::uint64_t extra = 0;
    for (int i = n_; i < m; ++i) extra |= std::uint64_t(i) << (4 * i);
    for (const auto &[key, c] : terms_) out.terms_.emplace(key | extra, c);
    return out;
  }
  std::uint64_t tail = 0, tail_mask = 0;
  for (int i = m; i < n_; ++i) {
    tail |= std::uint64_t(i) << (4 * i);
    tail_mask |= std::uint64_t(0xF) << (4 * i);
  }
  for (const auto &[key, c] : terms_) {
    const auto cl = (key >> kCliffordShift) & kCliffordMask;
    if ((key & tail_mask) != tail || (cl >> m))
      throw std::invalid_argument("element does not lie in Ser_" + std::to_string(m));
    out.terms_.emplace(key & ~tail_mask, c);
  }
  return out;
}

void SergeevElement::check_level(const SergeevElement &other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("Sergeev level mismatch: " + std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
}

SergeevElement &SergeevElement::operator+=(const SergeevElement &other) {
  check_level(other);
  for (const auto &[key, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

SergeevElement &SergeevElement::operator-=(const SergeevElement &other) {
  check_level(other);
  for (const auto &[key, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

SergeevElement &SergeevElement::operator*=(const Rational &c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &entry : terms_) entry.second *= c;
  return *this;
}

SergeevElement operator*(const SergeevElement &a, const SergeevElement &b) {
  a.check_level(b);
  SergeevElement out(a.n_);
  std::vector<std::pair<std::uint64_t, const Rational *>> right;
  right.reserve(b.terms_.size());
  for (const auto &[key, c] : b.terms_) right.emplace_back(key, &c);
  out.terms_.reserve(a.terms_.size() + right.size());
  Rational prod;
  for (const auto &[ka, ca] : a.terms_) {
    for (const auto &[kb, cb] : right) {
      auto [negative, key] = multiply_keys(ka, kb, a.n_);
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb->get_mpq_t());
      auto [it, inserted] = out.terms_.try_emplace(key);
      if (negative)
        it->second -= prod;
      else
        it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto &entry) { return sgn(entry.second) == 0; });
  return out;
}

bool operator==(const SergeevElement &a, const SergeevElement &b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string SergeevElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : sorted_terms()) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    const bool bare = m.clifford == 0 && m.perm.is_identity();
    if (mag != 1 || bare) os << twc::to_string(mag);
    if (bare) continue;
    if (mag != 1) os << " ";
    if (m.clifford) os << "c" << join(clifford_indices(m.clifford));
    if (!m.perm.is_identity()) os << "s" << join(m.perm.images());
  }
  return os.str();
}

SergeevElement multiply(const SergeevElement &x, const SergeevElement &y) { return x * y; }

SergeevElement power(const SergeevElement &x, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  SergeevElement out = SergeevElement::identity(x.level());
  for (int i = 0; i < exponent; ++i) out = out * x;
  return out;
}

SergeevElement inverse_monomial(const SergeevMonomial &m, int n) {
  // (c_A σ)^{-1} = σ^{-1} c_A^{-1}, c_A^{-1} = (-1)^{t + t(t-1)/2} c_A.
  const int t = std::popcount(m.clifford);
  auto [sign, result] = multiply(SergeevMonomial{0, m.perm.inverse()}, SergeevMonomial{m.clifford, Permutation(n)});
  if ((t + t * (t - 1) / 2) & 1) sign = -sign;
  return SergeevElement::monomial(n, result, Rational(sign));
}

SergeevElement project_to_lower(const SergeevElement &x) {
  const int n = x.level();
  if (n == 0) throw std::invalid_argument("cannot project below level 0");
  SergeevElement kept(n);
  for (const auto &[m, c] : x.sorted_terms())
    if (m.perm.fixes(n) && !(m.clifford & (1u << (n - 1)))) kept.add_term(m, c);
  return kept.releveled(n - 1);
}

bool is_central(const SergeevElement &x) {
  const int n = x.level();
  std::vector<SergeevElement> gens;
  for (int i = 1; i < n; ++i) gens.push_back(SergeevElement::permutation(Permutation::simple(i, n)));
  for (int j = 1; j <= n; ++j) gens.push_back(SergeevElement::clifford_generator(j, n));
  for (const auto &g : gens)
    if (!(g * x == x * g)) return false;
  return true;
}

// --------------------------------------------------------------- HyperElement

HyperElement HyperElement::generator_a(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("a_i needs 1 <= i <= n");
  return HyperElement(false, 1u << (i - 1), Permutation(n));
}

HyperElement HyperElement::generator_s(int i, int n) { return HyperElement(false, 0, Permutation::simple(i, n)); }

HyperElement operator*(const HyperElement &a, const HyperElement &b) {
  const int n = a.level();
  if (b.level() != n) throw std::invalid_argument("B̂_n level mismatch");
  const std::uint64_t ka = a.perm_.packed() | (std::uint64_t(a.a_) << kCliffordShift);
  const std::uint64_t kb = b.perm_.packed() | (std::uint64_t(b.a_) << kCliffordShift);
  auto [negative, key] = multiply_keys(ka, kb, n);
  const auto m = SergeevMonomial::unpack(key, n);
  return HyperElement(a.z_ ^ b.z_ ^ negative, m.clifford, m.perm);
}

HyperElement HyperElement::inverse() const {
  const int n = level();
  const int t = std::popcount(a_);
  auto [sign, m] = multiply(SergeevMonomial{0, perm_.inverse()}, SergeevMonomial{a_, Permutation(n)});
  const bool flip = ((t + t * (t - 1) / 2) & 1) != 0;
  return HyperElement(z_ ^ (sign < 0) ^ flip, m.clifford, m.perm);
}

SergeevElement HyperElement::project() const {
  return SergeevElement::monomial(level(), {a_, perm_}, Rational(z_ ? -1 : 1));
}

std::uint64_t HyperElement::packed() const {
  return perm_.packed() | (std::uint64_t(a_) << kCliffordShift) | (std::uint64_t(z_) << kZShift);
}

std::vector<HyperElement> all_group_elements(int n) {
  check_level_range(n);
  std::vector<HyperElement> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    const auto p = Permutation::from_images(images);
    for (CliffordWord a = 0; a < (1u << n); ++a)
      for (bool z : {false, true}) out.emplace_back(z, a, p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<HyperElement> conjugacy_orbit(const HyperElement &h) {
  const int n = h.level();
  std::vector<std::pair<HyperElement, HyperElement>> gens;
  for (int i = 1; i < n; ++i) {
    auto s = HyperElement::generator_s(i, n);
    gens.emplace_back(s, s.inverse());
  }
  for (int j = 1; j <= n; ++j) {
    auto a = HyperElement::generator_a(j, n);
    gens.emplace_back(a, a.inverse());
  }
  std::vector<HyperElement> orbit{h};
  std::unordered_set<std::uint64_t> seen{h.packed()};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto &[g, ginv] : gens) {
      HyperElement next = g * orbit[head] * ginv;
      if (seen.insert(next.packed()).second) orbit.push_back(next);
    }
  }
  return orbit;
}

SergeevElement projected_conjugation_sum(const HyperElement &h) {
  SergeevElement out(h.level());
  for (const auto &g : all_group_elements(h.level())) out += (g * h * g.inverse()).project();
  return out;
}

bool in_odd_split_class(const HyperElement &h) {
  const int n = h.level();
  const Partition type = h.perm().cycle_type();
  if (!type.is_odd()) return false;
  const auto target = distinguished_perm(OddPartition(type), n);
  const HyperElement plain(false, 0, target), twisted(true, 0, target);
  for (const auto &x : conjugacy_orbit(h))
    if (x == plain || x == twisted) return true;
  return false;
}

std::vector<HyperElement> coset_reps(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("coset_reps needs 0 <= k <= n");
  check_level_range(n);
  std::vector<HyperElement> reps{HyperElement(n)};
  // (f_n)(f_{n-1})...(f_{k+1}) with f_j = s_i ... s_{j-1} a_j^ε.
  for (int j = n; j > k; --j) {
    std::vector<HyperElement> factors;
    for (int i = 1; i <= j; ++i) {
      HyperElement f(n);
      for (int t = i; t < j; ++t) f = f * HyperElement::generator_s(t, n);
      factors.push_back(f);
      factors.push_back(f * HyperElement::generator_a(j, n));
    }
    std::vector<HyperElement> next;
    next.reserve(reps.size() * factors.size());
    for (const auto &r : reps)
      for (const auto &f : factors) next.push_back(r * f);
    reps = std::move(next);
  }
  return reps;
}

Permutation distinguished_perm(const OddPartition &mu, int n) {
  const int k = mu.size();
  if (k > n) throw std::invalid_argument("distinguished_perm needs |μ| <= n");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  int start = 1;
  for (int part : mu.parts()) {
    // Cycle (start+part-1, ..., start+1, start).
    for (int i = start + 1; i < start + part; ++i) images[i - 1] = i - 1;
    images[start - 1] = start + part - 1;
    start += part;
  }
  const auto pi = Permutation::from_images(images);
  const auto tau0 = Permutation::longest(n);
  return tau0 * pi * tau0.inverse();
}

// ----------------------------------------------------------- JM and class sums

SergeevElement jm_element(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("J_k needs 1 <= k <= n");
  SergeevElement out(n);
  for (int j = 1; j < k; ++j) {
    const auto t = Permutation::transposition(j, k, n);
    out.add_term({0, t}, Rational(1));
    // (1 - c_j c_k): with c_i² = -1 this is the sign that commutes with Ser_{k-1}.
    out.add_term({CliffordWord((1u << (j - 1)) | (1u << (k - 1))), t}, Rational(-1));
  }
  return out;
}

namespace {
Memo<std::tuple<int, int, int>, SergeevElement> jm_power_memo;
Memo<std::pair<std::vector<int>, int>, SergeevElement> scaled_memo;
Memo<std::vector<int>, SergeevElement> full_memo;
Memo<std::vector<int>, SergeevElement> idempotent_memo;
Memo<std::pair<int, int>, SergeevElement> up_jm_memo;
Memo<std::pair<int, int>, SergeevElement> down_jm_memo;
}  // namespace

const SergeevElement &jm_power(int k, int n, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  return jm_power_memo.get({k, n, exponent}, [&] {
    if (exponent == 0) {
      if (k < 1 || k > n) throw std::invalid_argument("J_k needs 1 <= k <= n");
      return SergeevElement::identity(n);
    }
    return jm_power(k, n, exponent - 1) * jm_element(k, n);
  });
}

const SergeevElement &class_sum_scaled(const OddPartition &mu, int n) {
  return scaled_memo.get({mu.parts(), n}, [&] {
    const int k = mu.size();
    const HyperElement pi(false, 0, distinguished_perm(mu, n));
    SergeevElement out(n);
    for (const auto &g : coset_reps(n, n - k)) out += (g * pi * g.inverse()).project();
    return out;
  });
}

const SergeevElement &class_sum_full(const OddPartition &mu) {
  return full_memo.get(mu.parts(), [&] {
    const int n = mu.size();
    SergeevElement out(n);
    for (const auto &h : conjugacy_orbit(HyperElement(false, 0, distinguished_perm(mu, n)))) out += h.project();
    return out;
  });
}

Rational class_sum_scalar(const OddPartition &mu, int n) {
  const int k = mu.size();
  if (k > n) throw std::invalid_argument("class_sum_scalar needs |μ| <= n");
  return pow2(mu.length()) * Rational(z_stat(pad_with_ones(mu, n))) / Rational(factorial(n - k));
}

const SergeevElement &central_idempotent(const StrictPartition &lambda) {
  return idempotent_memo.get(lambda.parts(), [&] {
    const int n = lambda.size();
    const int l = lambda.length(), d = length_parity(lambda);
    SergeevElement out(n);
    for (const auto &mu : enumerate_odd(n)) out += class_sum_full(mu) * character(lambda, mu);
    out *= pow2((-l - d) / 2) * Rational(count_shifted_tableaux(lambda)) / Rational(factorial(n));
    return out;
  });
}

Rational normalized_character(const StrictPartition &lambda, const SergeevElement &x) {
  const int n = lambda.size();
  if (x.level() != n) throw std::invalid_argument("normalized_character: level of x differs from |λ|");
  const auto &e = central_idempotent(lambda);
  const SergeevMonomial one{0, Permutation(n)};
  const SergeevElement y = x * e;
  const Rational ratio = y.coeff(one) / e.coeff(one);
  if (!(y == e * ratio)) throw std::domain_error("x e_λ is not a multiple of e_λ; x is not central");
  return ratio;
}

const SergeevElement &up_jm_projection(int k, int n) {
  if (k < 0) throw std::invalid_argument("negative moment index");
  return up_jm_memo.get({k, n}, [&] { return project_to_lower(jm_power(n + 1, n + 1, 2 * k)); });
}

const SergeevElement &down_jm_class_sum(int r, int n) {
  if (n < 1) throw std::invalid_argument("down JM class sum needs n >= 1");
  if (r < 0) throw std::invalid_argument("negative exponent");
  return down_jm_memo.get({r, n}, [&] {
    const auto &j = jm_power(n, n, r);
    SergeevElement out(n);
    for (const auto &g : coset_reps(n, n - 1)) out += g.project() * j * g.inverse().project();
    return out;
  });
}

Rational up_moment_via_jm(int k, const StrictPartition &lambda) {
  return normalized_character(lambda, up_jm_projection(k, lambda.size()));
}

Rational down_moment_via_jm(int k, const StrictPartition &lambda) {
  if (k < 1) throw std::invalid_argument("down moments are indexed from 1");
  return normalized_character(lambda, down_jm_class_sum(2 * (k - 1), lambda.size()));
}

std::map<StrictPartition, Integer> restriction_multiplicities(const StrictPartition &lambda) {
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("restriction needs |λ| >= 1");
  const auto rows = enumerate_odd(n - 1);
  const auto cols = enumerate_strict(n - 1);
  RationalMatrix a(rows.size(), RationalVector(cols.size()));
  RationalVector b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = character(cols[j], rows[i]);
    b[i] = character(lambda, pad_with_ones(rows[i], n));
  }
  const auto m = solve_unique(a, b);
  if (!m) throw std::logic_error("restriction system is singular for " + lambda.to_string());
  std::map<StrictPartition, Integer> out;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (sgn((*m)[j]) != 0) out.emplace(cols[j], to_integer((*m)[j]));
  return out;
}

Integer branching_multiplicity(const StrictPartition &lambda, const StrictPartition &nu) {
  if (edge_multiplicity(nu, lambda) == 0) return 0;
  const int e = 2 + nu.length() - length_parity(nu) - lambda.length() + length_parity(lambda);
  return to_integer(pow2(e / 2));
}

}  // namespace twc
