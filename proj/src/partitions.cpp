#include "twc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twc {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::contains(const Partition &other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // descending lexicographic within a size
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                a.parts_.begin(), a.parts_.end());
}

StrictPartition::StrictPartition(std::initializer_list<int> parts)
    : StrictPartition(Partition(parts)) {}
StrictPartition::StrictPartition(std::vector<int> parts)
    : StrictPartition(Partition(std::move(parts))) {}
StrictPartition::StrictPartition(const Partition &p) : Partition(p) {
  if (!p.is_strict()) throw std::invalid_argument("not a strict partition: " + p.to_string());
}

OddPartition::OddPartition(std::initializer_list<int> parts) : OddPartition(Partition(parts)) {}
OddPartition::OddPartition(std::vector<int> parts) : OddPartition(Partition(std::move(parts))) {}
OddPartition::OddPartition(const Partition &p) : Partition(p) {
  if (!p.is_odd()) throw std::invalid_argument("not an odd partition: " + p.to_string());
}

std::vector<ShiftedCell> shifted_cells(const StrictPartition &lambda) {
  std::vector<ShiftedCell> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.parts()[i]; ++j) cells.push_back({i + 1, i + 1 + j});
  return cells;
}

Partition merge(const Partition &a, const Partition &b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

OddPartition merge(const OddPartition &a, const OddPartition &b) {
  return OddPartition(merge(static_cast<const Partition &>(a), static_cast<const Partition &>(b)));
}

OddPartition pad_with_ones(const OddPartition &mu, int n) {
  if (n < mu.size()) throw std::invalid_argument("cannot pad " + mu.to_string() + " down to size " + std::to_string(n));
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(n - mu.size()), 1);
  return OddPartition(std::move(parts));
}

namespace {

// Partitions of n with parts <= max_part drawn from `allowed`, descending lex.
void generate(int n, int max_part, bool distinct, bool odd_only, std::vector<int> &prefix,
              const std::function<void(const std::vector<int> &)> &emit) {
  if (n == 0) {
    emit(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    if (odd_only && p % 2 == 0) continue;
    prefix.push_back(p);
    generate(n - p, distinct ? p - 1 : p, distinct, odd_only, prefix, emit);
    prefix.pop_back();
  }
}

template <class T>
std::vector<T> enumerate_impl(int n, bool distinct, bool odd_only) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<T> out;
  std::vector<int> prefix;
  generate(n, n, distinct, odd_only, prefix, [&](const std::vector<int> &p) { out.emplace_back(p); });
  return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) { return enumerate_impl<Partition>(n, false, false); }
std::vector<StrictPartition> enumerate_strict(int n) { return enumerate_impl<StrictPartition>(n, true, false); }
std::vector<OddPartition> enumerate_odd(int n) { return enumerate_impl<OddPartition>(n, false, true); }

std::vector<StrictPartition> enumerate_strict_upto(int max_size) {
  std::vector<StrictPartition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = enumerate_strict(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<OddPartition> enumerate_odd_upto(int max_size) {
  std::vector<OddPartition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = enumerate_odd(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int length_parity(const StrictPartition &lambda) { return lambda.length() % 2; }

Integer z_stat(const Partition &rho) {
  Integer z = 1;
  const auto &parts = rho.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int m = static_cast<int>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
    z *= power * factorial(m);
    i = j;
  }
  return z;
}

Integer count_shifted_tableaux(const StrictPartition &lambda) {
  const auto &l = lambda.parts();
  Rational value = Rational(factorial(lambda.size()));
  for (int part : l) value /= Rational(factorial(part));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) value *= Rational(l[i] - l[j], l[i] + l[j]);
  value.canonicalize();
  return to_integer(value);
}

Integer path_count(const StrictPartition &lambda) {
  return to_integer(pow2(lambda.size() - lambda.length())) * count_shifted_tableaux(lambda);
}

KerovCoordinates kerov_coordinates(const StrictPartition &lambda) {
  KerovCoordinates kc;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) {
    const int li = lambda.part(i);
    // end of row i+1 sits at column (i+1)+li-1, content li-1
    if (i == 0 || lambda.part(i - 1) > li + 1) kc.addable.insert(li);
    if (i == len - 1 || li - 1 > lambda.part(i + 1)) kc.removable.insert(li - 1);
  }
  if (len == 0 || lambda.part(len - 1) > 1) kc.addable.insert(0);
  return kc;
}

StrictPartition add_cell(const StrictPartition &lambda, int content) {
  if (!kerov_coordinates(lambda).addable.count(content))
    throw std::invalid_argument("content " + std::to_string(content) + " is not addable to " + lambda.to_string());
  std::vector<int> parts = lambda.parts();
  if (content == 0) {
    parts.push_back(1);
  } else {
    auto it = std::find(parts.begin(), parts.end(), content);
    ++*it;
  }
  return StrictPartition(std::move(parts));
}

StrictPartition remove_cell(const StrictPartition &lambda, int content) {
  if (!kerov_coordinates(lambda).removable.count(content))
    throw std::invalid_argument("content " + std::to_string(content) + " is not removable from " + lambda.to_string());
  std::vector<int> parts = lambda.parts();
  auto it = std::find(parts.begin(), parts.end(), content + 1);
  if (--*it == 0) parts.erase(it);
  return StrictPartition(std::move(parts));
}

Partition parse_partition(const std::string &text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ' && c != '(' && c != ')') s += c;
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception &) {
      throw std::invalid_argument("malformed partition: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("malformed partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace twc
