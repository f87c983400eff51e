#include "twc/linalg.hpp"

#include <stdexcept>

namespace twc {

namespace {

// Gauss-Jordan on the augmented matrix [a | b]; returns pivot columns of a.
std::vector<std::size_t> reduce(RationalMatrix &a, RationalMatrix &b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto &v : a[r]) v *= inv;
    for (auto &v : b[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
      for (std::size_t j = 0; j < b[i].size(); ++j)
        if (sgn(b[r][j]) != 0) b[i][j] -= f * b[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix a) {
  RationalMatrix none(a.size());
  return static_cast<int>(reduce(a, none).size());
}

std::optional<RationalMatrix> solve_unique(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.size() != b.size()) throw std::invalid_argument("row count mismatch in solve_unique");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const std::size_t rhs = b.empty() ? 0 : b[0].size();
  RationalMatrix m = a, rb = b;
  auto pivots = reduce(m, rb);
  if (pivots.size() != cols) return std::nullopt;
  for (std::size_t i = pivots.size(); i < rb.size(); ++i)
    for (const auto &v : rb[i])
      if (sgn(v) != 0) return std::nullopt;
  RationalMatrix x(cols, RationalVector(rhs));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rb[i];
  return x;
}

std::optional<RationalVector> solve_unique(const RationalMatrix &a, const RationalVector &b) {
  RationalMatrix column(b.size(), RationalVector(1));
  for (std::size_t i = 0; i < b.size(); ++i) column[i][0] = b[i];
  auto x = solve_unique(a, column);
  if (!x) return std::nullopt;
  RationalVector out;
  for (auto &row : *x) out.push_back(row[0]);
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix &a) {
  if (!a.empty() && a.size() != a[0].size()) throw std::invalid_argument("inverse of a non-square matrix");
  return solve_unique(a, identity_matrix(a.size()));
}

RationalMatrix multiply(const RationalMatrix &a, const RationalMatrix &b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  RationalMatrix c(a.size(), RationalVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("shape mismatch in multiply");
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace twc
