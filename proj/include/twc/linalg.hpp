#pragma once

// Dense exact linear algebra over ℚ, sized for desk-scale change-of-basis
// and interpolation systems (a few hundred unknowns at most).

#include <optional>
#include <vector>

#include "twc/rational.hpp"

namespace twc {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Row-reduces a copy of `a`; returns its rank.
int rank(RationalMatrix a);

/// Solves a x = b for a (possibly overdetermined) system. Returns nullopt if
/// the system is inconsistent or the solution is not unique.
std::optional<RationalVector> solve_unique(const RationalMatrix &a, const RationalVector &b);

/// Solves a X = B column by column (shared elimination). Returns nullopt
/// under the same conditions as solve_unique.
std::optional<RationalMatrix> solve_unique(const RationalMatrix &a, const RationalMatrix &b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix &a);

RationalMatrix multiply(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix identity_matrix(std::size_t n);

}  // namespace twc
