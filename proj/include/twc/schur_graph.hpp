#pragma once

// Edge multiplicities, Markov kernels, Plancherel measures and the up/down
// moments on the Schur graph of strict partitions.

#include <map>

#include "twc/partitions.hpp"
#include "twc/rational.hpp"

namespace twc {

/// One row of a transition kernel. Probabilities are stored for the
/// nonzero targets only.
struct TransitionRow {
  StrictPartition source;
  std::map<StrictPartition, Rational> targets;
};

/// κ(ν, λ): 2 if λ = ν + □ with equal length, 1 if the length grows, else 0.
int edge_multiplicity(const StrictPartition &nu, const StrictPartition &lambda);

/// p↓(λ, ν) = g_ν / g_λ · κ(ν, λ). Requires |λ| >= 1.
Rational down_transition(const StrictPartition &lambda, const StrictPartition &nu);

/// p↑(ν, λ) = g_λ / (g_ν (|ν| + 1)) when ν ↗ λ, else 0.
Rational up_transition(const StrictPartition &nu, const StrictPartition &lambda);

TransitionRow down_row(const StrictPartition &lambda);
TransitionRow up_row(const StrictPartition &nu);

/// Pl_n(λ) = 2^{ℓ(λ)-n} g_λ² / n!, materialized on all of SP_n.
std::map<StrictPartition, Rational> plancherel(int n);

/// Path count from ∅ by dynamic programming over κ-weighted edges. Independent
/// of the closed formula in path_count().
Integer path_count_dp(const StrictPartition &lambda);

/// s(i) = i(i+1).
inline Integer jm_eigenvalue(int i) { return Integer(i) * (i + 1); }

/// 𝕞↑_k(λ) = Σ_{x ∈ ℭ↑(λ)} p↑(λ, λ+□(x)) s(x)^k.
Rational up_moment(int k, const StrictPartition &lambda);

/// 𝕞↓_k(λ) = 2|λ| Σ_{y ∈ ℭ↓(λ)} p↓(λ, λ-□(y)) s(y)^{k-1}, for k >= 1.
/// Throws std::invalid_argument for k < 1.
Rational down_moment(int k, const StrictPartition &lambda);

}  // namespace twc
