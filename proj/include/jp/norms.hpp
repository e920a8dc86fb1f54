#pragma once

#include "jp/types.hpp"

namespace jp {

/// Chain functional: (sum over consecutive pairs of A of |x(n_j) - x(n_{j+1})|^p)^{1/p}.
/// Zero when A has fewer than two indices; indices beyond the support read 0.
double nu_p(const FiniteVector& x, const IndexChain& a, Exponent p);

/// The p-th power of the chain functional (the quantity most of the proof
/// machinery manipulates). Accumulated with compensated summation.
double nu_p_power(const FiniteVector& x, const IndexChain& a, Exponent p);

/// Exact norm by dynamic programming over the indices 0..L, where L is the
/// support length (one trailing zero index). Any chain can drop repeated
/// zero-tail indices without changing its value, so this range is complete.
/// The returned chain is the lexicographically smallest maximiser.
NormResult jp_norm_exact(const FiniteVector& x, Exponent p);

/// Independent oracle: exhaustive enumeration of all subsets of {0..L}.
/// Refuses support length > 20.
NormResult jp_norm_bruteforce(const FiniteVector& x, Exponent p);

/// DP restricted to local extrema of the zero-padded sequence (endpoints 0
/// and L always kept). Equality with jp_norm_exact is a tested property, not
/// an assumed theorem; a one-time sampled cross-check against the full DP
/// backs it, and if that check ever failed the full DP would be used instead.
NormResult jp_norm_pruned(const FiniteVector& x, Exponent p);

/// Result of the pruned method's one-time self-check.
bool pruned_selfcheck_ok();

/// (sum over blocks of (max abs entry)^p)^{1/p}.
double gp_norm(const GpElement& g, Exponent p);

/// (sum over blocks of ||block||^p)^{1/p}, block norms via jp_norm_exact.
double jpinfty_norm(const JpInftyElement& j, Exponent p);

} // namespace jp
