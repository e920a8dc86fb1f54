#pragma once

#include <map>
#include <string>
#include <vector>

#include "jp/norms.hpp"
#include "jp/types.hpp"

namespace jp::certify {

/// Exact norms of sum delta_i x_i for every sign pattern with delta_1 = +1
/// (the other half follows from ||-x|| = ||x||). Pattern keys are strings of
/// '+' and '-' of length K. Guarded to K <= 24.
std::map<std::string, NormResult> sign_sweep_results(const std::vector<FiniteVector>& xs,
                                                     Exponent p);
std::map<std::string, double> sign_sweep(const std::vector<FiniteVector>& xs, Exponent p);

/// Equivalence certificate for a family of vectors against the l_infty^K
/// unit basis. M bounds ||sum lambda_i x_i|| above on the whole cube by
/// convexity; flipping a maximal coordinate bounds it below by
/// 2*min_i ||x_i|| - M on the faces, so the distortion is M/(2*m_low - M)
/// whenever that is positive.
struct DistortionReport {
    std::int64_t K = 0;
    double p = 0.0;
    std::map<std::string, double> per_pattern;
    double M = 0.0;
    double m_low = 0.0;
    double lower = 0.0;
    double distortion = 0.0; // +inf when not certified
    bool certified = false;
};

DistortionReport certify_linf_embedding(const std::vector<FiniteVector>& xs, Exponent p);

/// Max of ||sum lambda_i x_i|| over the faces of the cube max|lambda_i| = 1,
/// sampled at resolution g per coordinate. A numerical spot check of the
/// convexity step: the result must not exceed M from the sign sweep.
/// Guarded to K <= 4.
double grid_check(const std::vector<FiniteVector>& xs, Exponent p, std::int64_t g);

} // namespace jp::certify
