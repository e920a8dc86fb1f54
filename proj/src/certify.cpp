#include "jp/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace jp::certify {

namespace {

std::string pattern_string(const std::vector<double>& signs) {
    std::string s;
    s.reserve(signs.size());
    for (double v : signs) {
        s.push_back(v >= 0.0 ? '+' : '-');
    }
    return s;
}

} // namespace

std::map<std::string, NormResult> sign_sweep_results(const std::vector<FiniteVector>& xs,
                                                     Exponent p) {
    const std::size_t K = xs.size();
    if (K < 1) {
        throw std::invalid_argument("sign_sweep: need at least one vector");
    }
    if (K > 24) {
        throw std::length_error("sign_sweep: K > 24 would need more than 2^23 norms");
    }
    std::map<std::string, NormResult> out;
    std::vector<double> signs(K, 1.0);
    const std::uint32_t patterns = 1u << (K - 1);
    for (std::uint32_t bits = 0; bits < patterns; ++bits) {
        signs[0] = 1.0;
        for (std::size_t i = 1; i < K; ++i) {
            signs[i] = (bits & (1u << (i - 1))) ? -1.0 : 1.0;
        }
        out.emplace(pattern_string(signs), jp_norm_exact(linear_combination(xs, signs), p));
    }
    return out;
}

std::map<std::string, double> sign_sweep(const std::vector<FiniteVector>& xs, Exponent p) {
    std::map<std::string, double> out;
    for (const auto& [pattern, nr] : sign_sweep_results(xs, p)) {
        out.emplace(pattern, nr.value);
    }
    return out;
}

DistortionReport certify_linf_embedding(const std::vector<FiniteVector>& xs, Exponent p) {
    for (const auto& x : xs) {
        if (x.is_zero()) {
            throw std::invalid_argument("certify_linf_embedding: zero vector in the family");
        }
    }
    DistortionReport r;
    r.K = static_cast<std::int64_t>(xs.size());
    r.p = p.value();
    r.per_pattern = sign_sweep(xs, p);

    r.M = 0.0;
    for (const auto& [pattern, norm] : r.per_pattern) {
        r.M = std::max(r.M, norm);
    }
    r.m_low = std::numeric_limits<double>::infinity();
    for (const auto& x : xs) {
        r.m_low = std::min(r.m_low, jp_norm_exact(x, p).value);
    }
    r.lower = 2.0 * r.m_low - r.M;
    r.certified = r.lower > 0.0;
    r.distortion = r.certified ? r.M / r.lower : std::numeric_limits<double>::infinity();
    return r;
}

double grid_check(const std::vector<FiniteVector>& xs, Exponent p, std::int64_t g) {
    const std::size_t K = xs.size();
    if (K < 1) {
        throw std::invalid_argument("grid_check: need at least one vector");
    }
    if (K > 4) {
        throw std::length_error("grid_check: K > 4 makes the face enumeration explode");
    }
    if (g < 2) {
        throw std::invalid_argument("grid_check: grid resolution must be >= 2");
    }

    double best = 0.0;
    std::vector<double> lambda(K, 0.0);
    // One face per coordinate: lambda_j = 1, the rest sampled on [-1, 1].
    // The opposite faces follow from global sign symmetry of the norm.
    for (std::size_t face = 0; face < K; ++face) {
        std::vector<std::int64_t> ticks(K, 0);
        while (true) {
            for (std::size_t i = 0; i < K; ++i) {
                lambda[i] = (i == face)
                                ? 1.0
                                : -1.0 + 2.0 * static_cast<double>(ticks[i]) /
                                             static_cast<double>(g - 1);
            }
            best = std::max(best, jp_norm_exact(linear_combination(xs, lambda), p).value);

            std::size_t carry = 0;
            while (carry < K) {
                if (carry == face) {
                    ++carry;
                    continue;
                }
                if (++ticks[carry] < g) {
                    break;
                }
                ticks[carry] = 0;
                ++carry;
            }
            if (carry == K) {
                break;
            }
        }
    }
    return best;
}

} // namespace jp::certify
