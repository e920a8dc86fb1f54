#include "jp/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "jp/sums.hpp"

namespace jp {

namespace {

// Suffix DP over an arbitrary increasing candidate index list. g[i] is the
// best power sum of a chain starting at candidate i; next[i] is the smallest
// candidate position attaining it. Scanning candidates in ascending order
// with a strict ">" update makes next[] the lexicographically smallest
// continuation, so following next[] from the smallest maximising start index
// yields the lexicographically smallest maximising chain.
NormResult dp_over_candidates(const FiniteVector& x, Exponent p,
                              const std::vector<std::int64_t>& idx) {
    const std::size_t n = idx.size();
    std::vector<double> g(n, 0.0);
    std::vector<std::size_t> next(n, 0);
    for (std::size_t i = n - 1; i-- > 0;) {
        const double xi = x.at(idx[i]);
        double best = 0.0;
        std::size_t arg = i;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cand = p.power(xi - x.at(idx[j])) + g[j];
            if (cand > best) {
                best = cand;
                arg = j;
            }
        }
        g[i] = best;
        next[i] = arg;
    }

    double power = 0.0;
    for (double v : g) {
        power = std::max(power, v);
    }
    if (power <= 0.0) {
        return NormResult{};
    }

    std::size_t cur = 0;
    while (g[cur] != power) {
        ++cur;
    }
    std::vector<std::int64_t> chain{idx[cur]};
    while (g[cur] > 0.0) {
        cur = next[cur];
        chain.push_back(idx[cur]);
    }
    return NormResult{p.root(power), power, IndexChain(std::move(chain))};
}

} // namespace

double nu_p_power(const FiniteVector& x, const IndexChain& a, Exponent p) {
    const auto& idx = a.indices();
    if (idx.size() < 2) {
        return 0.0;
    }
    KahanSum sum;
    for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
        sum.add(p.power(x.at(idx[j]) - x.at(idx[j + 1])));
    }
    return sum.value();
}

double nu_p(const FiniteVector& x, const IndexChain& a, Exponent p) {
    return p.root(nu_p_power(x, a, p));
}

NormResult jp_norm_exact(const FiniteVector& x, Exponent p) {
    const std::int64_t len = x.support_length();
    if (len == 0) {
        return NormResult{};
    }
    std::vector<std::int64_t> idx(static_cast<std::size_t>(len) + 1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = static_cast<std::int64_t>(i);
    }
    return dp_over_candidates(x, p, idx);
}

NormResult jp_norm_bruteforce(const FiniteVector& x, Exponent p) {
    const std::int64_t len = x.support_length();
    if (len == 0) {
        return NormResult{};
    }
    if (len > 20) {
        throw std::length_error("jp_norm_bruteforce: support length > 20");
    }
    const int n = static_cast<int>(len) + 1; // indices 0..L

    // Pairwise |x(i)-x(j)|^p table; the enumeration below is pure lookups.
    std::vector<double> pw(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pw[static_cast<std::size_t>(i) * n + j] = p.power(x.at(i) - x.at(j));
        }
    }

    double best = 0.0;
    std::vector<std::int64_t> best_chain;
    std::vector<std::int64_t> chain;
    const std::uint32_t masks = 1u << n;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        chain.clear();
        double value = 0.0;
        int prev = -1;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                if (prev >= 0) {
                    value += pw[static_cast<std::size_t>(prev) * n + i];
                }
                chain.push_back(i);
                prev = i;
            }
        }
        if (value > best ||
            (value == best && value > 0.0 &&
             std::lexicographical_compare(chain.begin(), chain.end(), best_chain.begin(),
                                          best_chain.end()))) {
            best = value;
            best_chain = chain;
        }
    }
    if (best <= 0.0) {
        return NormResult{};
    }
    return NormResult{p.root(best), best, IndexChain(std::move(best_chain))};
}

namespace {

NormResult pruned_core(const FiniteVector& x, Exponent p) {
    const std::int64_t len = x.support_length();
    if (len == 0) {
        return NormResult{};
    }
    // Keep endpoints 0 and L unconditionally, plus every interior index that
    // is a (non-strict) local extremum of the padded sequence.
    std::vector<std::int64_t> idx;
    idx.push_back(0);
    for (std::int64_t j = 1; j < len; ++j) {
        const double lo = x.at(j - 1);
        const double mid = x.at(j);
        const double hi = x.at(j + 1);
        if ((mid >= lo && mid >= hi) || (mid <= lo && mid <= hi)) {
            idx.push_back(j);
        }
    }
    idx.push_back(len);
    return dp_over_candidates(x, p, idx);
}

bool run_pruned_selfcheck() {
    // Deterministic sample mixing smooth values, plateaus and sign flips.
    std::uint64_t s = 0x5eedULL;
    auto rnd = [&s]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s >> 11) * 0x1.0p-53;
    };
    const double ps[] = {1.5, 2.0, 3.0};
    for (int t = 0; t < 48; ++t) {
        const int len = t % 13;
        std::vector<double> c(static_cast<std::size_t>(len));
        for (double& v : c) {
            v = std::floor(rnd() * 7.0) - 3.0; // integers in [-3, 3]: rich in ties
            if (t % 3 == 0) {
                v += rnd(); // and a continuous variant
            }
        }
        const FiniteVector x(std::move(c));
        for (double pv : ps) {
            const Exponent p(pv);
            const double full = jp_norm_exact(x, p).power;
            const double pruned = pruned_core(x, p).power;
            if (std::abs(full - pruned) > 1e-10 * std::max(1.0, full)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool pruned_selfcheck_ok() {
    static const bool ok = run_pruned_selfcheck();
    return ok;
}

NormResult jp_norm_pruned(const FiniteVector& x, Exponent p) {
    if (!pruned_selfcheck_ok()) {
        return jp_norm_exact(x, p);
    }
    return pruned_core(x, p);
}

double gp_norm(const GpElement& g, Exponent p) {
    KahanSum sum;
    for (const auto& block : g.blocks()) {
        double m = 0.0;
        for (double v : block) {
            m = std::max(m, std::abs(v));
        }
        sum.add(p.power(m));
    }
    return p.root(sum.value());
}

double jpinfty_norm(const JpInftyElement& j, Exponent p) {
    KahanSum sum;
    for (const auto& block : j.blocks()) {
        sum.add(jp_norm_exact(block, p).power);
    }
    return p.root(sum.value());
}

} // namespace jp
