#include "jp/construction.hpp"

#include <cmath>
#include <stdexcept>

#include "jp/certify.hpp"
#include "jp/norms.hpp"
#include "jp/operators.hpp"

namespace jp::construct {

namespace {

constexpr std::int64_t kSearchCap = std::int64_t{1} << 40;
constexpr std::int64_t kSupportCap = std::int64_t{1} << 26;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    if (b > 0 && a > (std::int64_t{1} << 62) / b) {
        throw std::length_error("construction: stage product m_k overflows");
    }
    return a * b;
}

} // namespace

std::vector<double> epsilon_schedule(std::int64_t K, double eps) {
    if (K < 1) {
        throw std::invalid_argument("epsilon_schedule: K must be >= 1");
    }
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw std::invalid_argument("epsilon_schedule: eps must be > 0");
    }
    std::vector<double> out(static_cast<std::size_t>(K));
    for (std::int64_t k = 1; k <= K; ++k) {
        out[static_cast<std::size_t>(k - 1)] =
            eps / std::pow(3.0, static_cast<double>(K - k));
    }
    return out;
}

double psi(std::int64_t m, std::int64_t n, Exponent p) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("psi: m and n must be >= 1");
    }
    const double pv = p.value();
    const double nd = static_cast<double>(n);
    if (pv <= 2.0) {
        return std::pow(nd, -(pv - 2.0 + 1.0 / pv));
    }
    return std::pow(2.0 * static_cast<double>(m), pv - 2.0) * std::pow(nd, -1.0 / pv);
}

double phi(std::int64_t m, std::int64_t n, Exponent p) {
    const double pv = p.value();
    const double nd = static_cast<double>(n);
    return std::pow(2.0, pv) * (psi(m, n, p) + std::pow(nd, -(1.0 - 1.0 / pv))) +
           std::pow(nd, -(pv - 1.0));
}

double gamma_update(double gamma, std::int64_t n, Exponent p) {
    if (!(gamma >= 1.0)) {
        throw std::invalid_argument("gamma_update: gamma must be >= 1");
    }
    if (n < 1) {
        throw std::invalid_argument("gamma_update: n must be >= 1");
    }
    const double pv = p.value();
    return gamma * std::pow(1.0 + std::pow(static_cast<double>(n), 1.0 / pv - 1.0), pv);
}

std::int64_t choose_stage_n(double gamma_prev, double eps_prev, std::int64_t m_prev,
                            std::int64_t k, std::int64_t K, double eps, Exponent p) {
    if (k < 2 || k > K || m_prev < 1 || !(gamma_prev >= 1.0) || !(eps_prev > 0.0)) {
        throw std::invalid_argument("choose_stage_n: invalid partial schedule");
    }
    const double gamma_cap = 1.0 + eps * static_cast<double>(k) / static_cast<double>(K);
    const auto feasible = [&](std::int64_t n) {
        return gamma_update(gamma_prev, n, p) <= gamma_cap &&
               gamma_prev * phi(m_prev, n, p) <= eps_prev;
    };

    std::int64_t hi = 2;
    while (!feasible(hi)) {
        hi *= 2;
        if (hi > kSearchCap) {
            throw std::runtime_error(
                "choose_stage_n: no even n <= 2^40 satisfies the stage constraints");
        }
    }
    if (hi == 2) {
        return 2;
    }
    std::int64_t lo = hi / 2 + 2; // hi/2 is even and known infeasible
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        mid -= mid & 1;
        if (feasible(mid)) {
            hi = mid;
        } else {
            lo = mid + 2;
        }
    }
    return lo;
}

std::vector<StageParams> plan(std::int64_t K, double eps, Exponent p, Mode mode,
                              const std::vector<std::int64_t>& manual_ns) {
    if (K < 1) {
        throw std::invalid_argument("plan: K must be >= 1");
    }
    const std::vector<double> eps_k = epsilon_schedule(K, eps);
    if (mode == Mode::manual) {
        if (static_cast<std::int64_t>(manual_ns.size()) != K - 1) {
            throw std::invalid_argument("plan: manual mode needs K-1 stage sizes");
        }
        for (std::int64_t n : manual_ns) {
            if (n < 2 || n % 2 != 0) {
                throw std::invalid_argument("plan: manual stage sizes must be even and >= 2");
            }
        }
    } else if (!manual_ns.empty()) {
        throw std::invalid_argument("plan: bound mode takes no manual stage sizes");
    }

    std::vector<StageParams> stages;
    stages.push_back(StageParams{1, 1, 1, 1.0, eps_k[0]});
    for (std::int64_t k = 2; k <= K; ++k) {
        const StageParams& prev = stages.back();
        const std::int64_t n = (mode == Mode::bound)
                                   ? choose_stage_n(prev.gamma, prev.eps, prev.m, k, K, eps, p)
                                   : manual_ns[static_cast<std::size_t>(k - 2)];
        stages.push_back(StageParams{k, n, checked_mul(prev.m, n),
                                     gamma_update(prev.gamma, n, p),
                                     eps_k[static_cast<std::size_t>(k - 1)]});
    }
    return stages;
}

Construction build(std::int64_t K, double eps, Exponent p, Mode mode,
                   const std::vector<std::int64_t>& manual_ns) {
    Construction c{p, K, eps, mode, plan(K, eps, p, mode, manual_ns), {}};
    if (2 * c.stages.back().m > kSupportCap) {
        throw std::length_error("build: final support 2*m_K exceeds the materialisation cap");
    }
    c.vectors.push_back(spike(1, p));
    for (std::int64_t k = 2; k <= K; ++k) {
        const StageParams& prev = c.stages[static_cast<std::size_t>(k - 2)];
        const StageParams& cur = c.stages[static_cast<std::size_t>(k - 1)];
        for (auto& v : c.vectors) {
            v = stretch(v, cur.n);
        }
        c.vectors.push_back(std::pow(prev.gamma, 1.0 / p.value()) * spike(cur.m, p));
    }
    return c;
}

double guaranteed_power_bound(const Construction& c) {
    if (c.mode != Mode::bound) {
        throw std::invalid_argument(
            "guaranteed_power_bound: defined for bound mode only; "
            "use accumulated_error_bound for manual constructions");
    }
    const StageParams& last = c.stages.back();
    return last.gamma + last.eps;
}

std::vector<double> error_ledger(const Construction& c) {
    std::vector<double> e(c.stages.size(), 0.0);
    for (std::size_t k = 1; k < c.stages.size(); ++k) {
        const StageParams& prev = c.stages[k - 1];
        e[k] = 2.0 * e[k - 1] + prev.gamma * phi(prev.m, c.stages[k].n, c.p);
    }
    return e;
}

double accumulated_error_bound(const Construction& c) {
    return c.stages.back().gamma + error_ledger(c).back();
}

SoundnessReport soundness_check(const Construction& c) {
    SoundnessReport r;
    r.accumulated_bound = accumulated_error_bound(c);
    if (c.mode == Mode::bound) {
        r.guaranteed_bound = guaranteed_power_bound(c);
    }

    const auto results = certify::sign_sweep_results(c.vectors, c.p);
    for (const auto& [pattern, nr] : results) {
        r.pattern_norms.emplace(pattern, nr.value);
        r.max_power = std::max(r.max_power, nr.power);
    }

    r.min_norm = jp_norm_exact(c.vectors.front(), c.p).value;
    for (const auto& v : c.vectors) {
        r.min_norm = std::min(r.min_norm, jp_norm_exact(v, c.p).value);
    }

    const std::int64_t expected = 2 * c.stages.back().m;
    r.support_ok = true;
    for (const auto& v : c.vectors) {
        r.support_ok = r.support_ok && v.support_length() == expected;
    }

    r.ok = r.support_ok && r.min_norm >= 1.0 - 1e-9 &&
           r.max_power <= r.accumulated_bound + 1e-8 &&
           (c.mode != Mode::bound || r.max_power <= r.guaranteed_bound + 1e-8);
    return r;
}

} // namespace jp::construct
