#pragma once

#include <map>
#include <string>
#include <vector>

#include "jp/types.hpp"

namespace jp::construct {

enum class Mode { bound, manual };

/// Per-stage parameters of the inductive construction. m is the running
/// product n_1 * ... * n_k; gamma and eps follow the stage recursions.
struct StageParams {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    double gamma = 1.0;
    double eps = 0.0;
};

/// A completed construction: K vectors supported on [0, 2*m_K - 1] together
/// with the full stage trail that produced them.
struct Construction {
    Exponent p;
    std::int64_t K = 0;
    double eps = 0.0;
    Mode mode = Mode::bound;
    std::vector<StageParams> stages;
    std::vector<FiniteVector> vectors;
};

/// [eps/3^{K-1}, ..., eps/3, eps].
std::vector<double> epsilon_schedule(std::int64_t K, double eps);

/// n^{-(p-2+1/p)} for 1 < p <= 2, (2m)^{p-2} * n^{-1/p} for p > 2.
double psi(std::int64_t m, std::int64_t n, Exponent p);

/// 2^p * (psi(m,n) + n^{-(1-1/p)}) + n^{-(p-1)}; strictly decreasing in n.
double phi(std::int64_t m, std::int64_t n, Exponent p);

/// gamma * (1 + n^{1/p-1})^p.
double gamma_update(double gamma, std::int64_t n, Exponent p);

/// Smallest even n >= 2 with gamma_update(gamma_prev, n) <= 1 + eps*k/K and
/// gamma_prev * phi(m_prev, n) <= eps_prev. Both constraints relax as n
/// grows, so the minimum is found by doubling to bracket and then binary
/// searching over even integers.
std::int64_t choose_stage_n(double gamma_prev, double eps_prev, std::int64_t m_prev,
                            std::int64_t k, std::int64_t K, double eps, Exponent p);

/// Stage schedule only (no vectors). Cheap; lets callers predict the final
/// support 2*m_K before committing to a build.
std::vector<StageParams> plan(std::int64_t K, double eps, Exponent p, Mode mode,
                              const std::vector<std::int64_t>& manual_ns = {});

/// Runs the construction: stage 1 is z_2 with n_1 = gamma_1 = 1; stage k
/// stretches every earlier vector by n_k and appends gamma_{k-1}^{1/p}
/// times the spiky vector of support 2*m_k. Manual stage sizes must be even.
Construction build(std::int64_t K, double eps, Exponent p, Mode mode,
                   const std::vector<std::int64_t>& manual_ns = {});

/// gamma_K + eps_K; valid for bound-mode constructions only, where it also
/// satisfies gamma_K + eps_K <= 1 + 2*eps.
double guaranteed_power_bound(const Construction& c);

/// The slack ledger E_1..E_K with E_1 = 0 and
/// E_k = 2*E_{k-1} + gamma_{k-1} * phi(m_{k-1}, n_k).
std::vector<double> error_ledger(const Construction& c);

/// gamma_K + E_K: an upper bound for max over sign patterns of
/// ||sum delta_i x_i||^p that holds for any even stage sizes, manual or not.
double accumulated_error_bound(const Construction& c);

/// Numerical check of the construction's contract: every sign-pattern norm
/// power below the applicable bounds, every vector norm >= 1, support
/// exactly 2*m_K.
struct SoundnessReport {
    std::map<std::string, double> pattern_norms;
    double max_power = 0.0;
    double accumulated_bound = 0.0;
    double guaranteed_bound = 0.0; // bound mode only, else 0
    double min_norm = 0.0;
    bool support_ok = false;
    bool ok = false;
};

SoundnessReport soundness_check(const Construction& c);

} // namespace jp::construct
