#pragma once

#include <cstdint>
#include <vector>

#include "jp/types.hpp"

namespace jp::lemmas {

/// A concrete instance of the main inductive lemma: a base vector x
/// supported on [0, 2m-1] whose increments obey max |x(j)-x(j+1)|^p <=
/// gamma/2m, an even stretch factor n, and the derived data
/// y = T_n x, z = gamma^{1/p} z_{2mn}, w = y + z. eps_actual is the
/// measured slack ||x||^p - nu_p(x, [0,2m])^p; every downstream inequality
/// is monotone in it, so no target slack is imposed.
struct MainLemmaInstance {
    Exponent p;
    std::int64_t m = 0;
    double gamma = 0.0;
    FiniteVector x;
    double eps_actual = 0.0;
    std::int64_t n = 0;
    FiniteVector y;
    FiniteVector z;
    FiniteVector w;
    double c = 0.0;          // (gamma/2mn)^{1/p}, the spike increment of z
    std::vector<double> d;   // d[k] = |x(k)-x(k+1)|/n, the y increment on block k
};

struct AdmissibleVector {
    FiniteVector x;
    double eps_actual = 0.0;
};

/// Seeded generator of admissible base vectors: x(0) uniform in
/// [-(gamma/2m)^{1/p}, +(gamma/2m)^{1/p}], increments uniform with random
/// signs in the same bound, values clamped to |x(j)| <= (2m-j) * bound so
/// the walk can always return to zero within admissible steps.
AdmissibleVector make_admissible_x(std::int64_t m, double gamma, Exponent p,
                                   std::uint64_t seed);

/// Validates the lemma's hypotheses (increment condition, strict c > d_k,
/// non-negative measured slack) and derives y, z, w, c, d. Throws
/// std::invalid_argument when the instance is inadmissible.
MainLemmaInstance make_instance(FiniteVector x, std::int64_t m, double gamma, Exponent p,
                                std::int64_t n);

/// Conclusions of the main lemma on one instance, as margins (>= 0 means
/// the inequality holds):
///  - support_ok:       w supported on [0, 2mn-1]
///  - increment_margin: (gamma/2mn)(1+n^{-(1-1/p)})^p  -  max |w(j)-w(j+1)|^p
///  - slack_margin:     (2*eps_actual + gamma*phi(m,n)) - (||w||^p - nu_p(w,[0,2mn])^p)
struct MainLemmaReport {
    bool support_ok = false;
    double increment_margin = 0.0;
    double slack_margin = 0.0;
    bool pass = false;
};

MainLemmaReport verify_mainlemma(const MainLemmaInstance& inst, std::int64_t dp_limit = 20000);

/// The four-step decomposition of the main lemma's proof on one instance.
/// A is an optimal chain for w augmented with the endpoints 0 and 2mn
/// (w vanishes beyond the support and appending or prepending an endpoint
/// only ever adds a non-negative term, so the augmented chain still attains
/// the norm). N is the set of multiples of n in [0, 2mn]. Values are powers
/// of the chain functional; s[k] is the block excess of step 4.
struct StepTrace {
    IndexChain A;
    IndexChain N;
    std::vector<std::int64_t> ell; // consecutive gaps of A; sums to 2mn
    double rho1 = 0.0;
    double rho2 = 0.0;
    double rho3 = 0.0;
    double w_A = 0.0;
    double y_A = 0.0;
    double z_A = 0.0;
    double y_AN = 0.0;
    double z_AN = 0.0;
    double y_full = 0.0;
    double z_full = 0.0;
    double w_full = 0.0;
    std::vector<double> s;
    double step1_margin = 0.0;
    double step2_margin = 0.0;
    double step3_margin = 0.0;
    double step4_margin = 0.0;
    bool pass = false;
};

StepTrace verify_steps(const MainLemmaInstance& inst, std::int64_t dp_limit = 20000);

/// Block excess s_k computed two ways: direct summation over the block and
/// the closed form (n/2)((c+d_k)^p + (c-d_k)^p - 2 d_k^p - 2 c^p). Returns
/// the discrepancy relative to max(1, |direct|, |closed|); the identity is
/// exact, so this sits at rounding level.
double check_sk_identity(const MainLemmaInstance& inst, std::int64_t k);

/// Margin of (a+b)^p - a^p - b^p <= 2^p (a^{p-1} b + a b^{p-1}) for a, b > 0.
double check_ineq1(double a, double b, Exponent p);

/// Empirical supremum of ((1+t)^p - 1 - t^p) / (t + t^{p-1}) over a
/// geometric grid on (0, 1]. Never exceeds 2^p.
double best_constant_scan(Exponent p, std::int64_t grid);

/// Margin of t^p - t <= (t-1)(t+1)^{p-1} for t >= 1.
double check_ineq2(double t, Exponent p);

/// Both sides of the gap-filling identity
///   sum_j (nu_p(v,D_j)^p - nu_p(v,C_j)^p)
///     = nu_p(v, U(D_j u E_j))^p - nu_p(v, U(C_j u E_j))^p,
/// where the families interleave (min C_j = min D_j, max C_j = max D_j <=
/// min of the next family, E_j bridging consecutive families; the final
/// singleton E is appended internally). Returns the relative discrepancy.
double check_fillgaps(const FiniteVector& v, Exponent p,
                      const std::vector<IndexChain>& C, const std::vector<IndexChain>& D,
                      const std::vector<IndexChain>& E);

/// Margin of the endpoint-replacement inequality: for c <= b_1 < ... <
/// b_ell <= cp and v monotone-configured across those points,
///   nu_p(v,{b_1,b_ell})^p - nu_p(v,B)^p <= nu_p(v,{c,cp})^p - nu_p(v,C)^p
/// with C = {c, b_2, ..., b_{ell-1}, cp}.
double check_endpoints(const FiniteVector& v, Exponent p, std::int64_t c, std::int64_t cp,
                       const IndexChain& B);

/// Seeded generators for the identity and endpoint checks.
struct FillgapsInstance {
    FiniteVector v;
    std::vector<IndexChain> C;
    std::vector<IndexChain> D;
    std::vector<IndexChain> E;
};

FillgapsInstance gen_fillgaps_instance(std::uint64_t seed);

struct EndpointsInstance {
    FiniteVector v;
    std::int64_t c = 0;
    std::int64_t cp = 0;
    IndexChain B;
};

EndpointsInstance gen_endpoints_instance(std::uint64_t seed);

} // namespace jp::lemmas
