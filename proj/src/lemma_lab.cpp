#include "jp/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jp/construction.hpp"
#include "jp/norms.hpp"
#include "jp/operators.hpp"
#include "jp/rng.hpp"
#include "jp/sums.hpp"

namespace jp::lemmas {

AdmissibleVector make_admissible_x(std::int64_t m, double gamma, Exponent p,
                                   std::uint64_t seed) {
    if (m < 1 || !(gamma > 0.0)) {
        throw std::invalid_argument("make_admissible_x: need m >= 1 and gamma > 0");
    }
    const double bound = std::pow(gamma / (2.0 * static_cast<double>(m)), 1.0 / p.value());
    SplitMix64 rng(seed);

    std::vector<double> c(static_cast<std::size_t>(2 * m), 0.0);
    c[0] = rng.uniform(-bound, bound);
    for (std::int64_t j = 1; j < 2 * m; ++j) {
        const double inc = rng.uniform01() * bound;
        const double proposal = c[static_cast<std::size_t>(j - 1)] + (rng.coin() ? inc : -inc);
        // |x(j)| <= (2m-j)*bound keeps the remaining steps able to reach 0;
        // whenever the clamp engages the step stays within the bound.
        const double limit = static_cast<double>(2 * m - j) * bound;
        c[static_cast<std::size_t>(j)] = std::clamp(proposal, -limit, limit);
    }

    AdmissibleVector out{FiniteVector(std::move(c)), 0.0};
    out.eps_actual = jp_norm_exact(out.x, p).power -
                     nu_p_power(out.x, IndexChain::interval(0, 2 * m), p);
    return out;
}

MainLemmaInstance make_instance(FiniteVector x, std::int64_t m, double gamma, Exponent p,
                                std::int64_t n) {
    if (m < 1 || !(gamma > 0.0)) {
        throw std::invalid_argument("make_instance: need m >= 1 and gamma > 0");
    }
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("make_instance: n must be even and >= 2");
    }
    if (x.support_length() > 2 * m) {
        throw std::invalid_argument("make_instance: x must be supported on [0, 2m-1]");
    }

    const double m2 = 2.0 * static_cast<double>(m);
    const double increment_cap = gamma / m2;
    for (std::int64_t j = 0; j < 2 * m; ++j) {
        if (p.power(x.at(j) - x.at(j + 1)) > increment_cap * (1.0 + 1e-12)) {
            throw std::invalid_argument("make_instance: increment condition violated");
        }
    }

    MainLemmaInstance inst{p, m, gamma, std::move(x), 0.0, n, {}, {}, {}, 0.0, {}};
    inst.eps_actual = jp_norm_exact(inst.x, p).power -
                      nu_p_power(inst.x, IndexChain::interval(0, 2 * m), p);
    if (inst.eps_actual < -1e-12) {
        throw std::invalid_argument("make_instance: negative slack (numerical inconsistency)");
    }

    inst.y = stretch(inst.x, n);
    inst.z = std::pow(gamma, 1.0 / p.value()) * spike(m * n, p);
    inst.w = inst.y + inst.z;
    inst.c = std::pow(gamma / (m2 * static_cast<double>(n)), 1.0 / p.value());
    inst.d.resize(static_cast<std::size_t>(2 * m));
    for (std::int64_t k = 0; k < 2 * m; ++k) {
        const double dk = std::abs(inst.x.at(k) - inst.x.at(k + 1)) / static_cast<double>(n);
        if (inst.c - dk <= 1e-12 * std::max(1.0, inst.c)) {
            throw std::invalid_argument("make_instance: c > d_k fails with margin");
        }
        inst.d[static_cast<std::size_t>(k)] = dk;
    }
    return inst;
}

namespace {

void guard_dp(const MainLemmaInstance& inst, std::int64_t dp_limit) {
    if (2 * inst.m * inst.n > dp_limit) {
        throw std::length_error("instance size 2mn exceeds the DP limit");
    }
}

} // namespace

MainLemmaReport verify_mainlemma(const MainLemmaInstance& inst, std::int64_t dp_limit) {
    guard_dp(inst, dp_limit);
    const std::int64_t full = 2 * inst.m * inst.n;
    const double nd = static_cast<double>(inst.n);
    const double pv = inst.p.value();

    MainLemmaReport r;
    r.support_ok = inst.w.support_length() <= full;

    double max_incr = 0.0;
    for (std::int64_t j = 0; j < full; ++j) {
        max_incr = std::max(max_incr, inst.p.power(inst.w.at(j) - inst.w.at(j + 1)));
    }
    const double incr_cap = inst.gamma / static_cast<double>(full) *
                            std::pow(1.0 + std::pow(nd, 1.0 / pv - 1.0), pv);
    r.increment_margin = incr_cap - max_incr;

    const double slack = jp_norm_exact(inst.w, inst.p).power -
                         nu_p_power(inst.w, IndexChain::interval(0, full), inst.p);
    r.slack_margin = 2.0 * inst.eps_actual +
                     inst.gamma * construct::phi(inst.m, inst.n, inst.p) - slack;

    r.pass = r.support_ok && r.increment_margin >= -1e-9 && r.slack_margin >= -1e-9;
    return r;
}

namespace {

double block_excess(const MainLemmaInstance& inst, std::int64_t k) {
    KahanSum s;
    for (std::int64_t j = k * inst.n; j < (k + 1) * inst.n; ++j) {
        s.add(inst.p.power(inst.w.at(j) - inst.w.at(j + 1)) -
              inst.p.power(inst.y.at(j) - inst.y.at(j + 1)) -
              inst.p.power(inst.z.at(j) - inst.z.at(j + 1)));
    }
    return s.value();
}

} // namespace

StepTrace verify_steps(const MainLemmaInstance& inst, std::int64_t dp_limit) {
    guard_dp(inst, dp_limit);
    const std::int64_t full = 2 * inst.m * inst.n;
    const double pv = inst.p.value();
    const double nd = static_cast<double>(inst.n);

    StepTrace t;
    t.A = jp_norm_exact(inst.w, inst.p).argmax_chain.with(0).with(full);
    t.N = IndexChain::multiples(inst.n, full);
    const IndexChain an = t.A.unioned(t.N);
    const IndexChain interval = IndexChain::interval(0, full);

    for (std::size_t i = 0; i + 1 < t.A.size(); ++i) {
        t.ell.push_back(t.A.indices()[i + 1] - t.A.indices()[i]);
    }

    t.rho1 = std::pow(2.0, pv) * inst.gamma *
             (construct::psi(inst.m, inst.n, inst.p) + std::pow(nd, -(1.0 - 1.0 / pv)));
    t.rho2 = 2.0 * inst.eps_actual;
    t.rho3 = inst.gamma * std::pow(nd, -(pv - 1.0));

    t.w_A = nu_p_power(inst.w, t.A, inst.p);
    t.y_A = nu_p_power(inst.y, t.A, inst.p);
    t.z_A = nu_p_power(inst.z, t.A, inst.p);
    t.y_AN = nu_p_power(inst.y, an, inst.p);
    t.z_AN = nu_p_power(inst.z, an, inst.p);
    t.y_full = nu_p_power(inst.y, interval, inst.p);
    t.z_full = nu_p_power(inst.z, interval, inst.p);
    t.w_full = nu_p_power(inst.w, interval, inst.p);

    for (std::int64_t k = 0; k < 2 * inst.m; ++k) {
        t.s.push_back(block_excess(inst, k));
    }

    t.step1_margin = t.y_A + t.z_A + t.rho1 - t.w_A;
    t.step2_margin = t.y_AN + t.z_AN + t.rho2 - (t.y_A + t.z_A);
    t.step3_margin = t.y_full + t.z_full - (t.y_AN + t.z_AN);
    t.step4_margin = t.w_full + t.rho3 - (t.y_full + t.z_full);
    t.pass = t.step1_margin >= -1e-9 && t.step2_margin >= -1e-9 &&
             t.step3_margin >= -1e-9 && t.step4_margin >= -1e-9;
    return t;
}

double check_sk_identity(const MainLemmaInstance& inst, std::int64_t k) {
    if (k < 0 || k >= 2 * inst.m) {
        throw std::invalid_argument("check_sk_identity: block index out of range");
    }
    const double direct = block_excess(inst, k);
    const double c = inst.c;
    const double dk = inst.d[static_cast<std::size_t>(k)];
    const double closed = 0.5 * static_cast<double>(inst.n) *
                          (inst.p.power(c + dk) + inst.p.power(c - dk) -
                           2.0 * inst.p.power(dk) - 2.0 * inst.p.power(c));
    return std::abs(direct - closed) /
           std::max({1.0, std::abs(direct), std::abs(closed)});
}

double check_ineq1(double a, double b, Exponent p) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("check_ineq1: need a, b > 0");
    }
    const double pv = p.value();
    const double rhs = std::pow(2.0, pv) *
                       (std::pow(a, pv - 1.0) * b + a * std::pow(b, pv - 1.0));
    const double lhs = std::pow(a + b, pv) - std::pow(a, pv) - std::pow(b, pv);
    return rhs - lhs;
}

double best_constant_scan(Exponent p, std::int64_t grid) {
    if (grid < 100) {
        throw std::invalid_argument("best_constant_scan: grid must be >= 100");
    }
    const double pv = p.value();
    double sup = 0.0;
    for (std::int64_t i = 0; i < grid; ++i) {
        // geometric grid from 1e-8 to 1 inclusive
        const double t = std::pow(10.0, -8.0 * (1.0 - static_cast<double>(i) /
                                                          static_cast<double>(grid - 1)));
        const double ratio = (std::pow(1.0 + t, pv) - 1.0 - std::pow(t, pv)) /
                             (t + std::pow(t, pv - 1.0));
        sup = std::max(sup, ratio);
    }
    return sup;
}

double check_ineq2(double t, Exponent p) {
    if (!(t >= 1.0)) {
        throw std::invalid_argument("check_ineq2: need t >= 1");
    }
    const double pv = p.value();
    return (t - 1.0) * std::pow(t + 1.0, pv - 1.0) - (std::pow(t, pv) - t);
}

double check_fillgaps(const FiniteVector& v, Exponent p,
                      const std::vector<IndexChain>& C, const std::vector<IndexChain>& D,
                      const std::vector<IndexChain>& E) {
    const std::size_t ell = C.size();
    if (ell < 1 || D.size() != ell || E.size() != ell - 1) {
        throw std::invalid_argument("check_fillgaps: need |C| = |D| = |E| + 1 >= 1");
    }
    for (std::size_t j = 0; j < ell; ++j) {
        if (C[j].empty() || D[j].empty() || C[j].front() != D[j].front() ||
            C[j].back() != D[j].back()) {
            throw std::invalid_argument("check_fillgaps: min/max of C_j and D_j must agree");
        }
        if (j + 1 < ell) {
            if (C[j].back() > C[j + 1].front()) {
                throw std::invalid_argument("check_fillgaps: families must be ordered");
            }
            if (E[j].empty() || E[j].front() != C[j].back() ||
                E[j].back() != C[j + 1].front()) {
                throw std::invalid_argument(
                    "check_fillgaps: E_j must run from max C_j to min C_{j+1}");
            }
        }
    }

    std::vector<IndexChain> bridges = E;
    bridges.push_back(IndexChain(std::vector<std::int64_t>{C.back().back()}));

    KahanSum lhs;
    IndexChain d_union;
    IndexChain c_union;
    for (std::size_t j = 0; j < ell; ++j) {
        lhs.add(nu_p_power(v, D[j], p) - nu_p_power(v, C[j], p));
        d_union = d_union.unioned(D[j]).unioned(bridges[j]);
        c_union = c_union.unioned(C[j]).unioned(bridges[j]);
    }
    const double rhs = nu_p_power(v, d_union, p) - nu_p_power(v, c_union, p);
    return std::abs(lhs.value() - rhs) /
           std::max({1.0, std::abs(lhs.value()), std::abs(rhs)});
}

double check_endpoints(const FiniteVector& v, Exponent p, std::int64_t c, std::int64_t cp,
                       const IndexChain& B) {
    const std::size_t ell = B.size();
    if (ell < 3) {
        throw std::invalid_argument("check_endpoints: B must have at least 3 points");
    }
    if (c < 0 || c > B.front() || B.back() > cp) {
        throw std::invalid_argument("check_endpoints: need c <= min B and max B <= cp");
    }
    const auto& b = B.indices();
    bool ascending = true;
    bool descending = true;
    for (std::size_t j = 1; j + 1 < ell; ++j) {
        ascending = ascending && v.at(b[0]) <= v.at(b[j]) && v.at(b[j]) <= v.at(b[ell - 1]);
        descending = descending && v.at(b[0]) >= v.at(b[j]) && v.at(b[j]) >= v.at(b[ell - 1]);
    }
    ascending = ascending && v.at(c) <= v.at(b[0]) && v.at(b[ell - 1]) <= v.at(cp);
    descending = descending && v.at(c) >= v.at(b[0]) && v.at(b[ell - 1]) >= v.at(cp);
    if (!ascending && !descending) {
        throw std::invalid_argument("check_endpoints: v is not monotone-configured on B");
    }

    std::vector<std::int64_t> mid(b.begin() + 1, b.end() - 1);
    IndexChain cchain = IndexChain(std::move(mid)).with(c).with(cp);
    const IndexChain outer(std::vector<std::int64_t>{c, cp});
    const IndexChain inner(std::vector<std::int64_t>{b[0], b[ell - 1]});

    return (nu_p_power(v, outer, p) - nu_p_power(v, cchain, p)) -
           (nu_p_power(v, inner, p) - nu_p_power(v, B, p));
}

FillgapsInstance gen_fillgaps_instance(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::int64_t ell = rng.uniform_int(1, 3);

    FillgapsInstance out;
    std::int64_t cursor = rng.uniform_int(0, 3);
    for (std::int64_t j = 0; j < ell; ++j) {
        const std::int64_t lo = cursor;
        const std::int64_t hi = lo + rng.uniform_int(0, 6);
        auto pick = [&](void) {
            std::vector<std::int64_t> idx{lo};
            for (std::int64_t i = lo + 1; i < hi; ++i) {
                if (rng.coin()) {
                    idx.push_back(i);
                }
            }
            if (hi > lo) {
                idx.push_back(hi);
            }
            return IndexChain(std::move(idx));
        };
        out.C.push_back(pick());
        out.D.push_back(pick());
        if (j + 1 < ell) {
            const std::int64_t next = hi + rng.uniform_int(0, 4);
            std::vector<std::int64_t> idx{hi};
            for (std::int64_t i = hi + 1; i < next; ++i) {
                if (rng.coin()) {
                    idx.push_back(i);
                }
            }
            if (next > hi) {
                idx.push_back(next);
            }
            out.E.push_back(IndexChain(std::move(idx)));
            cursor = next;
        } else {
            cursor = hi;
        }
    }

    std::vector<double> vals(static_cast<std::size_t>(cursor + 2), 0.0);
    for (double& v : vals) {
        v = rng.uniform(-2.0, 2.0);
    }
    out.v = FiniteVector(std::move(vals));
    return out;
}

EndpointsInstance gen_endpoints_instance(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::int64_t ell = rng.uniform_int(3, 8);

    EndpointsInstance out;
    out.c = rng.uniform_int(0, 2);
    std::vector<std::int64_t> b(static_cast<std::size_t>(ell));
    b[0] = out.c + rng.uniform_int(0, 2); // c = b_1 allowed
    for (std::int64_t j = 1; j < ell; ++j) {
        b[static_cast<std::size_t>(j)] =
            b[static_cast<std::size_t>(j - 1)] + rng.uniform_int(1, 3);
    }
    out.cp = b.back() + rng.uniform_int(0, 2);

    // Values: v(c) <= v(b_1) <= interior <= v(b_ell) <= v(cp), then an
    // optional global flip to exercise the reversed branch.
    std::vector<double> vals(static_cast<std::size_t>(out.cp + 1), 0.0);
    const double vc = rng.uniform(-1.0, 1.0);
    const double vb1 = vc + rng.uniform01();
    const double vbl = vb1 + rng.uniform01();
    const double vcp = vbl + rng.uniform01();
    vals[static_cast<std::size_t>(out.c)] = vc;
    vals[static_cast<std::size_t>(b[0])] = vb1;
    for (std::int64_t j = 1; j + 1 < ell; ++j) {
        vals[static_cast<std::size_t>(b[static_cast<std::size_t>(j)])] =
            rng.uniform(vb1, vbl);
    }
    vals[static_cast<std::size_t>(b[static_cast<std::size_t>(ell - 1)])] = vbl;
    vals[static_cast<std::size_t>(out.cp)] = vcp;
    if (rng.coin()) {
        for (double& v : vals) {
            v = -v;
        }
    }

    out.v = FiniteVector(std::move(vals));
    out.B = IndexChain(std::move(b));
    return out;
}

} // namespace jp::lemmas
