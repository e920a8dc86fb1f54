#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jp/construction.hpp"
#include "jp/lemma_lab.hpp"
#include "jp/norms.hpp"
#include "jp/operators.hpp"
#include "jp/rng.hpp"

using jp::Exponent;
using jp::FiniteVector;
using jp::IndexChain;
namespace jl = jp::lemmas;

TEST_CASE("admissible generator respects its contract") {
    for (double pv : {1.5, 2.0, 3.0}) {
        const Exponent p(pv);
        for (std::int64_t m : {1, 2, 4}) {
            for (double gamma : {0.5, 1.0, 2.0}) {
                const double bound =
                    std::pow(gamma / (2.0 * static_cast<double>(m)), 1.0 / pv);
                for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                    const auto adm = jl::make_admissible_x(m, gamma, p, seed);
                    CHECK(adm.x.support_length() <= 2 * m);
                    CHECK(std::abs(adm.x.at(0)) <= bound * (1.0 + 1e-12));
                    for (std::int64_t j = 0; j < 2 * m; ++j) {
                        CHECK(std::abs(adm.x.at(j) - adm.x.at(j + 1)) <= bound * (1.0 + 1e-12));
                    }
                    CHECK(adm.eps_actual >= -1e-12);
                }
            }
        }
    }
}

TEST_CASE("instance validation") {
    const Exponent p2(2.0);

    // the spiky unit vector itself sits exactly on the increment boundary
    const auto inst = jl::make_instance(jp::spike(1, p2), 1, 1.0, p2, 8);
    CHECK(std::abs(inst.eps_actual) < 1e-14);
    CHECK(inst.w.support_length() <= 16);

    // zero base vector: w is the scaled spike, slack vanishes
    const auto zero = jl::make_instance(FiniteVector{}, 1, 1.0, p2, 4);
    CHECK(zero.eps_actual == 0.0);
    const auto rep = jl::verify_mainlemma(zero);
    CHECK(rep.pass);
    CHECK(rep.slack_margin >= 0.0);

    CHECK_THROWS_AS(jl::make_instance(FiniteVector{}, 1, 1.0, p2, 3), std::invalid_argument);
    CHECK_THROWS_AS(jl::make_instance(FiniteVector{}, 1, 1.0, p2, 0), std::invalid_argument);
    // support too wide for m
    CHECK_THROWS_AS(jl::make_instance(jp::spike(4, p2), 1, 1.0, p2, 4), std::invalid_argument);
    // increments too steep for gamma
    CHECK_THROWS_AS(jl::make_instance(FiniteVector(std::vector<double>{0.0, 5.0}), 1, 1.0, p2, 4),
                    std::invalid_argument);
}

TEST_CASE("main lemma conclusions hold on seeded instances") {
    for (double pv : {1.5, 2.0, 3.0}) {
        const Exponent p(pv);
        for (std::int64_t m : {1, 2}) {
            for (std::int64_t n : {2, 8}) {
                for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                    const auto adm = jl::make_admissible_x(m, 1.0, p, seed);
                    const auto inst = jl::make_instance(adm.x, m, 1.0, p, n);
                    const auto rep = jl::verify_mainlemma(inst);
                    CHECK(rep.support_ok);
                    CHECK(rep.increment_margin >= -1e-9);
                    CHECK(rep.slack_margin >= -1e-9);
                }
            }
        }
    }

    const Exponent p2(2.0);
    const auto adm = jl::make_admissible_x(2, 1.0, p2, 3);
    const auto inst = jl::make_instance(adm.x, 2, 1.0, p2, 8);
    CHECK_THROWS_AS(jl::verify_mainlemma(inst, 10), std::length_error);
}

TEST_CASE("four proof steps hold term by term") {
    for (double pv : {1.5, 2.0, 3.0}) {
        const Exponent p(pv);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto adm = jl::make_admissible_x(2, 1.5, p, seed);
            const auto inst = jl::make_instance(adm.x, 2, 1.5, p, 4);
            const auto t = jl::verify_steps(inst);
            CHECK(t.pass);
            CHECK(t.step1_margin >= -1e-9);
            CHECK(t.step2_margin >= -1e-9);
            CHECK(t.step3_margin >= -1e-9);
            CHECK(t.step4_margin >= -1e-9);

            CHECK(t.A.front() == 0);
            CHECK(t.A.back() == 2 * inst.m * inst.n);
            std::int64_t total = 0;
            for (std::int64_t gap : t.ell) {
                total += gap;
            }
            CHECK(total == 2 * inst.m * inst.n);

            CHECK(t.rho2 == 2.0 * inst.eps_actual);
            CHECK(std::abs(t.rho3 - inst.gamma / std::pow(static_cast<double>(inst.n), pv - 1.0)) <
                  1e-15);

            REQUIRE(t.s.size() == static_cast<std::size_t>(2 * inst.m));
            for (double sk : t.s) {
                if (pv == 2.0) {
                    CHECK(std::abs(sk) <= 1e-12);
                } else if (pv >= 2.0) {
                    CHECK(sk >= -1e-12);
                }
            }
        }
    }
}

TEST_CASE("block excess closed form") {
    const Exponent p2(2.0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto adm = jl::make_admissible_x(2, 1.0, p2, seed);
        const auto inst = jl::make_instance(adm.x, 2, 1.0, p2, 6);
        for (std::int64_t k = 0; k < 4; ++k) {
            CHECK(jl::check_sk_identity(inst, k) <= 1e-10);
        }
    }

    // a flat step makes d_k = 0 and both routes vanish on that block
    const Exponent p3(3.0);
    const double h = 0.2;
    const auto flat = jl::make_instance(FiniteVector(std::vector<double>{h, h}), 1, 1.0, p3, 4);
    CHECK(flat.d[0] == 0.0);
    CHECK(jl::check_sk_identity(flat, 0) <= 1e-12);

    // engineered c = 2*d_k at p = 3
    const double c = std::pow(0.25, 1.0 / 3.0);
    const auto eng = jl::make_instance(FiniteVector(std::vector<double>{0.0, c}), 1, 1.0, p3, 2);
    CHECK(std::abs(eng.d[1] - eng.c / 2.0) < 1e-14);
    CHECK(jl::check_sk_identity(eng, 0) <= 1e-10);
    CHECK(jl::check_sk_identity(eng, 1) <= 1e-10);
    CHECK_THROWS_AS(jl::check_sk_identity(eng, 2), std::invalid_argument);
}

TEST_CASE("scalar inequality: splitting a p-th power") {
    const Exponent p2(2.0);
    CHECK(std::abs(jl::check_ineq1(1.0, 1.0, p2) - 6.0) < 1e-12);
    CHECK(std::abs(jl::check_ineq1(1.0, 1e-6, p2) - 6e-6) < 1e-12);
    CHECK_THROWS_AS(jl::check_ineq1(0.0, 1.0, p2), std::invalid_argument);

    jp::SplitMix64 rng(17);
    for (double pv : {1.1, 1.5, 2.0, 2.5, 3.0, 4.0}) {
        const Exponent p(pv);
        for (int t = 0; t < 200; ++t) {
            const double a = std::pow(10.0, rng.uniform(-6.0, 1.0));
            const double b = std::pow(10.0, rng.uniform(-6.0, 1.0));
            CHECK(jl::check_ineq1(a, b, p) >=
                  -1e-12 * std::max(1.0, std::pow(a + b, pv)));

            // degree-p homogeneity of the margin
            const double lam = rng.uniform(0.5, 2.0);
            const double m1 = jl::check_ineq1(a, b, p);
            const double m2 = jl::check_ineq1(lam * a, lam * b, p);
            CHECK(std::abs(m2 - std::pow(lam, pv) * m1) <=
                  1e-9 * std::max(1.0, std::abs(m2)));
        }
    }
}

TEST_CASE("best constant scan") {
    // the ratio is identically 1 at p = 2; near t = 0 the direct evaluation
    // cancels to ~1e-8 relative, which is what a double can confirm
    CHECK(std::abs(jl::best_constant_scan(Exponent(2.0), 500) - 1.0) < 1e-7);
    const double scan4 = jl::best_constant_scan(Exponent(4.0), 1001);
    CHECK(scan4 >= 7.0 - 1e-9); // t = 1 gives 2^{p-1} - 1 = 7
    CHECK(scan4 <= 16.0);
    for (double pv : {1.1, 1.5, 2.0, 2.5, 3.0, 4.0}) {
        CHECK(jl::best_constant_scan(Exponent(pv), 300) <= std::pow(2.0, pv) * (1.0 + 1e-12));
    }
    CHECK_THROWS_AS(jl::best_constant_scan(Exponent(2.0), 99), std::invalid_argument);
}

TEST_CASE("scalar inequality: convexity of t^{p-1}") {
    const Exponent p2(2.0);
    CHECK(jl::check_ineq2(1.0, p2) == 0.0);
    CHECK(std::abs(jl::check_ineq2(2.0, p2) - 1.0) < 1e-12);
    CHECK(std::abs(jl::check_ineq2(10.0, Exponent(3.0)) - 99.0) < 1e-10);
    CHECK_THROWS_AS(jl::check_ineq2(0.9, p2), std::invalid_argument);

    for (double pv : {1.1, 1.5, 2.0, 2.5, 3.0, 4.0}) {
        const Exponent p(pv);
        for (int i = 0; i < 500; ++i) {
            const double t = 1.0 + 99.0 * i / 499.0;
            CHECK(jl::check_ineq2(t, p) >= -1e-12 * std::max(1.0, std::pow(t, pv)));
        }
    }
}

TEST_CASE("gap-filling identity") {
    const Exponent p(1.5);

    // C = D collapses both sides to zero exactly
    const IndexChain c01 = IndexChain(std::vector<std::int64_t>{0, 1, 4});
    CHECK(jl::check_fillgaps(FiniteVector(std::vector<double>{1, -2, 0.5, 3}), p, {c01}, {c01},
                             {}) == 0.0);
    // zero vector: both sides vanish
    const IndexChain d01 = IndexChain(std::vector<std::int64_t>{0, 4});
    CHECK(jl::check_fillgaps(FiniteVector{}, p, {c01}, {d01}, {}) == 0.0);

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto inst = jl::gen_fillgaps_instance(seed);
        for (double pv : {1.5, 2.0, 3.0}) {
            CHECK(jl::check_fillgaps(inst.v, Exponent(pv), inst.C, inst.D, inst.E) <= 1e-10);
        }
    }

    // min/max mismatches are rejected
    const IndexChain bad = IndexChain(std::vector<std::int64_t>{0, 3});
    CHECK_THROWS_AS(jl::check_fillgaps(FiniteVector{}, p, {c01}, {bad}, {}),
                    std::invalid_argument);
    const IndexChain c2 = IndexChain(std::vector<std::int64_t>{6, 8});
    const IndexChain gap = IndexChain(std::vector<std::int64_t>{4, 5});
    CHECK_THROWS_AS(jl::check_fillgaps(FiniteVector{}, p, {c01, c2}, {c01, c2}, {gap}),
                    std::invalid_argument);
}

TEST_CASE("endpoint replacement inequality") {
    const Exponent p(2.5);

    // c = b_1 and cp = b_ell: the two sides coincide
    const IndexChain b = IndexChain(std::vector<std::int64_t>{1, 3, 5});
    const FiniteVector ramp(std::vector<double>{0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7});
    CHECK(jl::check_endpoints(ramp, p, 1, 5, b) == 0.0);

    // widened endpoints on a linear ramp
    CHECK(jl::check_endpoints(ramp, p, 0, 7, b) >= 0.0);
    // reversed-monotone branch
    CHECK(jl::check_endpoints(-1.0 * ramp, p, 0, 7, b) >= 0.0);

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto inst = jl::gen_endpoints_instance(seed);
        for (double pv : {1.5, 2.0, 3.0}) {
            const Exponent pp(pv);
            const double scale = std::max(
                1.0, jp::nu_p_power(inst.v, IndexChain(std::vector<std::int64_t>{inst.c, inst.cp}),
                                    pp));
            CHECK(jl::check_endpoints(inst.v, pp, inst.c, inst.cp, inst.B) >= -1e-12 * scale);
        }
    }

    // not monotone-configured
    const FiniteVector bump(std::vector<double>{0, 1, -1, 1, 0, 2});
    CHECK_THROWS_AS(jl::check_endpoints(bump, p, 0, 5, IndexChain(std::vector<std::int64_t>{1, 2, 3})),
                    std::invalid_argument);
    // too few points
    CHECK_THROWS_AS(jl::check_endpoints(ramp, p, 0, 7, IndexChain(std::vector<std::int64_t>{1, 3})),
                    std::invalid_argument);
}

TEST_CASE("phi is the single source of the slack bound") {
    // verify_mainlemma's slack cap must match construction's phi exactly
    const Exponent p(1.5);
    const auto adm = jl::make_admissible_x(1, 1.0, p, 2);
    const auto inst = jl::make_instance(adm.x, 1, 1.0, p, 4);
    const auto rep = jl::verify_mainlemma(inst);
    const double slack = jp::jp_norm_exact(inst.w, p).power -
                         jp::nu_p_power(inst.w, IndexChain::interval(0, 8), p);
    CHECK(std::abs((2.0 * inst.eps_actual + inst.gamma * jp::construct::phi(1, 4, p) - slack) -
                   rep.slack_margin) < 1e-15);
}
