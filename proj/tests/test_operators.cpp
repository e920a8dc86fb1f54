#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jp/norms.hpp"
#include "jp/operators.hpp"
#include "jp/rng.hpp"

using jp::Exponent;
using jp::FiniteVector;

TEST_CASE("spike vectors") {
    const Exponent p2(2.0);
    const FiniteVector z2 = jp::spike(1, p2);
    CHECK(z2.support_length() == 2);
    CHECK(z2.at(0) == 0.0);
    CHECK(std::abs(z2.at(1) - std::pow(2.0, -0.5)) < 1e-15);

    const FiniteVector z4 = jp::spike(2, p2);
    CHECK(z4.support_length() == 4);
    CHECK(std::abs(z4.at(1) - 0.5) < 1e-15);
    CHECK(z4.at(2) == 0.0);
    CHECK(std::abs(z4.at(3) - 0.5) < 1e-15);

    CHECK_THROWS_AS(jp::spike(0, p2), std::invalid_argument);

    for (double pv : {1.1, 1.5, 2.0, 2.5, 3.0, 4.0}) {
        const Exponent p(pv);
        for (std::int64_t k : {1, 2, 7, 16}) {
            CHECK(jp::spike(k, p).support_length() == 2 * k);
            CHECK(std::abs(jp::jp_norm_exact(jp::spike(k, p), p).value - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("stretch operator") {
    const Exponent p2(2.0);
    const FiniteVector z2 = jp::spike(1, p2);
    CHECK(jp::stretch(z2, 1) == z2);
    CHECK_THROWS_AS(jp::stretch(z2, 0), std::invalid_argument);

    const FiniteVector s = jp::stretch(z2, 2);
    CHECK(s.support_length() == 4);
    CHECK(s.at(0) == 0.0);
    CHECK(std::abs(s.at(1) - std::pow(2.0, -1.5)) < 1e-15);
    CHECK(std::abs(s.at(2) - std::pow(2.0, -0.5)) < 1e-15);
    CHECK(std::abs(s.at(3) - std::pow(2.0, -1.5)) < 1e-15);
}

TEST_CASE("stretch is an isometry") {
    jp::SplitMix64 rng(42);
    for (double pv : {1.5, 2.0, 3.0}) {
        const Exponent p(pv);
        for (std::int64_t n : {2, 3, 4, 5, 6}) {
            for (int t = 0; t < 8; ++t) {
                std::vector<double> c(static_cast<std::size_t>(rng.uniform_int(1, 10)));
                for (double& v : c) {
                    v = rng.uniform(-2.0, 2.0);
                }
                const FiniteVector x(std::move(c));
                const double before = jp::jp_norm_exact(x, p).value;
                const double after = jp::jp_norm_exact(jp::stretch(x, n), p).value;
                CHECK(std::abs(before - after) <= 1e-10 * std::max(1.0, before));
            }
        }
    }
}

TEST_CASE("right shift") {
    const Exponent p2(2.0);
    CHECK(jp::right_shift(FiniteVector::basis(0), 0) == FiniteVector::basis(2));
    CHECK_THROWS_AS(jp::right_shift(FiniteVector::basis(0), -1), std::invalid_argument);

    for (double pv : {1.5, 2.0, 3.0}) {
        const Exponent p(pv);
        // the bound 2^{1/p} is attained on e_0
        const double e0 = jp::jp_norm_exact(FiniteVector::basis(0), p).value;
        const double shifted = jp::jp_norm_exact(jp::right_shift(FiniteVector::basis(0), 0), p).value;
        CHECK(std::abs(shifted / e0 - std::pow(2.0, 1.0 / pv)) < 1e-12);
    }

    jp::SplitMix64 rng(5);
    const Exponent p(2.0);
    for (int t = 0; t < 40; ++t) {
        std::vector<double> c(static_cast<std::size_t>(rng.uniform_int(1, 10)));
        for (double& v : c) {
            v = rng.uniform(-2.0, 2.0);
        }
        const FiniteVector x(std::move(c));
        if (x.is_zero()) {
            continue;
        }
        const double nx = jp::jp_norm_exact(x, p).value;
        const double ns = jp::jp_norm_exact(jp::right_shift(x, rng.uniform_int(0, 4)), p).value;
        const double ratio = ns / nx;
        CHECK(ratio >= 1.0 - 1e-12);
        CHECK(ratio <= std::pow(2.0, 0.5) + 1e-12);
    }
}
