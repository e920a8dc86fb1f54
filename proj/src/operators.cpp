#include "jp/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace jp {

FiniteVector spike(std::int64_t k, Exponent p) {
    if (k < 1) {
        throw std::invalid_argument("spike: k must be >= 1");
    }
    const double value = std::pow(2.0 * static_cast<double>(k), -1.0 / p.value());
    std::vector<double> c(static_cast<std::size_t>(2 * k), 0.0);
    for (std::int64_t j = 1; j <= k; ++j) {
        c[static_cast<std::size_t>(2 * j - 1)] = value;
    }
    return FiniteVector(std::move(c));
}

FiniteVector stretch(const FiniteVector& x, std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("stretch: n must be >= 1");
    }
    const std::int64_t len = x.support_length();
    std::vector<double> c(static_cast<std::size_t>(len * n), 0.0);
    for (std::int64_t k = 0; k < len; ++k) {
        const double lo = x.at(k);
        const double hi = x.at(k + 1);
        for (std::int64_t r = 0; r < n; ++r) {
            c[static_cast<std::size_t>(k * n + r)] =
                lo + (static_cast<double>(r) / static_cast<double>(n)) * (hi - lo);
        }
    }
    return FiniteVector(std::move(c));
}

FiniteVector right_shift(const FiniteVector& x, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("right_shift: n must be >= 0");
    }
    const std::int64_t pad = n + 2;
    std::vector<double> c(static_cast<std::size_t>(x.support_length() + pad), 0.0);
    for (std::int64_t k = 0; k < x.support_length(); ++k) {
        c[static_cast<std::size_t>(k + pad)] = x.at(k);
    }
    return FiniteVector(std::move(c));
}

} // namespace jp
