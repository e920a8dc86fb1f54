#include "jp/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jp {

Exponent::Exponent(double p) : p_(p) {
    if (!std::isfinite(p) || p <= 1.0) {
        throw std::invalid_argument("exponent p must be a finite real > 1");
    }
}

double Exponent::power(double u) const noexcept {
    u = std::abs(u);
    return is_two() ? u * u : std::pow(u, p_);
}

double Exponent::root(double u) const noexcept {
    return is_two() ? std::sqrt(u) : std::pow(u, 1.0 / p_);
}

FiniteVector::FiniteVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double v : coeffs_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("vector entries must be finite");
        }
    }
    while (!coeffs_.empty() && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
}

FiniteVector FiniteVector::basis(std::int64_t m) {
    if (m < 0) {
        throw std::invalid_argument("basis index must be non-negative");
    }
    std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
    c.back() = 1.0;
    return FiniteVector(std::move(c));
}

FiniteVector operator+(const FiniteVector& a, const FiniteVector& b) {
    const std::int64_t n = std::max(a.support_length(), b.support_length());
    std::vector<double> c(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = a.at(i) + b.at(i);
    }
    return FiniteVector(std::move(c));
}

FiniteVector operator-(const FiniteVector& a, const FiniteVector& b) {
    return a + (-1.0 * b);
}

FiniteVector operator-(const FiniteVector& a) { return -1.0 * a; }

FiniteVector operator*(double scale, const FiniteVector& a) {
    std::vector<double> c = a.coeffs();
    for (double& v : c) {
        v *= scale;
    }
    return FiniteVector(std::move(c));
}

FiniteVector linear_combination(const std::vector<FiniteVector>& xs,
                                const std::vector<double>& coeffs) {
    if (xs.size() != coeffs.size()) {
        throw std::invalid_argument("linear_combination: size mismatch");
    }
    std::int64_t n = 0;
    for (const auto& x : xs) {
        n = std::max(n, x.support_length());
    }
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::int64_t j = 0; j < xs[i].support_length(); ++j) {
            c[static_cast<std::size_t>(j)] += coeffs[i] * xs[i].at(j);
        }
    }
    return FiniteVector(std::move(c));
}

IndexChain::IndexChain(std::vector<std::int64_t> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0) {
            throw std::invalid_argument("chain indices must be non-negative");
        }
        if (i > 0 && indices_[i] <= indices_[i - 1]) {
            throw std::invalid_argument("chain indices must be strictly increasing");
        }
    }
}

IndexChain IndexChain::interval(std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || hi < lo) {
        throw std::invalid_argument("interval: need 0 <= lo <= hi");
    }
    std::vector<std::int64_t> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) {
        v.push_back(i);
    }
    return IndexChain(std::move(v));
}

IndexChain IndexChain::multiples(std::int64_t step, std::int64_t hi) {
    if (step <= 0 || hi < 0) {
        throw std::invalid_argument("multiples: need step > 0 and hi >= 0");
    }
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i <= hi; i += step) {
        v.push_back(i);
    }
    return IndexChain(std::move(v));
}

IndexChain IndexChain::unioned(const IndexChain& other) const {
    std::vector<std::int64_t> v;
    v.reserve(indices_.size() + other.indices_.size());
    std::merge(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
               std::back_inserter(v));
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return IndexChain(std::move(v));
}

IndexChain IndexChain::with(std::int64_t index) const {
    std::vector<std::int64_t> one{index};
    return unioned(IndexChain(std::move(one)));
}

GpElement::GpElement(std::vector<std::vector<double>> blocks) : blocks_(std::move(blocks)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].size() != i + 1) {
            throw std::invalid_argument("block i of a GpElement must have exactly i+1 entries");
        }
        for (double v : blocks_[i]) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("block entries must be finite");
            }
        }
    }
}

} // namespace jp
