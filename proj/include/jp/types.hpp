#pragma once

#include <cstdint>
#include <vector>

namespace jp {

/// The exponent p of the space. Valid range is p > 1; everything in the
/// library takes the exponent through this type so the range check happens
/// exactly once.
class Exponent {
public:
    explicit Exponent(double p);

    double value() const noexcept { return p_; }
    bool is_two() const noexcept { return p_ == 2.0; }

    /// |u|^p with a fast path for p = 2 (the dominant case in large sweeps).
    double power(double u) const noexcept;

    /// u^{1/p} for u >= 0.
    double root(double u) const noexcept;

private:
    double p_;
};

/// A finitely supported real sequence indexed from 0. Entry n is coeffs[n]
/// for n < L and 0 beyond. Kept canonical: trailing zeros are trimmed on
/// construction, so support_length() and equality are well defined.
class FiniteVector {
public:
    FiniteVector() = default;
    explicit FiniteVector(std::vector<double> coeffs);

    /// Basis vector e_m.
    static FiniteVector basis(std::int64_t m);

    /// x(n); reads 0 outside the stored support.
    double at(std::int64_t n) const noexcept {
        return (n >= 0 && static_cast<std::size_t>(n) < coeffs_.size())
                   ? coeffs_[static_cast<std::size_t>(n)]
                   : 0.0;
    }

    std::int64_t support_length() const noexcept {
        return static_cast<std::int64_t>(coeffs_.size());
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const FiniteVector&, const FiniteVector&) = default;

private:
    std::vector<double> coeffs_;
};

FiniteVector operator+(const FiniteVector& a, const FiniteVector& b);
FiniteVector operator-(const FiniteVector& a, const FiniteVector& b);
FiniteVector operator-(const FiniteVector& a);
FiniteVector operator*(double scale, const FiniteVector& a);

/// Sum of coeffs[i] * xs[i]. Evaluation order is fixed (ascending i), so the
/// result does not depend on how callers batch their work.
FiniteVector linear_combination(const std::vector<FiniteVector>& xs,
                                const std::vector<double>& coeffs);

/// A strictly increasing set of non-negative indices. Empty and singleton
/// chains are allowed; the chain functional assigns them the value 0.
class IndexChain {
public:
    IndexChain() = default;
    explicit IndexChain(std::vector<std::int64_t> indices);

    /// {lo, lo+1, ..., hi}.
    static IndexChain interval(std::int64_t lo, std::int64_t hi);
    /// {0, step, 2*step, ...} up to and including hi (assumes step | hi).
    static IndexChain multiples(std::int64_t step, std::int64_t hi);

    /// Sorted union with another chain.
    IndexChain unioned(const IndexChain& other) const;
    /// Chain with one extra index adjoined (no-op if already present).
    IndexChain with(std::int64_t index) const;

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    const std::vector<std::int64_t>& indices() const noexcept { return indices_; }
    std::int64_t front() const { return indices_.front(); }
    std::int64_t back() const { return indices_.back(); }

    friend bool operator==(const IndexChain&, const IndexChain&) = default;

private:
    std::vector<std::int64_t> indices_;
};

/// Result of a norm computation: the norm, its p-th power, and a chain that
/// attains it (empty for the zero vector).
struct NormResult {
    double value = 0.0;
    double power = 0.0;
    IndexChain argmax_chain;
};

/// An element of the l_p-sum of the spaces l_infty^n, n = 1, 2, ...
/// Block i (0-based) is the component in l_infty^{i+1} and must have exactly
/// i+1 entries.
class GpElement {
public:
    GpElement() = default;
    explicit GpElement(std::vector<std::vector<double>> blocks);

    const std::vector<std::vector<double>>& blocks() const noexcept { return blocks_; }

private:
    std::vector<std::vector<double>> blocks_;
};

/// An element of the l_p-sum of initial segments of the space: a finite list
/// of finitely supported components. Each component lives in the segment
/// spanned by its own support, so the norm does not depend on where in the
/// sum a block is placed; placement is therefore not tracked.
class JpInftyElement {
public:
    JpInftyElement() = default;
    explicit JpInftyElement(std::vector<FiniteVector> blocks) : blocks_(std::move(blocks)) {}

    const std::vector<FiniteVector>& blocks() const noexcept { return blocks_; }

private:
    std::vector<FiniteVector> blocks_;
};

} // namespace jp
