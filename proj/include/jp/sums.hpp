#pragma once

#include <cmath>

namespace jp {

/// Kahan-Babuska (Neumaier) compensated accumulator. Long chain-functional
/// sums can run to ~10^4 terms; plain accumulation would eat two or three of
/// the digits the tolerances in this project care about.
class KahanSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace jp
