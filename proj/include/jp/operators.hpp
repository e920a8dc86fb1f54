#pragma once

#include "jp/types.hpp"

namespace jp {

/// The spiky unit vector z_{2k}: value (2k)^{-1/p} on the odd indices
/// 1, 3, ..., 2k-1 and zero elsewhere. Support length is exactly 2k.
FiniteVector spike(std::int64_t k, Exponent p);

/// Stretch operator T_n: places x(k) at index k*n and fills the gaps by
/// linear interpolation. Isometric for every n >= 1.
FiniteVector stretch(const FiniteVector& x, std::int64_t n);

/// The (n+2)-fold right shift R_n: (R_n x)(k+n+2) = x(k).
FiniteVector right_shift(const FiniteVector& x, std::int64_t n);

} // namespace jp
