#pragma once

#include <complex>

#include "radica/field.hpp"

namespace radica {

/// Principal square root: nonnegative real part, and +i*sqrt(|z|) on the
/// negative real axis regardless of the sign of a zero imaginary part.
ComplexD csqrt_principal(ComplexD z);

/// Principal cube root: argument in (-pi/3, pi/3]. For negative reals this is
/// not the real cube root (ccbrt_principal(-8) = 1 + i*sqrt(3)).
ComplexD ccbrt_principal(ComplexD z);

/// |x - y| <= tol * max(1, |x|, |y|).
bool approx_eq(ComplexD x, ComplexD y, double tol);

/// Double-precision complex field with principal-branch roots.
/// is_zero treats |z| <= zero_tol as zero; inverse rejects only exact zero.
FieldCapabilities<ComplexD> complex_capabilities(double zero_tol = 1e-12);

}  // namespace radica
