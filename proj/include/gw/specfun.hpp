#ifndef GW_SPECFUN_HPP
#define GW_SPECFUN_HPP

#include <complex>

namespace gw {

// Zero-order Bessel function of the first kind, x >= 0.
// Absolute error below 1e-12 over [0, 1e6].
double bessel_j0(double x);

// First-order Bessel function of the first kind, x >= 0, same accuracy.
// Kernel of the exact radial-component spectral representation.
double bessel_j1(double x);

// Zero-order Bessel function of the second kind, x > 0. Used only by the
// legacy spectral-domain path (Hankel-function kernels); accurate to
// roughly 1e-10, which is far below that path's intrinsic accuracy.
double bessel_y0(double x);

// Error function of a complex argument, relative error <= 1e-10 wherever
// the value is representable in double. Satisfies erf(-z) = -erf(z) and
// erf(conj z) = conj(erf(z)) exactly by construction. Throws
// std::domain_error for |Im z| > 30.
std::complex<double> erf_complex(std::complex<double> z);

} // namespace gw

#endif
