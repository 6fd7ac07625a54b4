#ifndef GW_ASYMPTOTICS_HPP
#define GW_ASYMPTOTICS_HPP

#include "gw/em_core.hpp"
#include "gw/fields_exact.hpp"

namespace gw {

// Pole of the vertical-polarization reflection coefficient in the complex
// angle plane, in the good-conductor approximation, together with its offset
// from the specular angle.
struct PoleData {
    Complex xi_p{};   // pole location; Re >= pi/2, Im < 0
    Complex zeta_p{}; // xi_p - theta2
};

// Good-conductor approximation of the reflection-coefficient pole. Requires
// sigma >= regime_factor * omega * eps0; throws RegimeError otherwise,
// naming the actual ratio.
PoleData pole_xi_p(const Scenario& s, double regime_factor = 10.0);

// Etalon integral X(k, alpha) = -sgn(Re alpha)/2 + erf(sqrt(-2ik) sin(alpha/2))/2
// with the branch sqrt(-2ik) = sqrt(2k) e^{-i pi/4}. Arguments whose erf
// operand leaves the overflow guard are evaluated through the asymptotic
// continuation of erf along the diagonal rays, where the value stays O(1).
// Throws for k <= 0 and for Re(alpha) == 0 (sign ambiguity).
Complex etalon_X(double k, Complex alpha);

// Large-argument form of the etalon integral, valid for
// sqrt(2k)|sin(alpha/2)| >> 1. `condition` reports that parameter and
// `valid` clears when it drops below 3.
struct EtalonApprox {
    Complex value{};
    double condition = 0.0;
    bool valid = false;
};

EtalonApprox etalon_X_large_arg(double k, Complex alpha);

// Small-argument (linearized) form, valid for k|alpha|^2/2 < 1; throws
// RegimeError outside that region.
Complex etalon_X_small_arg(double k, Complex alpha);

// Scattered field from the pole-corrected saddle-point evaluation of the
// spectral integral. The etalon integral repairs the plain geometric-optics
// result when the reflection pole approaches the saddle (grazing incidence
// over a good conductor).
CylindricalFieldVector etalon_scattered(const Scenario& s, double regime_factor = 10.0);

// Geometric-optics reflected field (stationary-phase result): the image-point
// radiation field weighted by the Fresnel coefficient. `condition` is
// sqrt(k01 r2) sin(phi/2); `condition_printed` the variant with the extra
// factor 2 under the root. Accuracy requires the condition parameter >> 1.
struct SpmResult {
    CylindricalFieldVector field{};
    double condition = 0.0;
    double condition_printed = 0.0;
};

SpmResult spm_reflected(const Scenario& s);

// Near-interface limit of the pole-corrected scattered field: a vertically
// polarized wave confined to the interface by exp(-delta k01 (x + x0)),
// meaningful while the numerical distance k01 rho delta^2 stays below 1.
// The guards are configurable so the breakdown beyond the nominal regime can
// be mapped.
struct PseudoSurfaceOptions {
    double nd_limit = 1.0;
    double grazing_limit_deg = 5.0;
};

struct PseudoSurfaceResult {
    CylindricalFieldVector field{};
    double delta = 0.0;
    double numerical_distance = 0.0;
    double grazing_deg = 0.0;
};

PseudoSurfaceResult pseudo_surface_wave(const Scenario& s, const PseudoSurfaceOptions& opt = {});

} // namespace gw

#endif
