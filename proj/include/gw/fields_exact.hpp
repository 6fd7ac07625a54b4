#ifndef GW_FIELDS_EXACT_HPP
#define GW_FIELDS_EXACT_HPP

#include <cstdint>
#include <optional>

#include "gw/em_core.hpp"
#include "gw/quadrature.hpp"

namespace gw {

// Electric field at the observer in cylindrical components. The problem is
// rotationally symmetric about the dipole axis, so there is no phi component.
struct CylindricalFieldVector {
    Complex e_rho{};
    Complex e_x{};

    CylindricalFieldVector& operator+=(const CylindricalFieldVector& o) {
        e_rho += o.e_rho;
        e_x += o.e_x;
        return *this;
    }
    CylindricalFieldVector& operator-=(const CylindricalFieldVector& o) {
        e_rho -= o.e_rho;
        e_x -= o.e_x;
        return *this;
    }
    friend CylindricalFieldVector operator+(CylindricalFieldVector a,
                                            const CylindricalFieldVector& b) {
        return a += b;
    }
    friend CylindricalFieldVector operator-(CylindricalFieldVector a,
                                            const CylindricalFieldVector& b) {
        return a -= b;
    }
    friend CylindricalFieldVector operator*(const Complex& s, const CylindricalFieldVector& v) {
        return {s * v.e_rho, s * v.e_x};
    }
    double magnitude() const { return std::sqrt(std::norm(e_rho) + std::norm(e_x)); }
};

// Result of a solver path that runs quadrature, with its cost metadata.
struct FieldSolution {
    CylindricalFieldVector field{};
    std::int64_t evals = 0;
    double wall_time = 0.0;
    std::optional<double> xi_max{};
};

struct FieldBreakdown {
    CylindricalFieldVector los{};
    CylindricalFieldVector scattered{};
    CylindricalFieldVector total{};        // los + scattered, exact by construction
    CylindricalFieldVector space_wave{};   // los + Fresnel-weighted image field
    CylindricalFieldVector surface_wave{}; // total - space_wave
    std::int64_t evals = 0;
    double wall_time = 0.0;
};

// Plane-wave reflection coefficient for vertical polarization, parameterized
// by the propagating-spectrum angle xi in [-pi/2, pi/2]. Even in xi;
// R(pi/2) = -1 for any ground.
Complex reflection_coeff(double xi, const Scenario& s);

// Analytic continuation of the same coefficient to complex xi (used to
// locate its pole; not on any solver path).
Complex reflection_coeff(Complex xi, const Scenario& s);

// Reflection coefficient on the evanescent-spectrum branch, xi >= 0.
// Continuous with the propagating branch: R'(0) = R(pi/2) = -1.
Complex reflection_coeff_hyperbolic(double xi, const Scenario& s);

// Closed-form free-space dipole field evaluated at distance r and polar
// angle theta from the source's vertical axis, expressed in cylindrical
// components. Exact, near field included.
CylindricalFieldVector free_space_dipole_field(const Scenario& s, double r, double theta);

// Direct (line-of-sight) field from the closed form.
CylindricalFieldVector los_closed_form(const Scenario& s);

// Direct field by quadrature of its spectral representation: a finite
// integral over the propagating spectrum plus a fast-decaying semi-infinite
// integral over the evanescent spectrum. Validation path for the closed
// form; requires x != x0.
FieldSolution los_numeric(const Scenario& s, const QuadratureSpec& spec);

// Ground-scattered field by quadrature of the reflection-weighted spectral
// representation. Depends on the height sum x + x0, as if radiated from the
// image point.
FieldSolution scattered_numeric(const Scenario& s, const QuadratureSpec& spec);

// Space wave: closed-form direct field plus the image-source field weighted
// by the Fresnel coefficient at the specular angle.
CylindricalFieldVector space_wave_fresnel(const Scenario& s);

FieldBreakdown field_breakdown(const Scenario& s, const QuadratureSpec& spec);

// Legacy spectral-domain formulation on the wavenumber axis, with
// Hankel-function kernels and integrable singularities at k_rho = 0 and
// +-k01. Kept as an opt-in reference: symmetric intervals of half-width
// exclusion_half_width_frac * k01 are removed around the singular points,
// which visibly degrades the result. Not a production path.
struct NaiveOptions {
    double exclusion_half_width_frac = 1e-3;
    double tail_decay = 40.0; // integration extends until exp decay reaches e^{-tail_decay}
};

FieldSolution scattered_naive(const Scenario& s, const QuadratureSpec& spec,
                              const NaiveOptions& opt);

} // namespace gw

#endif
