#ifndef GW_EM_CORE_HPP
#define GW_EM_CORE_HPP

#include <complex>

#include "gw/constants.hpp"
#include "gw/errors.hpp"

namespace gw {

using Complex = std::complex<double>;

// Lossy half-space below the interface. The upper medium is always free
// space (eps_r = 1, lossless). Time convention e^{-i w t}, so the complex
// relative permittivity is eps_r + i*sigma/(w*eps0).
class Medium {
public:
    Medium(double eps_r, double sigma, double mu = constants::mu0);

    double eps_r() const { return eps_r_; }
    double sigma() const { return sigma_; }
    double mu() const { return mu_; }

    Complex complex_permittivity(double omega) const;

private:
    double eps_r_;
    double sigma_;
    double mu_;
};

// Vertical dipole at height x0 above the interface, observer at height x
// and horizontal distance rho. x is allowed to be 0 (observer on the
// ground); rho and x0 must be positive.
struct Geometry {
    Geometry(double x0, double x, double rho);

    double x0;
    double x;
    double rho;
};

// Distances and angles derived from a Geometry:
//   r1     source-to-observer distance
//   r2     image-to-observer distance
//   theta1 polar angle at the source, measured from the vertical axis
//   theta2 incidence angle at the specular point (polar angle at the image)
//   phi    grazing angle, pi/2 - theta2
struct DerivedGeometry {
    double r1;
    double r2;
    double theta1;
    double theta2;
    double phi;
};

DerivedGeometry derived_geometry(const Geometry& g);

// Electrically short current element. The dipole moment follows the
// current-moment convention I*dl = -i*w*p, i.e. p = i*I*(2h)/w, so
// |p| = I*(2h)/w. All fields are linear in p; magnitude ratios between
// solver paths are independent of this convention.
class Source {
public:
    Source(double current, double length);

    double current() const { return current_; }
    double length() const { return length_; }

    Complex moment(double omega) const;

private:
    double current_;
    double length_;
};

// One fully specified field evaluation: source, geometry, ground and
// frequency. Immutable after construction; safe to share across threads.
class Scenario {
public:
    Scenario(Source source, Geometry geometry, Medium ground, double frequency);

    const Source& source() const { return source_; }
    const Geometry& geometry() const { return geometry_; }
    const Medium& ground() const { return ground_; }
    double frequency() const { return frequency_; }

    double omega() const { return omega_; }
    double k01() const { return k01_; }
    Complex k02() const { return k02_; }
    double wavelength() const { return 2.0 * constants::pi / k01_; }

    // Complex relative permittivity of the ground at this frequency.
    Complex ground_permittivity() const { return eps2_; }

    Complex dipole_moment() const { return moment_; }

    // Electrically-short check, k01 * length < 0.1. Reported as a validity
    // flag rather than enforced: the swept frequency ranges of interest
    // cross the boundary while every solver stays linear in the moment.
    bool hertzian_ok() const;

    Scenario with_frequency(double f) const;
    Scenario with_rho(double rho) const;
    Scenario with_geometry(const Geometry& g) const;

private:
    Source source_;
    Geometry geometry_;
    Medium ground_;
    double frequency_;

    double omega_;
    double k01_;
    Complex k02_;
    Complex eps2_;
    Complex moment_;
};

struct Wavenumbers {
    double k01;   // free-space wavenumber, rad/m
    Complex k02;  // ground wavenumber, rad/m, Im >= 0
};

Wavenumbers wavenumbers(const Scenario& s);

// delta = sqrt(w*eps0*eps1 / (2*sigma)), the small loss parameter of the
// asymptotic solution. Throws RegimeError for sigma == 0.
double delta(const Scenario& s);

// True when delta < 0.1, i.e. the ground is a good conductor at this
// frequency and the asymptotic machinery applies.
bool asymptotic_regime_ok(const Scenario& s);

// Numerical distance k01 * rho * delta^2; grows with f^2 at fixed geometry.
double numerical_distance(const Scenario& s);

} // namespace gw

#endif
