#include "gw/em_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gw {

Medium::Medium(double eps_r, double sigma, double mu)
    : eps_r_(eps_r), sigma_(sigma), mu_(mu) {
    if (!(eps_r >= 1.0))
        throw std::invalid_argument("Medium: eps_r must be >= 1, got " + std::to_string(eps_r));
    if (!(sigma >= 0.0))
        throw std::invalid_argument("Medium: sigma must be >= 0, got " + std::to_string(sigma));
    if (!(mu > 0.0))
        throw std::invalid_argument("Medium: mu must be > 0, got " + std::to_string(mu));
}

Complex Medium::complex_permittivity(double omega) const {
    return {eps_r_, sigma_ / (omega * constants::eps0)};
}

Geometry::Geometry(double x0_, double x_, double rho_) : x0(x0_), x(x_), rho(rho_) {
    if (!(x0 > 0.0))
        throw std::invalid_argument("Geometry: dipole height x0 must be > 0");
    if (!(x >= 0.0))
        throw std::invalid_argument("Geometry: observer height x must be >= 0");
    if (!(rho > 0.0))
        throw std::invalid_argument("Geometry: horizontal distance rho must be > 0");
}

DerivedGeometry derived_geometry(const Geometry& g) {
    DerivedGeometry d{};
    d.r1 = std::hypot(g.rho, g.x - g.x0);
    d.r2 = std::hypot(g.rho, g.x + g.x0);
    // atan2 forms are better conditioned near grazing than acos(h/r).
    d.theta1 = std::atan2(g.rho, g.x - g.x0);
    d.theta2 = std::atan2(g.rho, g.x + g.x0);
    d.phi = constants::pi / 2.0 - d.theta2;
    return d;
}

Source::Source(double current, double length) : current_(current), length_(length) {
    if (!(current > 0.0))
        throw std::invalid_argument("Source: current must be > 0");
    if (!(length > 0.0))
        throw std::invalid_argument("Source: length must be > 0");
}

Complex Source::moment(double omega) const {
    // I*dl = -i*w*p  =>  p = i*I*dl/w
    return Complex{0.0, current_ * length_ / omega};
}

Scenario::Scenario(Source source, Geometry geometry, Medium ground, double frequency)
    : source_(source), geometry_(geometry), ground_(ground), frequency_(frequency) {
    if (!(frequency > 0.0))
        throw std::invalid_argument("Scenario: frequency must be > 0");
    omega_ = 2.0 * constants::pi * frequency_;
    k01_ = omega_ / constants::c0;
    eps2_ = ground_.complex_permittivity(omega_);
    // Principal branch keeps Im(k02) >= 0: decay into the lossy half-space.
    k02_ = omega_ * std::sqrt(ground_.mu() * constants::eps0 * eps2_);
    if (k02_.imag() < 0.0) k02_ = -k02_;
    moment_ = source_.moment(omega_);
}

bool Scenario::hertzian_ok() const { return k01_ * source_.length() < 0.1; }

Scenario Scenario::with_frequency(double f) const {
    return Scenario(source_, geometry_, ground_, f);
}

Scenario Scenario::with_rho(double rho) const {
    return Scenario(source_, Geometry(geometry_.x0, geometry_.x, rho), ground_, frequency_);
}

Scenario Scenario::with_geometry(const Geometry& g) const {
    return Scenario(source_, g, ground_, frequency_);
}

Wavenumbers wavenumbers(const Scenario& s) { return {s.k01(), s.k02()}; }

double delta(const Scenario& s) {
    const double sigma = s.ground().sigma();
    if (!(sigma > 0.0))
        throw RegimeError("delta: etalon regime requires sigma >> omega*eps0 (sigma = 0)");
    return std::sqrt(s.omega() * constants::eps0 / (2.0 * sigma));
}

bool asymptotic_regime_ok(const Scenario& s) { return delta(s) < 0.1; }

double numerical_distance(const Scenario& s) {
    const double d = delta(s);
    return s.k01() * s.geometry().rho * d * d;
}

} // namespace gw
