#include "gw/asymptotics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gw/specfun.hpp"

namespace gw {

namespace {

using constants::eps0;
using constants::pi;

constexpr Complex kI{0.0, 1.0};

Complex expi(double t) { return {std::cos(t), std::sin(t)}; }

} // namespace

PoleData pole_xi_p(const Scenario& s, double regime_factor) {
    const double sigma = s.ground().sigma();
    const double weps = s.omega() * eps0;
    if (!(sigma >= regime_factor * weps)) {
        std::ostringstream os;
        os << "pole_xi_p: requires sigma >= " << regime_factor
           << " * omega*eps0; sigma/(omega*eps0) = " << (sigma / weps);
        throw RegimeError(os.str());
    }
    const double d = delta(s);
    // small real correction omega*eps0*(eps1 + eps_r)/(2 sigma)
    const double corr = weps * (1.0 + s.ground().eps_r()) / (2.0 * sigma);
    const Complex xi_p = pi / 2.0 + d * Complex{1.0 + corr, -(1.0 - corr)};
    const auto dg = derived_geometry(s.geometry());
    return {xi_p, xi_p - dg.theta2};
}

Complex etalon_X(double k, Complex alpha) {
    if (!(k > 0.0)) throw std::invalid_argument("etalon_X: k must be > 0");
    if (alpha.real() == 0.0)
        throw std::domain_error("etalon_X: Re(alpha) = 0 leaves the sign branch undefined");
    const double sgn = (alpha.real() > 0.0) ? 1.0 : -1.0;
    const Complex z = std::sqrt(2.0 * k) * std::polar(1.0, -pi / 4.0) * std::sin(0.5 * alpha);

    if (std::abs(z.imag()) <= 28.0) return -0.5 * sgn + 0.5 * erf_complex(z);

    // Outside the erf guard the argument sits on a near-diagonal ray where
    // the function stays O(1); use the asymptotic continuation there.
    if (std::abs(z.real()) < 10.0)
        throw std::domain_error("etalon_X: erf argument in the overflow region");
    const double sig = (z.real() > 0.0) ? 1.0 : -1.0;
    const Complex inv2z2 = 1.0 / (2.0 * z * z);
    Complex term{1.0, 0.0};
    Complex series{1.0, 0.0};
    for (int m = 1; m <= 12; ++m) {
        term *= -(2.0 * m - 1.0) * inv2z2;
        series += term;
    }
    const Complex erf_val = sig - std::exp(-z * z) / (std::sqrt(pi) * z) * series;
    return -0.5 * sgn + 0.5 * erf_val;
}

EtalonApprox etalon_X_large_arg(double k, Complex alpha) {
    if (!(k > 0.0)) throw std::invalid_argument("etalon_X_large_arg: k must be > 0");
    const Complex sh = std::sin(0.5 * alpha);
    if (std::abs(sh) == 0.0)
        throw std::invalid_argument("etalon_X_large_arg: sin(alpha/2) = 0 is singular");
    const double condition = std::sqrt(2.0 * k) * std::abs(sh);
    if (!(condition > 1.0)) {
        std::ostringstream os;
        os << "etalon_X_large_arg: sqrt(2k)|sin(alpha/2)| = " << condition << " <= 1";
        throw RegimeError(os.str());
    }
    const Complex root_i_over_2pi = std::polar(1.0 / std::sqrt(2.0 * pi), pi / 4.0);
    const Complex value =
        -root_i_over_2pi * std::exp(kI * k * (1.0 - std::cos(alpha))) / (2.0 * std::sqrt(k) * sh);
    return {value, condition, condition >= 3.0};
}

Complex etalon_X_small_arg(double k, Complex alpha) {
    if (!(k > 0.0)) throw std::invalid_argument("etalon_X_small_arg: k must be > 0");
    const double ka2 = 0.5 * k * std::norm(alpha);
    if (!(ka2 < 1.0)) {
        std::ostringstream os;
        os << "etalon_X_small_arg: k*|alpha|^2/2 = " << ka2 << " >= 1";
        throw RegimeError(os.str());
    }
    if (alpha.real() == 0.0)
        throw std::domain_error("etalon_X_small_arg: Re(alpha) = 0 leaves the sign undefined");
    const double sgn = (alpha.real() > 0.0) ? 1.0 : -1.0;
    const Complex c = std::polar(std::sqrt(k / (2.0 * pi)), -pi / 4.0);
    return -0.5 * sgn + c * alpha;
}

CylindricalFieldVector etalon_scattered(const Scenario& s, double regime_factor) {
    const PoleData pole = pole_xi_p(s, regime_factor);
    const auto dg = derived_geometry(s.geometry());
    const double k = s.k01();
    const double rho = s.geometry().rho;
    const Complex zp = pole.zeta_p;

    const Complex x_val = etalon_X(k * dg.r2, -zp);
    const Complex amp = s.dipole_moment() * k * k * k / (2.0 * eps0) *
                        std::polar(std::sqrt(2.0 / (pi * k * rho)), -pi / 4.0) *
                        std::exp(kI * (k * dg.r2) * std::cos(zp)) *
                        std::pow(std::sin(dg.theta2), 1.5) * std::sin(0.5 * zp) *
                        reflection_coeff(dg.theta2, s) * x_val;
    // E = -e_theta2 * amp with e_theta2 = e_rho cos(theta2) - e_x sin(theta2)
    return {-std::cos(dg.theta2) * amp, std::sin(dg.theta2) * amp};
}

SpmResult spm_reflected(const Scenario& s) {
    const auto dg = derived_geometry(s.geometry());
    const double k = s.k01();
    const Complex amp = reflection_coeff(dg.theta2, s) * s.dipole_moment() * k * k /
                        (4.0 * pi * eps0 * dg.r2) * std::sin(dg.theta2) * expi(k * dg.r2);
    const double sp = std::sin(0.5 * dg.phi);
    SpmResult out;
    out.field = {-std::cos(dg.theta2) * amp, std::sin(dg.theta2) * amp};
    out.condition = std::sqrt(k * dg.r2) * sp;
    out.condition_printed = std::sqrt(2.0 * k * dg.r2) * sp;
    return out;
}

PseudoSurfaceResult pseudo_surface_wave(const Scenario& s, const PseudoSurfaceOptions& opt) {
    PseudoSurfaceResult out;
    out.delta = delta(s);
    out.numerical_distance = numerical_distance(s);
    const auto dg = derived_geometry(s.geometry());
    out.grazing_deg = dg.phi * 180.0 / pi;

    if (!(out.numerical_distance < opt.nd_limit)) {
        std::ostringstream os;
        os << "pseudo_surface_wave: numerical distance k01*rho*delta^2 = "
           << out.numerical_distance << " >= " << opt.nd_limit;
        throw RegimeError(os.str());
    }
    if (!(out.grazing_deg < opt.grazing_limit_deg)) {
        std::ostringstream os;
        os << "pseudo_surface_wave: grazing angle " << out.grazing_deg << " deg >= "
           << opt.grazing_limit_deg << " deg";
        throw RegimeError(os.str());
    }

    const double k = s.k01();
    const double rho = s.geometry().rho;
    const double hsum = s.geometry().x + s.geometry().x0;
    const double d = out.delta;

    const Complex bracket = 1.0 + 2.0 * kI * std::sqrt(k * rho / pi) * d * (1.0 + k * rho * d * d);
    const Complex a = d * s.dipole_moment() * k * k * k / (4.0 * eps0) /
                      std::sqrt(pi * k * rho) * std::exp(-d * k * hsum) *
                      expi(k * rho + pi / 2.0) * bracket;
    out.field = {Complex{}, a};
    return out;
}

} // namespace gw
