#ifndef GW_CONSTANTS_HPP
#define GW_CONSTANTS_HPP

#include <numbers>

namespace gw::constants {

inline constexpr double pi = std::numbers::pi;

// Speed of light in vacuum, m/s.
inline constexpr double c0 = 299'792'458.0;

// Vacuum permittivity, F/m.
inline constexpr double eps0 = 8.854e-12;

// Vacuum permeability, H/m.
inline constexpr double mu0 = 4.0 * pi * 1e-7;

} // namespace gw::constants

#endif
