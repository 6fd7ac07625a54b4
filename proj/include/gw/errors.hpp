#ifndef GW_ERRORS_HPP
#define GW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gw {

// Raised when an asymptotic formula is evaluated outside the parameter
// regime it was derived for (e.g. conductivity too low, numerical distance
// too large). The message names the offending quantity and its value.
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gw

#endif
