#ifndef CURVECODES_ERRORS_HPP
#define CURVECODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvecodes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Modulus polynomial is not irreducible; message names a nontrivial factor.
struct ReducibleModulusError : Error {
    using Error::Error;
};

struct UnsupportedCharacteristicError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Query beyond the enumeration horizon of a semigroup; message says which
/// bound would suffice.
struct HorizonError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

} // namespace curvecodes

#endif
