#pragma once

#include <stdexcept>
#include <string>

namespace slfsr {

/// Raised when a request exceeds one of the enumeration / factoring caps.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial, matrix, element or grid text. The message always
/// echoes the offending token.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace slfsr
