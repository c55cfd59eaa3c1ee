#pragma once

#include <stdexcept>

namespace valueset {

// Malformed files or flags.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-domain arguments (s < 2, inv(0), mixed fields, ...).
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameters that no function can realise, or a construction that does not fit.
class infeasible_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An enumeration would exceed its configured budget; nothing was truncated.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace valueset
