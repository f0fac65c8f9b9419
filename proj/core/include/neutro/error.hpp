#pragma once

#include <stdexcept>

namespace neutro {

// Raised when a value or set operation's precondition is violated.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace neutro
