#pragma once

#include <stdexcept>
#include <string>

namespace thinkit {

// Malformed or inconsistent input (bad ids, loops, invalid specs, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact search or enumeration was asked to run above its configured cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace thinkit
