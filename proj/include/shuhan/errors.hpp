#pragma once

#include <stdexcept>
#include <string>

namespace shuhan {

// Bad label, malformed rational, size mismatch, violated precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Explicit resource refusal, e.g. 2^n principal-minor enumeration above the order cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No known threshold for a (label, notion) pair.
class NoThreshold : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace shuhan
