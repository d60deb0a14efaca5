#pragma once

#include <stdexcept>

namespace relhyp {

/// Bad user input: parse failures, unknown names, schema violations.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured cap (ball size, search budget, vertex count) was hit.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace relhyp
