#pragma once

#include <stdexcept>

namespace rotting {

// Invalid parameters supplied when constructing a policy, environment or sweep.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its contract (unknown arm, pull past the
// horizon, index before the first pull, ...).
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rotting
