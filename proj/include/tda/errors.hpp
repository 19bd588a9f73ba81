#pragma once

#include <stdexcept>
#include <string>

namespace tda {

// Base of all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters or violated preconditions.
struct ConfigError : Error {
    using Error::Error;
};

// File-system and file-format failures; messages carry path context.
struct IoError : Error {
    using Error::Error;
};

// Broken internal invariants discovered mid-computation.
struct ComputeError : Error {
    using Error::Error;
};

} // namespace tda
