#pragma once

#include <stdexcept>
#include <string>

namespace ciqa {

// File / stream problems (CLI exit code 2).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to reach its target (CLI exit code 4),
// e.g. a ladder calibration that cannot hit the requested SSIM band.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ciqa
