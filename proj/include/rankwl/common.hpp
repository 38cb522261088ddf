#pragma once

#include <stdexcept>
#include <string>

namespace rankwl {

// Thrown when an input file or string does not conform to a supported format.
// The message names the offending line or byte.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a size guard is exceeded (exact algorithms with exponential
// state are capped at desk scale). CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Kernel selection. Parallel kernels are OpenMP-backed and contractually
// bit-identical to their serial reference implementations.
enum class Exec { Serial, Parallel };

} // namespace rankwl
