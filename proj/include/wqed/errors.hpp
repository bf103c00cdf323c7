#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

// Base class so callers can catch any library failure in one clause.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter validation failed; the message carries the report summary.
class InvalidParams : public Error {
public:
    using Error::Error;
};

// The condition solver could not satisfy the detuning or positivity floors.
class NoValidSolution : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent configuration input.
class BadConfig : public Error {
public:
    using Error::Error;
};

// Scattering linear system is numerically degenerate.
class SingularSystem : public Error {
public:
    using Error::Error;
};

// Quadrature refinement check disagreed beyond tolerance.
class GridNotConverged : public Error {
public:
    using Error::Error;
};

// Pulse bandwidth reaches the Raman-shifted branch.
class PulseOverlap : public Error {
public:
    using Error::Error;
};

// Photon-atom gate left residual entanglement with the atom.
class AtomNotDisentangled : public Error {
public:
    using Error::Error;
};

}  // namespace wqed
