#pragma once

#include <stdexcept>
#include <string>

namespace mixvol {

/// Malformed or out-of-contract input (bad file, dimension mismatch,
/// violated precondition). Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent algorithms disagreed on a value they must agree on.
/// Maps to CLI exit code 3 and should never occur on a released build.
class CrossCheckError : public std::runtime_error {
public:
    explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

/// A violated internal invariant (integrality of a lattice volume, a
/// certificate that fails to re-verify, ...). Same severity as a
/// cross-check failure.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

inline void check_input(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

} // namespace mixvol
