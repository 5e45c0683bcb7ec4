#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace blockerlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, edges that are not edges, out-of-range
/// vertices, violated preconditions.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An exact routine refused to run because the instance is past its
/// configured ceiling (vertex cap, enumeration budget, table size).
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

/// The input graph is not in the class an algorithm requires. Carries a
/// forbidden induced structure (vertex list) when one was found.
class NotInClass : public InvalidInput {
public:
    NotInClass(const std::string& what, std::vector<int> witness)
        : InvalidInput(what), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

}  // namespace blockerlab
