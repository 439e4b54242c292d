#pragma once

#include <stdexcept>
#include <string>

namespace gtam {

/// Input text does not parse as the expected object.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input parses but lies outside the domain of the requested operation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration was asked for beyond its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A property that the underlying theory guarantees did not hold.
class InvariantFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_cap(int size, int cap, const std::string& what) {
    if (size > cap)
        throw CapExceeded(what + ": size " + std::to_string(size) + " exceeds cap " +
                          std::to_string(cap));
}

}  // namespace gtam
