#pragma once

#include <stdexcept>
#include <string>

namespace simplet {

/// Malformed arguments or input data (bad ids, empty facets, out-of-range parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The complex does not satisfy a structural precondition, e.g. it is
/// disconnected or too small for the sampler.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace simplet
