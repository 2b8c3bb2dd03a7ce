#pragma once

#include <stdexcept>
#include <string>

namespace solvform {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: unparsable documents, bad rational literals, dimension
/// mismatches, out-of-range degrees. Maps to CLI exit code 2.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// Semantically invalid data: Jacobi failures, singular coframes,
/// non-automorphism or non-isometric group elements, exceeded closure caps.
/// Maps to CLI exit code 3.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

} // namespace solvform
