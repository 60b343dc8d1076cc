#pragma once

#include <stdexcept>
#include <string>

namespace ifc {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A channel parameter is zero, negative, or not finite.
struct NonPositiveParameter : Error {
    explicit NonPositiveParameter(const std::string& what) : Error("NonPositiveParameter: " + what) {}
};

/// The configuration violates the weak-interference condition
/// (a cross gain is at least as large as the corresponding direct gain).
struct NotWeakInterference : Error {
    explicit NotWeakInterference(const std::string& what) : Error("NotWeakInterference: " + what) {}
};

/// A sweep or scheme parameter is outside its admissible range.
struct ParamOutOfRange : Error {
    explicit ParamOutOfRange(const std::string& what) : Error("ParamOutOfRange: " + what) {}
};

/// An operation that divides by a secrecy margin was given a config
/// whose margin is zero or negative.
struct NonPositiveMargin : Error {
    explicit NonPositiveMargin(const std::string& what) : Error("NonPositiveMargin: " + what) {}
};

/// Finite-difference step too small for the function values to carry
/// any significant digits.
struct DegenerateStep : Error {
    explicit DegenerateStep(const std::string& what) : Error("DegenerateStep: " + what) {}
};

} // namespace ifc
