// Error types shared across the spinq core library.

#ifndef SPINQ_ERRORS_HPP
#define SPINQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinq {

/// Base class of all spinq errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A document does not conform to the expected structure (malformed JSON,
/// wrong types, unknown fields, missing fields).
class SchemaError : public Error {
public:
  explicit SchemaError(const std::string& what) : Error("schema error: " + what) {}
};

/// Structurally well-formed data violating a semantic invariant
/// (zero normal weight, parity violation, duplicate ids, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error("validation error: " + what) {}
};

/// Family generator called with out-of-range or parity-violating parameters.
class BadParamsError : public Error {
public:
  explicit BadParamsError(const std::string& what) : Error("bad parameters: " + what) {}
};

/// A surgery spec does not match the manifold it is applied to.
class SpecError : public Error {
public:
  explicit SpecError(const std::string& what) : Error("spec error: " + what) {}
};

/// A localization sum failed to reduce to a genuine virtual character.
/// Signals fixed-point data that cannot come from a closed manifold.
class NotDivisibleError : public Error {
public:
  explicit NotDivisibleError(const std::string& what) : Error("not divisible: " + what) {}
};

} // namespace spinq

#endif
