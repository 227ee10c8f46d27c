#pragma once

#include <stdexcept>
#include <string>

namespace gmloci {

// Base of every error the toolkit raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched rings, fields, vector lengths, missing substitution images.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Input that is well-formed but violates a domain rule (non-homogeneous
// generator, non-prime modulus, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured cap (pair queue, term count, enumeration size) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

class DegreeUndefinedError : public Error {
 public:
  using Error::Error;
};

}  // namespace gmloci
