#pragma once

#include <stdexcept>
#include <string>

namespace tokendom {

// Internal-consistency failure inside the constructive pipeline (a cardinality
// identity or domination check that is supposed to hold did not). Always a bug
// or an out-of-contract input, never a recoverable condition.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Certificate file cannot be read as a certificate at all (parse error,
// missing field, wrong type, unknown schema). Semantic failures of a readable
// certificate are reported separately by the verifier.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tokendom
