#pragma once

#include <stdexcept>
#include <string>

namespace fixlat {

// Malformed input documents (bad JSON, unknown keys, missing fields).
// The CLI maps these to exit code 2.
class SchemaError : public std::runtime_error {
public:
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violations of a library precondition or a structural axiom.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

inline DomainError cycle_detected(const std::string& msg) {
  return {"CycleDetected", msg};
}
inline DomainError not_transitive(const std::string& msg) {
  return {"NotTransitive", msg};
}
inline DomainError not_reflexive(const std::string& msg) {
  return {"NotReflexive", msg};
}
inline DomainError unknown_element(const std::string& msg) {
  return {"UnknownElement", msg};
}
inline DomainError size_cap(const std::string& msg) {
  return {"SizeCap", msg};
}
inline DomainError missing_g(const std::string& msg) {
  return {"MissingG", msg};
}
inline DomainError unsupported_carrier(const std::string& msg) {
  return {"UnsupportedCarrier", msg};
}
inline DomainError unknown_hypothesis(const std::string& msg) {
  return {"UnknownHypothesis", msg};
}
inline DomainError malformed_program(const std::string& msg) {
  return {"MalformedProgram", msg};
}

}  // namespace fixlat
