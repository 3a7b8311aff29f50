#pragma once

#include <stdexcept>
#include <string>

namespace onto {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construct outside the supported DL fragment reached the reasoner.
class FragmentError : public Error {
 public:
  using Error::Error;
};

// An operation was called with an unmet precondition (e.g. asking for a
// justification of an axiom that is not entailed).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two rewrite rules matched the same identifier.
class RuleCollisionError : public Error {
 public:
  explicit RuleCollisionError(std::string iri)
      : Error("iri normalization: rule collision on '" + iri + "'"),
        iri_(std::move(iri)) {}
  const std::string& iri() const { return iri_; }

 private:
  std::string iri_;
};

}  // namespace onto
