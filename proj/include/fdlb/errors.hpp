#pragma once

#include <stdexcept>
#include <string>

namespace fdlb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeRangeError : public Error {
 public:
  explicit DegreeRangeError(std::string literal)
      : Error("degree out of range [0,1]: " + literal), literal_(std::move(literal)) {}
  const std::string& literal() const { return literal_; }

 private:
  std::string literal_;
};

class UnitMismatch : public Error {
 public:
  UnitMismatch(const std::string& lhs, const std::string& rhs)
      : Error("cannot compare quantities in '" + lhs + "' and '" + rhs + "'") {}
};

class UnknownIndividual : public Error {
 public:
  explicit UnknownIndividual(const std::string& name) : Error("unknown individual: " + name) {}
};

class UnknownAttribute : public Error {
 public:
  explicit UnknownAttribute(const std::string& name)
      : Error("attribute is not an atomic concept of the knowledge base: " + name) {}
};

class EmptyChoiceSet : public Error {
 public:
  EmptyChoiceSet() : Error("the choice set is empty") {}
};

class NoDerivation : public Error {
 public:
  NoDerivation(const std::string& individual, const std::string& concept_text)
      : Error("no derivation for " + individual + " : " + concept_text +
              " (interval is the vacuous [0, 1])") {}
};

class IllFormedConcept : public Error {
 public:
  using Error::Error;
};

}  // namespace fdlb
