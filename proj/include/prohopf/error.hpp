#pragma once

#include <stdexcept>
#include <string>

namespace prohopf {

// Every library error carries a stable code; what() is "Code: message".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define PROHOPF_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                              \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}     \
  };

PROHOPF_DEFINE_ERROR(ParseError)
PROHOPF_DEFINE_ERROR(UnknownGenerator)
PROHOPF_DEFINE_ERROR(InvalidGenerator)
PROHOPF_DEFINE_ERROR(InvalidPrograph)
PROHOPF_DEFINE_ERROR(GeneratorSetMismatch)
PROHOPF_DEFINE_ERROR(ArityMismatch)
PROHOPF_DEFINE_ERROR(NotReduced)
PROHOPF_DEFINE_ERROR(InvalidSplit)
PROHOPF_DEFINE_ERROR(InvalidGrading)
PROHOPF_DEFINE_ERROR(NotASubset)
PROHOPF_DEFINE_ERROR(InvalidRelation)
PROHOPF_DEFINE_ERROR(ClassBudgetExceeded)
PROHOPF_DEFINE_ERROR(UnknownClassKey)
PROHOPF_DEFINE_ERROR(NotStiff)
PROHOPF_DEFINE_ERROR(NotInTSpan)
PROHOPF_DEFINE_ERROR(NotARefinement)
PROHOPF_DEFINE_ERROR(UnknownCatalogName)
PROHOPF_DEFINE_ERROR(HasNontrivialSubgroup)
PROHOPF_DEFINE_ERROR(NotATree)
PROHOPF_DEFINE_ERROR(NonzeroConstantTerm)
PROHOPF_DEFINE_ERROR(Mismatch)
PROHOPF_DEFINE_ERROR(NoSeries)

#undef PROHOPF_DEFINE_ERROR

}  // namespace prohopf
