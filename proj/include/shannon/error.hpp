#pragma once

#include <stdexcept>
#include <string>

namespace shannon {

// Base of every error raised by the library. kind() is the stable error name
// used in reports and by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SHANNON_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

// lattice-core
SHANNON_DEFINE_ERROR(NotAPartialOrder);
SHANNON_DEFINE_ERROR(NotALattice);
SHANNON_DEFINE_ERROR(NoBoundedElements);
SHANNON_DEFINE_ERROR(UnknownName);
SHANNON_DEFINE_ERROR(BadParams);
SHANNON_DEFINE_ERROR(ParseError);

// closure-fd
SHANNON_DEFINE_ERROR(NotClosed);
SHANNON_DEFINE_ERROR(NotPolymatroid);

// cone
SHANNON_DEFINE_ERROR(DimensionTooLarge);
SHANNON_DEFINE_ERROR(DegenerateCone);

// inequalities, realizer, enumerator
SHANNON_DEFINE_ERROR(ArityMismatch);
SHANNON_DEFINE_ERROR(BudgetExceeded);
SHANNON_DEFINE_ERROR(InvalidAssignment);
SHANNON_DEFINE_ERROR(NotAProbability);
SHANNON_DEFINE_ERROR(JoinInconsistent);
SHANNON_DEFINE_ERROR(ShapeMismatch);
SHANNON_DEFINE_ERROR(SizeTooLarge);

#undef SHANNON_DEFINE_ERROR

}  // namespace shannon
