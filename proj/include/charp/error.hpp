#pragma once

#include <stdexcept>
#include <string>

namespace charp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CHARP_ERROR(Name)                                   \
  struct Name : Error {                                     \
    explicit Name(const std::string& what)                  \
        : Error(std::string(#Name) + ": " + what) {}        \
  }

CHARP_ERROR(DivisionByZero);
CHARP_ERROR(NotAPthPower);
CHARP_ERROR(ParseError);
CHARP_ERROR(NotClosed);
CHARP_ERROR(DegreeMismatch);
CHARP_ERROR(DegreeOutOfRange);
CHARP_ERROR(ZeroEntry);
CHARP_ERROR(BadCaseParams);
CHARP_ERROR(BadUnit);
CHARP_ERROR(LevelTooLow);
CHARP_ERROR(NotExact);
CHARP_ERROR(NotCommutative);
CHARP_ERROR(BadFiltration);
CHARP_ERROR(NotChainMap);
CHARP_ERROR(NotPairingMorphism);
CHARP_ERROR(NotSubgroup);
CHARP_ERROR(BudgetExceeded);
CHARP_ERROR(InvalidArgument);

#undef CHARP_ERROR

}  // namespace charp
