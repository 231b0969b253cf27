#pragma once

#include <stdexcept>
#include <string>

namespace vclass {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define VCLASS_ERROR(Name)                                              \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

VCLASS_ERROR(MixedSpectrum)
VCLASS_ERROR(NotDescribable)
VCLASS_ERROR(EmptySubset)
VCLASS_ERROR(NotContained)
VCLASS_ERROR(IncomparableSymbolic)
VCLASS_ERROR(NotIdempotent)
VCLASS_ERROR(InvalidOracle)
VCLASS_ERROR(FormulationMismatch)
VCLASS_ERROR(BudgetExceeded)
VCLASS_ERROR(NotNowhereDense)
VCLASS_ERROR(SchemaError)

#undef VCLASS_ERROR

}  // namespace vclass
