#pragma once
#include <stdexcept>
#include <string>

namespace q8 {

// Error taxonomy shared by all modules. The CLI maps UsageError to exit 2 and
// everything else to exit 3.
enum class Err {
  DegenerateInput,
  UnsupportedCharacteristic,
  BadPrime,
  BudgetExceeded,
  AnsatzViolated,
  WeilShapeViolated,
  PreconditionFailed,
  RamifiedPrime,
  NotSimpleInput,
  SingularFiber,
  IllConditioned,
  ContinuationFailed,
  DivisionByZero,
  InternalError,
  DegeneratePoint,
  Pole,
  SearchExhausted,
  Unsupported,
  UsageError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace q8
