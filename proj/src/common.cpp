#include "q8/common.hpp"

namespace q8 {

const char* err_name(Err e) {
  switch (e) {
    case Err::DegenerateInput: return "DEGENERATE_INPUT";
    case Err::UnsupportedCharacteristic: return "UNSUPPORTED_CHARACTERISTIC";
    case Err::BadPrime: return "BAD_PRIME";
    case Err::BudgetExceeded: return "BUDGET_EXCEEDED";
    case Err::AnsatzViolated: return "ANSATZ_VIOLATED";
    case Err::WeilShapeViolated: return "WEIL_SHAPE_VIOLATED";
    case Err::PreconditionFailed: return "PRECONDITION_FAILED";
    case Err::RamifiedPrime: return "RAMIFIED_PRIME";
    case Err::NotSimpleInput: return "NOT_SIMPLE_INPUT";
    case Err::SingularFiber: return "SINGULAR_FIBER";
    case Err::IllConditioned: return "ILL_CONDITIONED";
    case Err::ContinuationFailed: return "CONTINUATION_FAILED";
    case Err::DivisionByZero: return "DIVISION_BY_ZERO";
    case Err::InternalError: return "INTERNAL_ERROR";
    case Err::DegeneratePoint: return "DEGENERATE_POINT";
    case Err::Pole: return "POLE";
    case Err::SearchExhausted: return "SEARCH_EXHAUSTED";
    case Err::Unsupported: return "UNSUPPORTED";
    case Err::UsageError: return "USAGE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace q8
