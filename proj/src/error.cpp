#include "symbreak/error.hpp"

namespace symbreak {

const char* err_name(Err e) {
  switch (e) {
    case Err::OutOfRange: return "OutOfRange";
    case Err::SelfLoop: return "SelfLoop";
    case Err::SizeLimit: return "SizeLimitExceeded";
    case Err::Disconnected: return "Disconnected";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::Budget: return "BudgetExceeded";
    case Err::K2Component: return "UndefinedForK2Component";
    case Err::TooSmall: return "TooSmall";
    case Err::Precondition: return "PreconditionFailed";
    case Err::NotRThin: return "NotRThin";
    case Err::BaseNotDistinguishing: return "BaseNotDistinguishing";
    case Err::ConstructionFailed: return "ConstructionFailed";
    case Err::BadParams: return "BadParams";
    case Err::Parse: return "ParseError";
    case Err::IncompleteLabeling: return "IncompleteLabeling";
  }
  return "Error";
}

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace symbreak
