#pragma once

#include <stdexcept>
#include <string>

namespace symbreak {

enum class Err {
  OutOfRange,
  SelfLoop,
  SizeLimit,
  Disconnected,
  LengthMismatch,
  Budget,
  K2Component,
  TooSmall,
  Precondition,
  NotRThin,
  BaseNotDistinguishing,
  ConstructionFailed,
  BadParams,
  Parse,
  IncompleteLabeling,
};

const char* err_name(Err e);

// Every recoverable failure carries a code so callers can branch on it
// instead of matching message strings.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace symbreak
