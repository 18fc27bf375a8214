#pragma once

#include <stdexcept>
#include <string>

namespace railnet {

enum class Errc {
  // network validation
  DuplicateEnd,
  MissingEnd,
  SelfPairedEnd,
  Disconnected,
  OddSwitchCount,
  UnknownSwitch,
  // walks and cycles
  NotAWalk,
  NotClosed,
  // double-track graph / classification
  NotOneWay,
  MethodDisagreement,
  InternalInvariantViolation,
  // enumeration and generation
  TooLarge,
  BoundExceeded,
  RejectionBudgetExceeded,
  InvalidConfig,
  // input/output
  SyntaxError,
  SchemaError,
  IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace railnet
