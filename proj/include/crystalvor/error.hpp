#pragma once

#include <stdexcept>
#include <string>

namespace crystalvor {

enum class ErrorKind {
  Malformed,
  DanglingEndpoint,
  Disconnected,
  BridgeExists,
  GenusTooSmall,
  NotACycle,
  NotUnit,
  TooLarge,
  NotInH,
  NotInCell,
  UnknownVertex,
  NotStronglyConnected,
  RankTooHigh,
  UnknownExample,
  IO,
  Usage,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that the command line front end can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace crystalvor
