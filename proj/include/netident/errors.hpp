#pragma once
/*
 * Error taxonomy for the toolkit. Every thrown condition carries a stable
 * machine-readable `kind` string (used by the CLI for exit-code mapping and
 * by tests) plus a human-oriented message.
 *
 * Exit-code convention at the CLI boundary:
 *   kind "SchemaError" / "IoError"  -> exit 2 (input malformed / unreadable)
 *   every other kind                -> exit 1 (domain error)
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netident {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Graph validation failure carrying the offending cycle (node ids, closed
// walk: first == last).
class CycleError : public Error {
 public:
  CycleError(std::vector<int> cycle, const std::string& msg)
      : Error("CycleDetected", msg), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace netident
