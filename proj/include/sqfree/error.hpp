#pragma once

#include <stdexcept>
#include <string>

namespace sqfree {

enum class Errc {
  BadToken,
  SelfLoop,
  DuplicateEdge,
  HasCycle,
  Disconnected,
  BadParameter,
  NotPendant,
  SizeMismatch,
  EmptyComplex,
  KTooLarge,
  BudgetExceeded,
  NotEquigenerated,
  NotCaterpillar,
  TooLarge,
  BadJson,
};

constexpr const char* to_string(Errc e) noexcept {
  switch (e) {
    case Errc::BadToken: return "BadToken";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::HasCycle: return "HasCycle";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadParameter: return "BadParameter";
    case Errc::NotPendant: return "NotPendant";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::EmptyComplex: return "EmptyComplex";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotEquigenerated: return "NotEquigenerated";
    case Errc::NotCaterpillar: return "NotCaterpillar";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadJson: return "BadJson";
  }
  return "Unknown";
}

// Every failure raised by the library. `line` is the 1-based input line
// for parse errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int line = 0)
      : std::runtime_error(format(code, message, line)), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  static std::string format(Errc code, const std::string& message, int line) {
    std::string s = to_string(code);
    if (line > 0) s += " (line " + std::to_string(line) + ")";
    return s + ": " + message;
  }

  Errc code_;
  int line_;
};

}  // namespace sqfree
