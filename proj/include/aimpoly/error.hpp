#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aimpoly {

enum class ErrorKind {
  DivisionByZero,
  InvalidInput,
  PoleAtParameterValue,
  IterateBlowup,
  MultipleParameters,
  SideConditionViolated,
  NoPolynomialSolution,
  InconsistentMethods,
  SyntaxError,
  ZeroDenominator,
  UnknownFamily,
  InadmissibleParams,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::PoleAtParameterValue: return "PoleAtParameterValue";
    case ErrorKind::IterateBlowup: return "IterateBlowup";
    case ErrorKind::MultipleParameters: return "MultipleParameters";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::NoPolynomialSolution: return "NoPolynomialSolution";
    case ErrorKind::InconsistentMethods: return "InconsistentMethods";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::InadmissibleParams: return "InadmissibleParams";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The kind is the
/// machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
      : Error(ErrorKind::SyntaxError, format(offset, expected, detail)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                            const std::string& detail) {
    std::string out = detail + " at offset " + std::to_string(offset);
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out += ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace aimpoly
