#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wordmap {

enum class ErrorKind {
  invalid_generator,
  rank_mismatch,
  word_overflow,
  invalid_argument,
  invalid_descriptor,
  cap_exceeded,
  not_solvable,
  not_invertible,
  not_subgroup,
  well_definedness,
  parse_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_generator: return "invalid-generator";
    case ErrorKind::rank_mismatch: return "rank-mismatch";
    case ErrorKind::word_overflow: return "word-overflow";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_descriptor: return "invalid-descriptor";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::not_solvable: return "not-solvable";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::not_subgroup: return "not-subgroup";
    case ErrorKind::well_definedness: return "well-definedness";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

/// Domain error raised by every module of the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wordmap
