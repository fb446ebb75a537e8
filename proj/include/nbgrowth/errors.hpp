#pragma once

#include <stdexcept>
#include <string>

namespace nbg {

/// Error categories; the CLI maps these onto process exit codes.
enum class ErrorCode {
  parse,            // malformed input text / JSON
  degree_overflow,  // no free dart slot at an attachment vertex
  unlabelable,      // vertex degree exceeds 2r, no immersion exists
  spectral,         // spectral precondition (connectivity, irreducibility, acyclic input)
  budget,           // search budget exhausted
  domain,           // argument outside its mathematical domain
  internal,         // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  ParseError(std::string message, int line = 0)
      : Error(ErrorCode::parse,
              line > 0 ? "line " + std::to_string(line) + ": " + message
                       : std::move(message)),
        line_number(line) {}
  int line_number;
};

struct DegreeOverflowError : Error {
  explicit DegreeOverflowError(std::string message)
      : Error(ErrorCode::degree_overflow, std::move(message)) {}
};

struct UnlabelableError : Error {
  UnlabelableError(std::string message, std::string vertex)
      : Error(ErrorCode::unlabelable, std::move(message)), vertex_id(std::move(vertex)) {}
  std::string vertex_id;
};

struct SpectralError : Error {
  explicit SpectralError(std::string message)
      : Error(ErrorCode::spectral, std::move(message)) {}
};

struct BudgetError : Error {
  explicit BudgetError(std::string message)
      : Error(ErrorCode::budget, std::move(message)) {}
};

struct DomainError : Error {
  explicit DomainError(std::string message)
      : Error(ErrorCode::domain, std::move(message)) {}
};

}  // namespace nbg
