#pragma once

#include <stdexcept>
#include <string>

namespace fillscope {

enum class ErrorKind {
  BadParameters,
  UnknownGenerator,
  SyntaxError,
  DuplicateGenerator,
  EmptyGeneratorList,
  GeneratorOutOfRange,
  NotCoprime,
  TrivialKnot,
  NoPeripheralData,
  NoRepresentationFound,
  UncertifiedRepresentation,
  WindowMismatch,
  CertificateFailure,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& reason)
      : Error(kind, "at " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

}  // namespace fillscope
