#pragma once

#include <stdexcept>
#include <string>

namespace embrank {

enum class ErrorKind {
  MalformedInput,
  NotConnected,
  NotBiconnected,
  NotPlanar,
  IndexOutOfRange,
  BoundViolation,
  RankOutOfRange,
  NotAPermutation,
  MalformedTree,
  LabelOutOfRange,
  EmbeddingMismatch,
  GraphMismatch,
  UnknownFace,
  EdgelessComponent,
  IncompleteChoices,
  TooLarge,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace embrank
