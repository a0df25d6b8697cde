#pragma once

#include <stdexcept>
#include <string>

namespace gkt {

enum class ErrorKind {
  Parse,
  LengthMismatch,
  DimensionMismatch,
  IllFormedHom,
  DomainMismatch,
  NonComposableTriple,
  SearchSpaceTooLarge,
  InvalidAction,
  NotAPGraph,
  DegreeNotOrderTwo,
  MissingLabel,
  HypothesisViolated,
  EmptyGraph,
  Invalid,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace gkt
