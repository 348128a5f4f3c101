#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperwalk {

enum class ErrorKind {
  ParseError,
  EmptyHypergraph,
  DuplicateVertex,
  UnknownVertex,
  DuplicateMember,
  EmptyEdge,
  NonPositiveWeight,
  DisconnectedHypergraph,
  SizeLimit,
  BadBeta,
  BadDistribution,
  SingletonEdge,
  ConvergenceFailure,
  SingularSystem,
  NotEdgeIndependent,
  NotTrivialWeights,
  NotStationary,
  NotSymmetric,
  IsolatedVertex,
  ScoreOverflow,
  ElementMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every hyperwalk operation. The message always names
/// the offending entity (vertex, edge index, parameter).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperwalk
