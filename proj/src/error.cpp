#include "hyperwalk/error.hpp"

namespace hyperwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateMember: return "DuplicateMember";
    case ErrorKind::EmptyEdge: return "EmptyEdge";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::DisconnectedHypergraph: return "DisconnectedHypergraph";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::BadBeta: return "BadBeta";
    case ErrorKind::BadDistribution: return "BadDistribution";
    case ErrorKind::SingletonEdge: return "SingletonEdge";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotEdgeIndependent: return "NotEdgeIndependent";
    case ErrorKind::NotTrivialWeights: return "NotTrivialWeights";
    case ErrorKind::NotStationary: return "NotStationary";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::ScoreOverflow: return "ScoreOverflow";
    case ErrorKind::ElementMismatch: return "ElementMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hyperwalk
