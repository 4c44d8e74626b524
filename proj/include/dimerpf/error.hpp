#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dimerpf {

enum class ErrorKind {
  ParseError,
  InvalidArgument,
  InvalidGraph,
  CrossingEdges,
  DuplicateEdge,
  SelfLoop,
  NotACircuit,
  UndirectedEdgeInCircuit,
  NotMergeable,
  TooLarge,
  NotConnected,
  BoundaryAlreadyEven,
  NotEnclosed,
  BadPartialOrientation,
  NoCoveringExists,
  InvalidCovering,
  MonomerOffBoundary,
  OddMonomerCount,
  NotPerfectMatching,
  OddDimension,
  OddSubsetSize,
  SingularMatrix,
  NonzeroInteriorMonomer,
  NoPerfectMatching,
  IndexOffBoundary,
  NegativeDimerWeight,
  NonpositiveMonomerWeight,
  NonSquareWeight,
  BadDimensions,
  InvalidSkeleton,
  NotHamiltonian,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::CrossingEdges: return "CrossingEdges";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NotACircuit: return "NotACircuit";
    case ErrorKind::UndirectedEdgeInCircuit: return "UndirectedEdgeInCircuit";
    case ErrorKind::NotMergeable: return "NotMergeable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::BoundaryAlreadyEven: return "BoundaryAlreadyEven";
    case ErrorKind::NotEnclosed: return "NotEnclosed";
    case ErrorKind::BadPartialOrientation: return "BadPartialOrientation";
    case ErrorKind::NoCoveringExists: return "NoCoveringExists";
    case ErrorKind::InvalidCovering: return "InvalidCovering";
    case ErrorKind::MonomerOffBoundary: return "MonomerOffBoundary";
    case ErrorKind::OddMonomerCount: return "OddMonomerCount";
    case ErrorKind::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::OddSubsetSize: return "OddSubsetSize";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonzeroInteriorMonomer: return "NonzeroInteriorMonomer";
    case ErrorKind::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorKind::IndexOffBoundary: return "IndexOffBoundary";
    case ErrorKind::NegativeDimerWeight: return "NegativeDimerWeight";
    case ErrorKind::NonpositiveMonomerWeight: return "NonpositiveMonomerWeight";
    case ErrorKind::NonSquareWeight: return "NonSquareWeight";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::InvalidSkeleton: return "InvalidSkeleton";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace dimerpf
