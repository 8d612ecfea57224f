#pragma once

#include <stdexcept>
#include <string>

namespace cvn {

enum class ErrorCode {
  IndexOutOfRange,
  NotABasis,
  NotPrimitive,
  Unsupported,
  DisconnectedGraph,
  BadValency,
  WrongRank,
  NonpositiveLength,
  NotClosed,
  TrivialClass,
  NotAForest,
  BadPartition,
  NotAnAutomorphism,
  RankMismatch,
  DimensionMismatch,
  Infeasible,
  EmptyDirection,
  EmptySlice,
  BudgetExceeded,
  WalkStuck,
  NotAGeodesic,
  NotMaximalSimplex,
  NoFacetChain,
  ParamOutOfRange,
  ParseError,
  SeparatingEdge,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cvn
