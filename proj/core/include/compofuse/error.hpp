#pragma once

#include <stdexcept>
#include <string>

namespace compofuse {

/// Every failure mode the library reports. Tests match on the code, not the
/// message text.
enum class ErrorCode {
  // hierarchy
  MultipleRoots,
  OrphanNode,
  LevelSkipEdge,
  LeafClassOverlap,
  UnknownClassId,
  BadHierarchySpec,
  // data
  SizeMismatch,
  UnreadableFile,
  UnreadableImage,
  // tensor / model
  ShapeMismatch,
  EmptyChildSet,
  NonFiniteActivation,
  NonFiniteLoss,
  MissingBranch,
  BranchGateMismatch,
  // optim
  IterOutOfRange,
  IncompatibleCheckpoint,
  BadConfig,
  // eval
  AlphabetViolation,
  EmptyConfusion,
  // oracle
  UnknownOp,
  NonDeterministicLoss,
  // misc
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) raise(code, message);
}

}  // namespace compofuse
