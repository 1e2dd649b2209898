#include "compofuse/error.hpp"

namespace compofuse {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::OrphanNode: return "OrphanNode";
    case ErrorCode::LevelSkipEdge: return "LevelSkipEdge";
    case ErrorCode::LeafClassOverlap: return "LeafClassOverlap";
    case ErrorCode::UnknownClassId: return "UnknownClassId";
    case ErrorCode::BadHierarchySpec: return "BadHierarchySpec";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::UnreadableFile: return "UnreadableFile";
    case ErrorCode::UnreadableImage: return "UnreadableImage";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EmptyChildSet: return "EmptyChildSet";
    case ErrorCode::NonFiniteActivation: return "NonFiniteActivation";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::MissingBranch: return "MissingBranch";
    case ErrorCode::BranchGateMismatch: return "BranchGateMismatch";
    case ErrorCode::IterOutOfRange: return "IterOutOfRange";
    case ErrorCode::IncompatibleCheckpoint: return "IncompatibleCheckpoint";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::AlphabetViolation: return "AlphabetViolation";
    case ErrorCode::EmptyConfusion: return "EmptyConfusion";
    case ErrorCode::UnknownOp: return "UnknownOp";
    case ErrorCode::NonDeterministicLoss: return "NonDeterministicLoss";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace compofuse
