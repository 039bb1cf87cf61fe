#include "sandflower/error.hpp"

namespace sandflower {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSideCount: return "InvalidSideCount";
    case ErrorKind::InvalidCenter: return "InvalidCenter";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::InfiniteGroup: return "InfiniteGroup";
    case ErrorKind::TrivialChain: return "TrivialChain";
    case ErrorKind::UnequalPetals: return "UnequalPetals";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotPlanarDecomposed: return "NotPlanarDecomposed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace sandflower
