#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sandflower {

enum class ErrorKind {
  InvalidSideCount,
  InvalidCenter,
  UnknownEdge,
  NonSquare,
  BadIndex,
  InfiniteGroup,
  TrivialChain,
  UnequalPetals,
  InvalidPartition,
  BadParameters,
  Disconnected,
  NotPlanarDecomposed,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sandflower
