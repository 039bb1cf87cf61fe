#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sandflower/graph.hpp"

namespace sandflower {

enum class SweepDedup {
  Rotation,  // one representative per cyclic rotation class of the petal list
  Dihedral,  // rotations and reflections
};

struct SweepOptions {
  int max_t = 4;
  int max_polys = 2;
  int max_k = 4;
  unsigned jobs = 1;
  SweepDedup dedup = SweepDedup::Dihedral;
};

// Every chain with at most max_polys polygons of 2..max_k sides, trivial first.
std::vector<ChainSpec> enumerate_petals(int max_polys, int max_k);

// Canonical representatives for 2 <= t <= max_t, sorted.
std::vector<FlowerSpec> enumerate_flowers(const SweepOptions& opts);

// Runs every formula-versus-oracle check on one flower; returns the failed
// check descriptions (empty when everything agrees).
std::vector<std::string> check_flower(const FlowerSpec& spec);

struct SweepFailure {
  FlowerSpec spec;
  std::vector<std::string> checks;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::vector<SweepFailure> failures;  // sorted by spec

  // Failure with the fewest edges, ties broken by spec order.
  const SweepFailure* minimal_failure() const;
};

SweepSummary run_sweep(const SweepOptions& opts);
SweepSummary run_checks(const std::vector<FlowerSpec>& specs, unsigned jobs);

}  // namespace sandflower
