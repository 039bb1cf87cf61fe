#pragma once

#include <span>
#include <vector>

#include "sandflower/abelian_group.hpp"
#include "sandflower/graph.hpp"

namespace sandflower {

// Matrix-tree count: det of the reduced Laplacian at vertex 0. Throws Disconnected.
BigInt tau_matrix_tree(const Multigraph& g);

// Number of spanning trees containing every edge in `forced`, obtained by
// contracting them one by one; 0 once a forced edge has become a loop.
BigInt tau_with_contracted(const Multigraph& g, std::span<const EdgeLabel> forced);

AbelianGroup sandpile_group_laplacian(const Multigraph& g, std::size_t sink = 0);

// Rows: signed bounded-face cycles, then vertex cuts c_v for v != 0.
// Columns: edges in index order, each oriented from its lower to its
// higher vertex. Throws NotPlanarDecomposed without face data.
IntMatrix cycle_cut_matrix(const Multigraph& g);

AbelianGroup sandpile_group_cycle_cut(const Multigraph& g);

// gcd(tau(G), tau(G/e)) == 1.
bool edge_generator_oracle(const Multigraph& g, const EdgeLabel& e);

// Z^E modulo the cycle and cut lattices, with the Smith transform kept so
// that membership and element orders are exact without enumerating the group.
class EdgeLatticePresentation {
 public:
  explicit EdgeLatticePresentation(const Multigraph& g);

  AbelianGroup group() const;
  std::vector<BigInt> unit(const EdgeLabel& e) const;
  bool contains(std::span<const BigInt> x) const;
  // Throws InfiniteGroup if x has infinite order.
  BigInt order_of(std::span<const BigInt> x) const;
  BigInt order_of_edge(const EdgeLabel& e) const;

 private:
  Multigraph graph_;
  SmithDecomposition smith_;
};

BigInt element_order_oracle(const Multigraph& g, const EdgeLabel& e);

}  // namespace sandflower
