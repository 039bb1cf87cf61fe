#include "sandflower/oracle.hpp"

#include "sandflower/error.hpp"

namespace sandflower {

BigInt tau_matrix_tree(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "matrix-tree count of a disconnected graph");
  return determinant(reduced_laplacian(g, 0));
}

BigInt tau_with_contracted(const Multigraph& g, std::span<const EdgeLabel> forced) {
  for (const auto& e : forced) static_cast<void>(g.edge_index(e));
  Multigraph h = g;
  for (const auto& e : forced) {
    if (!h.find_edge(e)) return 0;
    h = contract_edge(h, e);
  }
  return tau_matrix_tree(h);
}

AbelianGroup sandpile_group_laplacian(const Multigraph& g, std::size_t sink) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "sandpile group of a disconnected graph");
  return group_from_matrix(reduced_laplacian(g, sink));
}

IntMatrix cycle_cut_matrix(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "cycle/cut presentation of a disconnected graph");
  if (g.faces().size() + n != m + 1)
    throw Error(ErrorKind::NotPlanarDecomposed, "bounded faces do not form a cycle basis");

  IntMatrix rel(m, m);
  std::size_t row = 0;
  for (const auto& face : g.faces()) {
    std::size_t at = face.start;
    for (auto idx : face.edges) {
      const Edge& e = g.edge(idx);
      if (e.u != at && e.v != at) throw Error(ErrorKind::NotPlanarDecomposed, "face walk is broken");
      const std::size_t tail = std::min(e.u, e.v);
      rel(row, idx) += (at == tail) ? 1 : -1;
      at = (e.u == at) ? e.v : e.u;
    }
    if (at != face.start) throw Error(ErrorKind::NotPlanarDecomposed, "face walk does not close");
    ++row;
  }
  for (std::size_t v = 1; v < n; ++v, ++row)
    for (std::size_t idx = 0; idx < m; ++idx) {
      const Edge& e = g.edge(idx);
      if (e.is_loop()) continue;
      const std::size_t tail = std::min(e.u, e.v);
      const std::size_t head = std::max(e.u, e.v);
      if (tail == v) rel(row, idx) = 1;
      if (head == v) rel(row, idx) = -1;
    }
  return rel;
}

AbelianGroup sandpile_group_cycle_cut(const Multigraph& g) { return group_from_matrix(cycle_cut_matrix(g)); }

bool edge_generator_oracle(const Multigraph& g, const EdgeLabel& e) {
  const BigInt whole = tau_matrix_tree(g);
  const BigInt contracted = tau_matrix_tree(contract_edge(g, e));
  return gcd(whole, contracted) == 1;
}

EdgeLatticePresentation::EdgeLatticePresentation(const Multigraph& g)
    : graph_(g), smith_(smith_decompose(cycle_cut_matrix(g))) {}

AbelianGroup EdgeLatticePresentation::group() const {
  return AbelianGroup::from_invariant_factors(smith_.form.diagonal);
}

std::vector<BigInt> EdgeLatticePresentation::unit(const EdgeLabel& e) const {
  std::vector<BigInt> x(graph_.edge_count());
  x[graph_.edge_index(e)] = 1;
  return x;
}

bool EdgeLatticePresentation::contains(std::span<const BigInt> x) const {
  return cokernel_contains(smith_, x);
}

BigInt EdgeLatticePresentation::order_of(std::span<const BigInt> x) const {
  return cokernel_order(smith_, x);
}

BigInt EdgeLatticePresentation::order_of_edge(const EdgeLabel& e) const { return order_of(unit(e)); }

BigInt element_order_oracle(const Multigraph& g, const EdgeLabel& e) {
  return EdgeLatticePresentation(g).order_of_edge(e);
}

}  // namespace sandflower
