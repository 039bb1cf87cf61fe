#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sandflower/int_matrix.hpp"

namespace sandflower {

// Side counts (k_1, ..., k_n) of a polygon chain; empty is the single-edge chain.
struct ChainSpec {
  std::vector<int> ks;

  void validate() const;
  std::size_t polygons() const noexcept { return ks.size(); }
  bool trivial() const noexcept { return ks.empty(); }
  ChainSpec reversed() const;

  friend auto operator<=>(const ChainSpec&, const ChainSpec&) = default;
};

// Center cycle C_t with petal i glued along center edge i (0-based).
struct FlowerSpec {
  int t = 0;
  std::vector<ChainSpec> petals;

  void validate() const;
  std::size_t nontrivial_petals() const;

  friend auto operator<=>(const FlowerSpec&, const FlowerSpec&) = default;
};

enum class EdgeKind { Center, Boundary, Interior };

inline constexpr int kNoPetal = -1;

// Edge names follow the chain construction: Boundary j is the edge e_j
// shared by polygons j and j+1 (e_0 is the base edge, e_n the designated
// free edge of the last polygon); Interior(i, p) is the p-th remaining edge
// of polygon i, 1 <= p <= k_i - 2. Inside a flower, `petal` is the 0-based
// petal index and Center(i) is also reachable as Boundary(i, 0).
struct EdgeLabel {
  EdgeKind kind = EdgeKind::Boundary;
  int petal = kNoPetal;
  int index = 0;
  int position = 0;

  static EdgeLabel center(int i) { return {EdgeKind::Center, kNoPetal, i, 0}; }
  static EdgeLabel boundary(int j, int petal = kNoPetal) { return {EdgeKind::Boundary, petal, j, 0}; }
  static EdgeLabel interior(int polygon, int position, int petal = kNoPetal) {
    return {EdgeKind::Interior, petal, polygon, position};
  }

  std::string to_string() const;
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeLabel label;
  std::optional<EdgeLabel> alias;

  bool is_loop() const noexcept { return u == v; }
  bool named(const EdgeLabel& l) const { return label == l || (alias && *alias == l); }
};

// Closed walk along a bounded face: leaves `start`, then follows `edges`.
struct Face {
  std::size_t start = 0;
  std::vector<std::size_t> edges;
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertices) : vertex_count_(vertices) {}

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  // Bounded faces are known only for graphs produced by the builders;
  // deletion and contraction drop them.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  bool has_faces() const noexcept { return !faces_.empty(); }

  std::size_t add_vertex() { return vertex_count_++; }
  std::size_t add_edge(std::size_t u, std::size_t v, EdgeLabel label,
                       std::optional<EdgeLabel> alias = std::nullopt);
  void add_face(Face face) { faces_.push_back(std::move(face)); }

  std::optional<std::size_t> find_edge(const EdgeLabel& label) const;
  // Throws UnknownEdge.
  std::size_t edge_index(const EdgeLabel& label) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

Multigraph build_chain(const ChainSpec& spec);
Multigraph build_flower(const FlowerSpec& spec);

Multigraph delete_edge(const Multigraph& g, const EdgeLabel& e);
// Merges the endpoints of e; loops created by the merge are discarded.
Multigraph contract_edge(const Multigraph& g, const EdgeLabel& e);

bool is_connected(const Multigraph& g);
IntMatrix laplacian(const Multigraph& g);
IntMatrix reduced_laplacian(const Multigraph& g, std::size_t sink = 0);

}  // namespace sandflower
