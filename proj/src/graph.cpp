#include "sandflower/graph.hpp"

#include <algorithm>
#include <queue>

#include "sandflower/error.hpp"

namespace sandflower {

void ChainSpec::validate() const {
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] < 2)
      throw Error(ErrorKind::InvalidSideCount,
                  "polygon " + std::to_string(i + 1) + " has " + std::to_string(ks[i]) + " sides");
}

ChainSpec ChainSpec::reversed() const { return ChainSpec{{ks.rbegin(), ks.rend()}}; }

void FlowerSpec::validate() const {
  if (t < 2) throw Error(ErrorKind::InvalidCenter, "center length " + std::to_string(t) + " < 2");
  if (petals.size() != static_cast<std::size_t>(t))
    throw Error(ErrorKind::InvalidCenter, "expected " + std::to_string(t) + " petals, got " +
                                              std::to_string(petals.size()));
  for (const auto& p : petals) p.validate();
}

std::size_t FlowerSpec::nontrivial_petals() const {
  return static_cast<std::size_t>(
      std::count_if(petals.begin(), petals.end(), [](const ChainSpec& p) { return !p.trivial(); }));
}

std::string EdgeLabel::to_string() const {
  std::string prefix = petal == kNoPetal ? "" : "P" + std::to_string(petal) + ".";
  switch (kind) {
    case EdgeKind::Center: return "C.e_" + std::to_string(index);
    case EdgeKind::Boundary: return prefix + "e_" + std::to_string(index);
    case EdgeKind::Interior:
      return prefix + "f_{" + std::to_string(index) + "," + std::to_string(position) + "}";
  }
  return "?";
}

std::size_t Multigraph::add_edge(std::size_t u, std::size_t v, EdgeLabel label,
                                 std::optional<EdgeLabel> alias) {
  edges_.push_back(Edge{u, v, label, alias});
  return edges_.size() - 1;
}

std::optional<std::size_t> Multigraph::find_edge(const EdgeLabel& label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].named(label)) return i;
  return std::nullopt;
}

std::size_t Multigraph::edge_index(const EdgeLabel& label) const {
  if (auto i = find_edge(label)) return *i;
  throw Error(ErrorKind::UnknownEdge, label.to_string());
}

namespace {

// Stacks the polygons of `spec` onto the existing edge `base` (tail -> head),
// each polygon glued along the previous polygon's e_i.
void attach_chain(Multigraph& g, const ChainSpec& spec, std::size_t base, std::size_t tail,
                  std::size_t head, int petal) {
  std::size_t shared = base;
  std::size_t x = tail;
  std::size_t y = head;
  for (std::size_t i = 1; i <= spec.ks.size(); ++i) {
    const int k = spec.ks[i - 1];
    const int polygon = static_cast<int>(i);
    Face face{x, {}};
    std::size_t prev = x;
    for (int pos = 1; pos <= k - 2; ++pos) {
      std::size_t w = g.add_vertex();
      face.edges.push_back(g.add_edge(prev, w, EdgeLabel::interior(polygon, pos, petal)));
      prev = w;
    }
    const std::size_t next_shared = g.add_edge(prev, y, EdgeLabel::boundary(polygon, petal));
    face.edges.push_back(next_shared);
    face.edges.push_back(shared);
    g.add_face(std::move(face));
    shared = next_shared;
    x = prev;
  }
}

}  // namespace

Multigraph build_chain(const ChainSpec& spec) {
  spec.validate();
  Multigraph g(2);
  const std::size_t e0 = g.add_edge(0, 1, EdgeLabel::boundary(0));
  attach_chain(g, spec, e0, 0, 1, kNoPetal);
  return g;
}

Multigraph build_flower(const FlowerSpec& spec) {
  spec.validate();
  const auto t = static_cast<std::size_t>(spec.t);
  Multigraph g(t);
  Face center{0, {}};
  std::vector<std::size_t> center_edges;
  for (std::size_t i = 0; i < t; ++i) {
    const int petal = static_cast<int>(i);
    center_edges.push_back(g.add_edge(i, (i + 1) % t, EdgeLabel::center(petal),
                                      EdgeLabel::boundary(0, petal)));
    center.edges.push_back(center_edges.back());
  }
  g.add_face(std::move(center));
  for (std::size_t i = 0; i < t; ++i)
    attach_chain(g, spec.petals[i], center_edges[i], i, (i + 1) % t, static_cast<int>(i));
  return g;
}

Multigraph delete_edge(const Multigraph& g, const EdgeLabel& e) {
  const std::size_t victim = g.edge_index(e);
  Multigraph out(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == victim) continue;
    const Edge& ed = g.edge(i);
    out.add_edge(ed.u, ed.v, ed.label, ed.alias);
  }
  return out;
}

Multigraph contract_edge(const Multigraph& g, const EdgeLabel& e) {
  const std::size_t victim = g.edge_index(e);
  const Edge& merged = g.edge(victim);
  const std::size_t keep = std::min(merged.u, merged.v);
  const std::size_t gone = std::max(merged.u, merged.v);
  if (keep == gone) return delete_edge(g, e);
  auto remap = [&](std::size_t x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  Multigraph out(g.vertex_count() - 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == victim) continue;
    const Edge& ed = g.edge(i);
    const std::size_t u = remap(ed.u);
    const std::size_t v = remap(ed.v);
    if (u == v) continue;
    out.add_edge(u, v, ed.label, ed.alias);
  }
  return out;
}

bool is_connected(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t x = todo.front();
    todo.pop();
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        todo.push(y);
      }
  }
  return reached == n;
}

IntMatrix laplacian(const Multigraph& g) {
  IntMatrix l(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
  }
  return l;
}

IntMatrix reduced_laplacian(const Multigraph& g, std::size_t sink) {
  if (sink >= g.vertex_count())
    throw Error(ErrorKind::BadIndex, "sink " + std::to_string(sink) + " out of range");
  return laplacian(g).without(sink, sink);
}

}  // namespace sandflower
