#include <doctest.h>

#include "sandflower/chain.hpp"
#include "sandflower/error.hpp"
#include "sandflower/oracle.hpp"
#include "test_support.hpp"

using namespace sandflower;
using testsupport::big;

namespace {

// x = delta_e - c * delta_base, accepting either sign of c since the sign
// depends on edge orientation.
bool multiple_of_base(const EdgeLatticePresentation& lattice, const EdgeLabel& e, const EdgeLabel& base,
                      const BigInt& c) {
  const auto ue = lattice.unit(e);
  const auto ub = lattice.unit(base);
  for (int sign : {1, -1}) {
    std::vector<BigInt> x(ue.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ue[i] - sign * c * ub[i];
    if (lattice.contains(x)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("four squares: tau 209 and the orders of its edges") {
  const ChainSpec spec{{4, 4, 4, 4}};
  const ChainInvariants inv = chain_invariants(spec);
  CHECK(inv.taus == big({1, 4, 15, 56, 209}));
  CHECK(inv.tau() == 209);
  CHECK(tau_matrix_tree(build_chain(spec)) == 209);

  CHECK(edge_order(spec, EdgeLabel::boundary(2)) == 19);
  CHECK_FALSE(is_generating_edge_chain(spec, EdgeLabel::boundary(2)));
  const Multigraph g = build_chain(spec);
  for (const auto& e : g.edges()) {
    if (e.label == EdgeLabel::boundary(2)) continue;
    CHECK(is_generating_edge_chain(spec, e.label));
    CHECK(edge_order(spec, e.label) == 209);
  }
}

TEST_CASE("recurrences match matrix-tree counts") {
  for (const auto& spec : testsupport::all_chains(4, 5)) {
    const ChainInvariants inv = chain_invariants(spec);
    const std::size_t n = spec.polygons();
    REQUIRE(inv.taus.size() == n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const ChainSpec prefix{{spec.ks.begin(), spec.ks.begin() + static_cast<long>(i)}};
      const Multigraph g = build_chain(prefix);
      const auto ei = EdgeLabel::boundary(static_cast<int>(i));
      const auto e0 = EdgeLabel::boundary(0);
      CHECK(inv.taus[i] == tau_matrix_tree(g));
      CHECK(inv.tau_contracts[i] == tau_with_contracted(g, std::vector{ei}));
      CHECK(inv.tau_e0[i] == tau_with_contracted(g, std::vector{e0}));
      if (i >= 1) CHECK(inv.tau_e0_en[i] == tau_with_contracted(g, std::vector{e0, ei}));
    }
  }
}

TEST_CASE("spanning tree count does not depend on the stacking direction") {
  for (const auto& spec : testsupport::all_chains(4, 5))
    CHECK(chain_invariants(spec).tau() == chain_invariants(spec.reversed()).tau());
}

TEST_CASE("two-end identity") {
  for (const auto& spec : testsupport::all_chains(4, 6)) {
    if (spec.trivial()) continue;
    CHECK(two_end_identity(spec) == 1);
  }
  try {
    (void)two_end_identity(ChainSpec{});
    FAIL("expected TrivialChain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TrivialChain);
  }
}

TEST_CASE("regular chains") {
  for (int r = 2; r <= 6; ++r) {
    const ChainInvariants inv = regular_chain_invariants(r, 6);
    CHECK(inv.taus[0] == 1);
    CHECK(inv.taus[1] == r);
    for (std::size_t n = 2; n < inv.taus.size(); ++n) CHECK(inv.taus[n] == r * inv.taus[n - 1] - inv.taus[n - 2]);
  }
  // n stacked digons are n + 1 parallel edges.
  for (int n = 0; n <= 6; ++n) CHECK(regular_chain_invariants(2, n).tau() == n + 1);
  CHECK(regular_chain_invariants(3, 2).tau() == 8);
  CHECK_THROWS_AS((void)regular_chain_invariants(1, 3), Error);
}

TEST_CASE("edge coefficients are realized in the edge lattice") {
  for (const auto& spec : testsupport::all_chains(3, 4)) {
    const Multigraph g = build_chain(spec);
    const EdgeLatticePresentation lattice(g);
    const auto last = EdgeLabel::boundary(static_cast<int>(spec.polygons()));
    for (auto [base, base_edge] : {std::pair{ChainBase::Tail, EdgeLabel::boundary(0)}, std::pair{ChainBase::Head, last}}) {
      const auto table = edge_coefficients(spec, base);
      CHECK(table.size() == g.edge_count());
      for (const auto& [label, c] : table) CHECK(multiple_of_base(lattice, label, base_edge, c));
    }
  }
}

TEST_CASE("chain groups are cyclic and edge orders match the lattice") {
  for (const auto& spec : testsupport::all_chains(3, 5)) {
    const Multigraph g = build_chain(spec);
    const AbelianGroup group = sandpile_group_laplacian(g);
    CHECK(group.is_cyclic());
    const EdgeLatticePresentation lattice(g);
    for (const auto& e : g.edges()) {
      CHECK(edge_order(spec, e.label) == lattice.order_of_edge(e.label));
      CHECK(is_generating_edge_chain(spec, e.label) == edge_generator_oracle(g, e.label));
    }
  }
}

TEST_CASE("petal tag is carried on coefficient labels") {
  const auto table = edge_coefficients(ChainSpec{{3}}, ChainBase::Head, 2);
  CHECK(table.contains(EdgeLabel::boundary(0, 2)));
  CHECK(table.contains(EdgeLabel::interior(1, 1, 2)));
  CHECK(table.at(EdgeLabel::boundary(1, 2)) == 1);
}

TEST_CASE("unknown chain edges") {
  const ChainSpec spec{{4, 3}};
  for (const auto& bad : {EdgeLabel::boundary(3), EdgeLabel::interior(2, 2), EdgeLabel::interior(0, 1),
                          EdgeLabel::center(0), EdgeLabel::boundary(1, 0)}) {
    try {
      (void)edge_order(spec, bad);
      FAIL("accepted " << bad.to_string());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownEdge);
    }
  }
  CHECK_THROWS_AS((void)chain_invariants(ChainSpec{{3, 1}}), Error);
}
