#include "sandflower/chain.hpp"

#include "sandflower/error.hpp"

namespace sandflower {

ChainInvariants chain_invariants(const ChainSpec& spec) {
  spec.validate();
  const std::size_t n = spec.polygons();
  ChainInvariants inv;
  inv.taus.reserve(n + 1);
  inv.tau_contracts.reserve(n + 1);
  inv.tau_e0.reserve(n + 1);
  inv.tau_e0_en.reserve(n + 1);
  inv.taus.emplace_back(1);
  inv.tau_contracts.emplace_back(1);
  inv.tau_e0.emplace_back(1);
  inv.tau_e0_en.emplace_back(0);
  for (std::size_t i = 1; i <= n; ++i) {
    const long k = spec.ks[i - 1];
    const BigInt& t = inv.taus[i - 1];
    const BigInt& tc = inv.tau_contracts[i - 1];
    const BigInt& a = inv.tau_e0[i - 1];
    const BigInt& b = inv.tau_e0_en[i - 1];
    BigInt next_t = (k - 1) * t + tc;
    BigInt next_tc = (k - 2) * t + tc;
    BigInt next_a = (k - 1) * a + b;
    BigInt next_b = (k - 2) * a + b;
    inv.taus.push_back(std::move(next_t));
    inv.tau_contracts.push_back(std::move(next_tc));
    inv.tau_e0.push_back(std::move(next_a));
    inv.tau_e0_en.push_back(std::move(next_b));
  }
  return inv;
}

namespace {

void check_label(const ChainSpec& spec, const EdgeLabel& e) {
  const int n = static_cast<int>(spec.polygons());
  bool ok = false;
  if (e.petal == kNoPetal) {
    if (e.kind == EdgeKind::Boundary) ok = e.index >= 0 && e.index <= n;
    if (e.kind == EdgeKind::Interior)
      ok = e.index >= 1 && e.index <= n && e.position >= 1 && e.position <= spec.ks[e.index - 1] - 2;
  }
  if (!ok) throw Error(ErrorKind::UnknownEdge, e.to_string() + " is not an edge of this chain");
}

// Coefficient relative to e_0 straight from the invariants.
const BigInt& tail_coefficient(const ChainInvariants& inv, const EdgeLabel& e) {
  if (e.kind == EdgeKind::Boundary) return inv.tau_contracts[e.index];
  return inv.taus[e.index - 1];
}

}  // namespace

std::map<EdgeLabel, BigInt> edge_coefficients(const ChainSpec& spec, ChainBase base, int petal) {
  spec.validate();
  const int n = static_cast<int>(spec.polygons());
  const ChainInvariants inv =
      chain_invariants(base == ChainBase::Tail ? spec : spec.reversed());
  // Reversing maps e_j to e'_{n-j} and polygon i to polygon n-i+1.
  auto boundary_slot = [&](int j) { return base == ChainBase::Tail ? j : n - j; };
  auto polygon_slot = [&](int i) { return base == ChainBase::Tail ? i : n - i + 1; };

  std::map<EdgeLabel, BigInt> out;
  for (int j = 0; j <= n; ++j) out[EdgeLabel::boundary(j, petal)] = inv.tau_contracts[boundary_slot(j)];
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= spec.ks[i - 1] - 2; ++p)
      out[EdgeLabel::interior(i, p, petal)] = inv.taus[polygon_slot(i) - 1];
  return out;
}

BigInt edge_order(const ChainSpec& spec, const EdgeLabel& e) {
  check_label(spec, e);
  const ChainInvariants inv = chain_invariants(spec);
  return inv.tau() / gcd(tail_coefficient(inv, e), inv.tau());
}

bool is_generating_edge_chain(const ChainSpec& spec, const EdgeLabel& e) {
  check_label(spec, e);
  const ChainInvariants inv = chain_invariants(spec);
  return gcd(tail_coefficient(inv, e), inv.tau()) == 1;
}

BigInt two_end_identity(const ChainSpec& spec) {
  if (spec.trivial()) throw Error(ErrorKind::TrivialChain, "identity needs at least one polygon");
  const ChainInvariants inv = chain_invariants(spec);
  const std::size_t n = spec.polygons();
  return inv.tau_e0[n] * inv.tau_contracts[n] - inv.taus[n] * inv.tau_e0_en[n];
}

ChainInvariants regular_chain_invariants(int r, int n) {
  if (r < 2 || n < 0) throw Error(ErrorKind::BadParameters, "regular chain needs r >= 2, n >= 0");
  return chain_invariants(ChainSpec{std::vector<int>(static_cast<std::size_t>(n), r)});
}

}  // namespace sandflower
