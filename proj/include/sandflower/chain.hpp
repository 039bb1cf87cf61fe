#pragma once

#include <map>
#include <vector>

#include "sandflower/bigint.hpp"
#include "sandflower/graph.hpp"

namespace sandflower {

// Spanning-tree counts along the prefix chains G_0, ..., G_n of a chain.
// Every sequence has n + 1 entries, indexed by i.
struct ChainInvariants {
  std::vector<BigInt> taus;           // tau(G_i)
  std::vector<BigInt> tau_contracts;  // tau(G_i / e_i)
  std::vector<BigInt> tau_e0;         // tau(G_i / e_0)
  // tau(G_i / e_0 / e_i). Entry 0 is the seed 0 that makes the recurrence
  // reproduce tau(G_1 / e_0 / e_1) = k_1 - 2; it is not a graph count.
  std::vector<BigInt> tau_e0_en;

  const BigInt& tau() const { return taus.back(); }
  const BigInt& tau_free_contract() const { return tau_contracts.back(); }
};

ChainInvariants chain_invariants(const ChainSpec& spec);

// Which end's free edge the coefficients are expressed in.
enum class ChainBase {
  Tail,  // e_0
  Head,  // e_n, via the reversed side sequence
};

// Multiplier c with e = c * base in the sandpile group of the chain (up to
// the sign fixed by the orientation). Labels carry `petal` so the table can
// be reused for a petal inside a flower.
std::map<EdgeLabel, BigInt> edge_coefficients(const ChainSpec& spec, ChainBase base,
                                              int petal = kNoPetal);

BigInt edge_order(const ChainSpec& spec, const EdgeLabel& e);
bool is_generating_edge_chain(const ChainSpec& spec, const EdgeLabel& e);

// tau(G/e_0) tau(G/e_n) - tau(G) tau(G/e_0/e_n); always 1. Throws TrivialChain.
BigInt two_end_identity(const ChainSpec& spec);

// tau(P_r^n) and tau(P_r^n / e) for the r-regular chain with n polygons.
ChainInvariants regular_chain_invariants(int r, int n);

}  // namespace sandflower
