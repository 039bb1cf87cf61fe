#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sandflower/abelian_group.hpp"
#include "sandflower/graph.hpp"

namespace sandflower {

// Per-petal spanning-tree data of a flower and its t x t relation matrix on
// the far-end petal generators f_1, ..., f_t.
struct FlowerInvariants {
  std::vector<BigInt> p;  // tau(P_i); 1 for a trivial petal
  std::vector<BigInt> q;  // tau(P_i / e_i), e_i the attaching edge; 1 for a trivial petal
  BigInt tau;             // tau(F)
  IntMatrix relation;     // rows (.. p_i, -p_{i+1} ..) for i < t, last row q
};

FlowerInvariants flower_invariants(const FlowerSpec& spec);

// sum_i q_i prod_{j != i} p_j
BigInt flower_tau(std::span<const BigInt> p, std::span<const BigInt> q);
IntMatrix flower_relation_matrix(std::span<const BigInt> p, std::span<const BigInt> q);

// Invariant factors (d_1/d_0, ..., d_{t-2}/d_{t-3}, tau/d_{t-2}) where d_k is
// the gcd of the k-fold products of distinct p_i.
AbelianGroup group_from_products(std::span<const BigInt> p, const BigInt& tau);
AbelianGroup group_structure(const FlowerSpec& spec);

// Largest number of entries sharing a prime factor; 1 when no entry exceeds 1.
std::size_t m_value(std::span<const BigInt> a);

std::size_t min_generators(const FlowerSpec& spec);
bool is_cyclic(const FlowerSpec& spec);

// Z_a^{s-2} + Z_{ra} when every nontrivial petal has tau = a. Throws UnequalPetals.
AbelianGroup equal_petal_group(const FlowerSpec& spec);

// The generator f_i: the center edge for a trivial petal, otherwise the
// designated free edge e_n at the far end of the petal.
EdgeLabel petal_generator_edge(const FlowerSpec& spec, std::size_t petal);
bool petal_generator_test(const FlowerSpec& spec, std::size_t petal);
bool exists_generating_edge(const FlowerSpec& spec);

struct EdgeClass {
  EdgeLabel edge;
  std::size_t petal = 0;
  BigInt coefficient;  // e = coefficient * f_petal
  BigInt order;
  bool generator = false;
};

EdgeClass classify_edge(const FlowerSpec& spec, const EdgeLabel& e);
std::vector<EdgeClass> classify_all_edges(const FlowerSpec& spec);

// Order of f_i read off the Smith transform of the relation matrix.
BigInt petal_generator_order(const FlowerSpec& spec, std::size_t petal);

// Petal index sets, each sorted, parts ordered by smallest member.
using Parts = std::vector<std::vector<std::size_t>>;

struct PrimePartition {
  Parts parts;
  std::vector<BigInt> alphas;  // prod_{j in A_i} p_j
  std::vector<BigInt> betas;   // alpha_i * sum_{l in A_i} q_l / p_l
};

inline constexpr std::size_t kMaxPartitionSearch = 10;

bool is_prime_partition(std::span<const BigInt> a, const Parts& parts);
// Every prime partition with the fewest parts. Exhaustive; throws
// BadParameters beyond kMaxPartitionSearch entries.
std::vector<Parts> prime_partitions(std::span<const BigInt> a);
// Every prime partition, any number of parts.
std::vector<Parts> all_prime_partitions(std::span<const BigInt> a);

// Throws InvalidPartition.
PrimePartition make_prime_partition(const FlowerInvariants& inv, const Parts& parts);
IntMatrix reduced_relation_matrix(const FlowerSpec& spec, const Parts& parts);
AbelianGroup group_via_partition(const FlowerSpec& spec, const Parts& parts);
std::size_t min_generators_via_partition(const FlowerSpec& spec, const Parts& parts);

// Flower whose petal i is n_i parallel edges, i.e. n_i - 1 stacked digons.
FlowerSpec thick_cycle_spec(std::span<const int> ns);
AbelianGroup thick_cycle_group(std::span<const int> ns);

// Center C_t, s petals P_r^n (n polygons of r sides) and t - s trivial petals.
FlowerSpec sunflower_spec(int t, int s, int r, int n);
AbelianGroup sunflower_group(int t, int s, int r, int n);

}  // namespace sandflower
