#pragma once

// Brute-force references used by the tests. Nothing here calls the library's
// elimination or recurrence code, so agreement is independent evidence.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sandflower/bigint.hpp"
#include "sandflower/flower.hpp"
#include "sandflower/graph.hpp"
#include "sandflower/int_matrix.hpp"

namespace testsupport {

using sandflower::BigInt;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Counts spanning trees containing every edge index in `forced` by testing
// every (V-1)-subset of edges for acyclicity.
inline long count_spanning_trees(const sandflower::Multigraph& g, const std::vector<std::size_t>& forced = {}) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n <= 1) return 1;
  const std::size_t need = n - 1;
  if (m < need) return 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(need), true);
  long count = 0;
  do {
    bool has_forced = std::all_of(forced.begin(), forced.end(), [&](std::size_t f) { return pick[f]; });
    if (!has_forced) continue;
    UnionFind uf(n);
    bool tree = true;
    for (std::size_t i = 0; i < m && tree; ++i)
      if (pick[i]) tree = uf.join(g.edge(i).u, g.edge(i).v);
    if (tree) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

// Cofactor expansion; fine up to about 7x7.
inline BigInt laplace_determinant(const sandflower::IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    const BigInt minor = laplace_determinant(a.without(0, j));
    det += (j % 2 == 0 ? 1 : -1) * a(0, j) * minor;
  }
  return det;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Largest count of entries sharing a prime, by trial division.
inline std::size_t m_by_factoring(const std::vector<long>& a) {
  std::vector<long> primes;
  for (long v : a)
    for (long p : prime_factors(v)) primes.push_back(p);
  std::size_t best = 1;
  for (long p : primes) {
    const auto c = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](long v) { return v % p == 0; }));
    best = std::max(best, c);
  }
  return best;
}

inline std::vector<BigInt> big(const std::vector<long>& v) { return {v.begin(), v.end()}; }

inline sandflower::IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  sandflower::IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline sandflower::ChainSpec random_chain(std::mt19937& rng, int max_polys, int max_k) {
  std::uniform_int_distribution<int> count(0, max_polys), side(2, max_k);
  sandflower::ChainSpec c;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) c.ks.push_back(side(rng));
  return c;
}

inline sandflower::FlowerSpec random_flower(std::mt19937& rng, int min_t, int max_t, int max_polys, int max_k) {
  std::uniform_int_distribution<int> tt(min_t, max_t);
  sandflower::FlowerSpec f;
  f.t = tt(rng);
  for (int i = 0; i < f.t; ++i) f.petals.push_back(random_chain(rng, max_polys, max_k));
  return f;
}

// Every chain with at most max_polys polygons of 2..max_k sides.
inline std::vector<sandflower::ChainSpec> all_chains(int max_polys, int max_k) {
  std::vector<sandflower::ChainSpec> out{{}};
  std::vector<sandflower::ChainSpec> frontier{{}};
  for (int n = 1; n <= max_polys; ++n) {
    std::vector<sandflower::ChainSpec> next;
    for (const auto& c : frontier)
      for (int k = 2; k <= max_k; ++k) {
        auto d = c;
        d.ks.push_back(k);
        next.push_back(d);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Every set partition of {0..n-1}, by restricted-growth strings.
inline std::vector<sandflower::Parts> all_set_partitions(std::size_t n) {
  std::vector<sandflower::Parts> out;
  std::vector<std::size_t> rg(n, 0);
  auto emit = [&] {
    sandflower::Parts parts;
    for (std::size_t i = 0; i < n; ++i) {
      if (rg[i] == parts.size()) parts.emplace_back();
      parts[rg[i]].push_back(i);
    }
    out.push_back(parts);
  };
  auto rec = [&](auto& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= used && v < n; ++v) {
      rg[i] = v;
      self(self, i + 1, std::max(used, v + 1));
    }
  };
  if (n > 0) {
    rg[0] = 0;
    rec(rec, 1, 1);
  }
  return out;
}

}  // namespace testsupport
