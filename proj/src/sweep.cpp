#include "sandflower/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sandflower/error.hpp"
#include "sandflower/flower.hpp"
#include "sandflower/oracle.hpp"
#include "sandflower/spec_io.hpp"

namespace sandflower {

std::vector<ChainSpec> enumerate_petals(int max_polys, int max_k) {
  if (max_polys < 0 || (max_polys > 0 && max_k < 2))
    throw Error(ErrorKind::BadParameters, "petal enumeration needs max_polys >= 0 and max_k >= 2");
  std::vector<ChainSpec> out{ChainSpec{}};
  std::vector<ChainSpec> layer{ChainSpec{}};
  for (int n = 1; n <= max_polys; ++n) {
    std::vector<ChainSpec> next;
    for (const auto& c : layer)
      for (int k = 2; k <= max_k; ++k) {
        ChainSpec longer = c;
        longer.ks.push_back(k);
        next.push_back(std::move(longer));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

bool is_canonical(const std::vector<std::size_t>& seq, SweepDedup dedup) {
  const std::size_t t = seq.size();
  std::vector<std::size_t> image(t);
  for (std::size_t shift = 0; shift < t; ++shift) {
    for (std::size_t i = 0; i < t; ++i) image[i] = seq[(i + shift) % t];
    if (image < seq) return false;
    if (dedup == SweepDedup::Dihedral) {
      std::reverse(image.begin(), image.end());
      if (image < seq) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<FlowerSpec> enumerate_flowers(const SweepOptions& opts) {
  if (opts.max_t < 2) throw Error(ErrorKind::BadParameters, "sweep needs max_t >= 2");
  const auto petals = enumerate_petals(opts.max_polys, opts.max_k);
  std::vector<FlowerSpec> out;
  for (int t = 2; t <= opts.max_t; ++t) {
    std::vector<std::size_t> seq(static_cast<std::size_t>(t), 0);
    while (true) {
      if (is_canonical(seq, opts.dedup)) {
        FlowerSpec spec{t, {}};
        for (auto i : seq) spec.petals.push_back(petals[i]);
        out.push_back(std::move(spec));
      }
      std::size_t pos = seq.size();
      while (pos > 0 && seq[pos - 1] + 1 == petals.size()) seq[--pos] = 0;
      if (pos == 0) break;
      ++seq[pos - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> check_flower(const FlowerSpec& spec) {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };

  const FlowerInvariants inv = flower_invariants(spec);
  const Multigraph g = build_flower(spec);
  const BigInt tau_g = tau_matrix_tree(g);
  expect(tau_g == inv.tau, "tau(F) formula vs matrix-tree");
  expect(abs(determinant(inv.relation)) == inv.tau, "|det R| vs tau(F)");

  const AbelianGroup formula = group_structure(spec);
  const AbelianGroup lap = sandpile_group_laplacian(g);
  const AbelianGroup cyc = sandpile_group_cycle_cut(g);
  expect(formula == lap, "product-gcd group vs reduced Laplacian SNF");
  expect(formula == cyc, "product-gcd group vs cycle/cut SNF");
  expect(group_from_matrix(inv.relation) == formula, "relation matrix SNF vs product-gcd group");

  const std::size_t mu = min_generators(spec);
  expect(mu == lap.rank(), "m-value generator count vs oracle invariant factors");
  expect(is_cyclic(spec) == lap.is_cyclic(), "cyclicity criterion vs oracle");

  BigInt prev = 1;
  for (std::size_t k = 1; k + 2 <= inv.p.size(); ++k) {
    const BigInt d = gcd_of_k_products(inv.p, k);
    expect(divides(prev, d), "d-chain divisibility");
    prev = d;
  }
  expect(divides(prev, inv.tau), "d_{t-2} divides tau(F)");

  const auto partitions = prime_partitions(inv.p);
  expect(!partitions.empty(), "prime partition exists");
  for (const auto& parts : partitions) {
    const PrimePartition pp = make_prime_partition(inv, parts);
    for (std::size_t i = 0; i < pp.alphas.size(); ++i)
      expect(gcd(pp.alphas[i], pp.betas[i]) == 1, "gcd(alpha_i, beta_i) = 1");
    expect(group_via_partition(spec, parts) == formula, "partition group vs product-gcd group");
    expect(group_from_matrix(flower_relation_matrix(pp.alphas, pp.betas)) == formula,
           "reduced relation matrix SNF vs product-gcd group");
    expect(min_generators_via_partition(spec, parts) == mu, "partition generator count");
  }

  if (spec.nontrivial_petals() >= 2) {
    bool equal = true;
    std::optional<BigInt> a;
    for (std::size_t i = 0; i < inv.p.size(); ++i) {
      if (spec.petals[i].trivial()) continue;
      if (a && *a != inv.p[i]) equal = false;
      a = inv.p[i];
    }
    if (equal) expect(equal_petal_group(spec) == formula, "equal-petal group");
  }

  const EdgeLatticePresentation lattice(g);
  bool any_generator = false;
  for (const auto& c : classify_all_edges(spec)) {
    const bool oracle_gen = gcd(tau_g, tau_matrix_tree(contract_edge(g, c.edge))) == 1;
    any_generator = any_generator || oracle_gen;
    expect(c.generator == oracle_gen, "edge generator criterion vs gcd(tau(F), tau(F/e)) oracle at " + c.edge.to_string());
    expect(c.order == lattice.order_of_edge(c.edge), "edge order vs lattice at " + c.edge.to_string());
    if (c.edge == petal_generator_edge(spec, c.petal))
      expect(petal_generator_test(spec, c.petal) == oracle_gen,
             "petal generator test vs oracle at petal " + std::to_string(c.petal));
  }
  expect(exists_generating_edge(spec) == any_generator, "generating edge existence vs oracle");
  return failed;
}

const SweepFailure* SweepSummary::minimal_failure() const {
  const SweepFailure* best = nullptr;
  std::size_t best_edges = 0;
  for (const auto& f : failures) {
    // Counted from the spec so that invalid specs can still be ranked.
    std::size_t edges = f.spec.petals.size();
    for (const auto& petal : f.spec.petals)
      for (int k : petal.ks) edges += static_cast<std::size_t>(std::max(k - 1, 0));
    if (!best || edges < best_edges) {
      best = &f;
      best_edges = edges;
    }
  }
  return best;
}

SweepSummary run_checks(const std::vector<FlowerSpec>& specs, unsigned jobs) {
  std::vector<std::vector<std::string>> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        results[i] = check_flower(specs[i]);
      } catch (const std::exception& e) {
        results[i] = {std::string("exception: ") + e.what()};
      }
    }
  };
  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
  }

  SweepSummary summary;
  summary.instances = specs.size();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (results[i].empty()) {
      ++summary.passed;
    } else {
      summary.failures.push_back({specs[i], std::move(results[i])});
    }
  }
  std::sort(summary.failures.begin(), summary.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) { return a.spec < b.spec; });
  return summary;
}

SweepSummary run_sweep(const SweepOptions& opts) { return run_checks(enumerate_flowers(opts), opts.jobs); }

}  // namespace sandflower
