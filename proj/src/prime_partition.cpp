#include <algorithm>

#include "sandflower/error.hpp"
#include "sandflower/flower.hpp"

namespace sandflower {

namespace {

BigInt part_product(std::span<const BigInt> a, const std::vector<std::size_t>& part) {
  BigInt alpha = 1;
  for (auto j : part) alpha *= a[j];
  return alpha;
}

bool parts_pairwise_linked(std::span<const BigInt> a, const Parts& parts) {
  std::vector<BigInt> alphas;
  for (const auto& part : parts) alphas.push_back(part_product(a, part));
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (gcd(alphas[i], alphas[j]) == 1) return false;
  return true;
}

// Depth-first over set partitions in restricted-growth order. A new index
// only joins a part whose members it is coprime to.
class PartitionSearch {
 public:
  PartitionSearch(std::span<const BigInt> a, bool minimum_only) : a_(a), minimum_only_(minimum_only) {
    if (a.size() > kMaxPartitionSearch)
      throw Error(ErrorKind::BadParameters, "prime partition search is limited to " +
                                                std::to_string(kMaxPartitionSearch) + " entries");
  }

  std::vector<Parts> run() {
    if (a_.empty()) return {};
    place(0);
    if (minimum_only_) {
      std::erase_if(found_, [&](const Parts& p) { return p.size() != best_; });
    }
    return found_;
  }

 private:
  void place(std::size_t i) {
    if (minimum_only_ && current_.size() > best_) return;
    if (i == a_.size()) {
      if (!parts_pairwise_linked(a_, current_)) return;
      best_ = std::min(best_, current_.size());
      found_.push_back(current_);
      return;
    }
    // Indexed access: deeper calls may grow current_ and move its parts.
    for (std::size_t k = 0; k < current_.size(); ++k) {
      const auto& part = current_[k];
      const bool fits = std::all_of(part.begin(), part.end(),
                                    [&](std::size_t j) { return gcd(a_[i], a_[j]) == 1; });
      if (!fits) continue;
      current_[k].push_back(i);
      place(i + 1);
      current_[k].pop_back();
    }
    current_.push_back({i});
    place(i + 1);
    current_.pop_back();
  }

  std::span<const BigInt> a_;
  bool minimum_only_;
  std::size_t best_ = static_cast<std::size_t>(-1);
  Parts current_;
  std::vector<Parts> found_;
};

void check_cover(std::size_t t, const Parts& parts) {
  std::vector<int> seen(t, 0);
  for (const auto& part : parts) {
    if (part.empty()) throw Error(ErrorKind::InvalidPartition, "empty part");
    for (auto j : part) {
      if (j >= t) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(j) + " out of range");
      if (seen[j]++) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(j) + " repeated");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(ErrorKind::InvalidPartition, "parts do not cover every petal");
}

}  // namespace

bool is_prime_partition(std::span<const BigInt> a, const Parts& parts) {
  try {
    check_cover(a.size(), parts);
  } catch (const Error&) {
    return false;
  }
  for (const auto& part : parts)
    for (std::size_t x = 0; x < part.size(); ++x)
      for (std::size_t y = x + 1; y < part.size(); ++y)
        if (gcd(a[part[x]], a[part[y]]) != 1) return false;
  return parts_pairwise_linked(a, parts);
}

std::vector<Parts> prime_partitions(std::span<const BigInt> a) { return PartitionSearch(a, true).run(); }

std::vector<Parts> all_prime_partitions(std::span<const BigInt> a) { return PartitionSearch(a, false).run(); }

PrimePartition make_prime_partition(const FlowerInvariants& inv, const Parts& parts) {
  check_cover(inv.p.size(), parts);
  if (!is_prime_partition(inv.p, parts))
    throw Error(ErrorKind::InvalidPartition, "parts are not internally coprime or not pairwise linked");
  PrimePartition out;
  for (auto part : parts) {
    std::sort(part.begin(), part.end());
    std::vector<BigInt> p, q;
    for (auto j : part) {
      p.push_back(inv.p[j]);
      q.push_back(inv.q[j]);
    }
    out.alphas.push_back(product_of(p));
    out.betas.push_back(flower_tau(p, q));
    out.parts.push_back(std::move(part));
  }
  return out;
}

IntMatrix reduced_relation_matrix(const FlowerSpec& spec, const Parts& parts) {
  const PrimePartition pp = make_prime_partition(flower_invariants(spec), parts);
  return flower_relation_matrix(pp.alphas, pp.betas);
}

AbelianGroup group_via_partition(const FlowerSpec& spec, const Parts& parts) {
  const FlowerInvariants inv = flower_invariants(spec);
  const PrimePartition pp = make_prime_partition(inv, parts);
  return group_from_products(pp.alphas, inv.tau);
}

std::size_t min_generators_via_partition(const FlowerSpec& spec, const Parts& parts) {
  const PrimePartition pp = make_prime_partition(flower_invariants(spec), parts);
  const std::size_t k = pp.alphas.size();
  // A single part means pairwise coprime petals and a cyclic group.
  if (k == 1) return 1;
  std::size_t k0 = 0;
  for (std::size_t i = 1; i + 2 <= k; ++i)
    if (gcd_of_k_products(pp.alphas, i) == 1) k0 = i;
  return k - 1 - k0;
}

}  // namespace sandflower
