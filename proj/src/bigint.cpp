#include "sandflower/bigint.hpp"

#include <vector>

namespace sandflower {

BigInt gcd_of(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

BigInt product_of(std::span<const BigInt> values) {
  BigInt p = 1;
  for (const auto& v : values) p *= v;
  return p;
}

BigInt gcd_of_k_products(std::span<const BigInt> values, std::size_t k) {
  const std::size_t n = values.size();
  if (k == 0) return 1;
  if (k > n) return 0;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  BigInt g = 0;
  while (true) {
    BigInt p = 1;
    for (auto i : idx) p *= values[i];
    g = gcd(g, p);
    if (g == 1) return g;
    // next combination in lexicographic order
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace sandflower
