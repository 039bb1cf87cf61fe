#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sandflower/bigint.hpp"
#include "sandflower/int_matrix.hpp"

namespace sandflower {

// Finite abelian group in invariant-factor form Z_{d_1} + ... + Z_{d_r},
// with every d_i >= 2 and d_i | d_{i+1}.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Accepts a divisibility chain possibly padded with leading 1s, which are
  // dropped. Throws BadParameters if the chain is broken or an entry < 1.
  static AbelianGroup from_invariant_factors(std::span<const BigInt> factors);

  // Any direct sum of cyclic groups Z_{n_1} + ... + Z_{n_k}, n_i >= 1,
  // brought to invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::span<const BigInt> orders);

  // "Z_3 ⊕ Z_18"; the trivial group prints as "0". Also accepts the
  // ASCII separator '+' and powers "Z_3^2".
  static AbelianGroup parse(std::string_view text);

  const std::vector<BigInt>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }
  BigInt order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<BigInt> factors_;
};

// Group presented by the rows of `relations` as relations on its columns.
// Throws InfiniteGroup when the relations have rank below the column count.
AbelianGroup group_from_matrix(const IntMatrix& relations);

}  // namespace sandflower
