#include "sandflower/abelian_group.hpp"

#include <cctype>

#include "sandflower/error.hpp"

namespace sandflower {

AbelianGroup AbelianGroup::from_invariant_factors(std::span<const BigInt> factors) {
  AbelianGroup g;
  for (const auto& d : factors) {
    if (d < 1) throw Error(ErrorKind::BadParameters, "invariant factor below 1: " + d.get_str());
    if (d == 1) {
      if (!g.factors_.empty())
        throw Error(ErrorKind::BadParameters, "unit factor after a nontrivial one");
      continue;
    }
    if (!g.factors_.empty() && !divides(g.factors_.back(), d))
      throw Error(ErrorKind::BadParameters,
                  "divisibility chain broken at " + g.factors_.back().get_str() + " | " + d.get_str());
    g.factors_.push_back(d);
  }
  return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const BigInt> orders) {
  for (const auto& n : orders)
    if (n < 1) throw Error(ErrorKind::BadParameters, "cyclic order below 1: " + n.get_str());
  auto form = smith_normal_form(IntMatrix::diagonal(orders));
  return from_invariant_factors(form.diagonal);
}

BigInt AbelianGroup::order() const { return product_of(factors_); }

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " ⊕ ";
    out += "Z_" + factors_[i].get_str();
  }
  return out;
}

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  AbelianGroup run() {
    skip_space();
    if (consume('0')) {
      skip_space();
      expect_end();
      return {};
    }
    std::vector<BigInt> orders;
    while (true) {
      skip_space();
      if (!consume('Z') || !consume('_')) fail("expected 'Z_'");
      BigInt n = number();
      if (n < 2) fail("cyclic factors must have order at least 2");
      std::size_t power = 1;
      if (consume('^')) power = number().get_ui();
      for (std::size_t i = 0; i < power; ++i) orders.push_back(n);
      skip_space();
      if (at_end()) break;
      if (!consume_separator()) fail("expected '⊕' or '+'");
    }
    auto g = AbelianGroup::from_cyclic_orders(orders);
    // Only canonical (invariant-factor) text is accepted.
    if (g.factors() != orders) fail("factors are not in invariant-factor form");
    return g;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool consume_separator() {
    static constexpr std::string_view oplus = "⊕";
    if (consume('+')) return true;
    if (text_.substr(pos_, oplus.size()) == oplus) {
      pos_ += oplus.size();
      return true;
    }
    return false;
  }
  BigInt number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }
  void expect_end() {
    if (!at_end()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " in group '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AbelianGroup AbelianGroup::parse(std::string_view text) { return GroupParser(text).run(); }

AbelianGroup group_from_matrix(const IntMatrix& relations) {
  auto form = smith_normal_form(relations);
  if (form.rank < relations.cols())
    throw Error(ErrorKind::InfiniteGroup,
                "relation matrix has rank " + std::to_string(form.rank) + " on " +
                    std::to_string(relations.cols()) + " generators");
  return AbelianGroup::from_invariant_factors(form.diagonal);
}

}  // namespace sandflower
