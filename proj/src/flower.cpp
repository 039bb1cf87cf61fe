#include "sandflower/flower.hpp"

#include <algorithm>
#include <map>

#include "sandflower/chain.hpp"
#include "sandflower/error.hpp"

namespace sandflower {

BigInt flower_tau(std::span<const BigInt> p, std::span<const BigInt> q) {
  BigInt tau = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    BigInt term = q[i];
    for (std::size_t j = 0; j < p.size(); ++j)
      if (j != i) term *= p[j];
    tau += term;
  }
  return tau;
}

IntMatrix flower_relation_matrix(std::span<const BigInt> p, std::span<const BigInt> q) {
  const std::size_t t = p.size();
  IntMatrix r(t, t);
  for (std::size_t i = 0; i + 1 < t; ++i) {
    r(i, i) = p[i];
    r(i, i + 1) = -p[i + 1];
  }
  for (std::size_t j = 0; j < t; ++j) r(t - 1, j) = q[j];
  return r;
}

FlowerInvariants flower_invariants(const FlowerSpec& spec) {
  spec.validate();
  FlowerInvariants inv;
  for (const auto& petal : spec.petals) {
    // The petal hangs off its e_0, so q is the contraction at e_0.
    const ChainInvariants c = chain_invariants(petal);
    inv.p.push_back(c.tau());
    inv.q.push_back(c.tau_e0.back());
  }
  inv.tau = flower_tau(inv.p, inv.q);
  inv.relation = flower_relation_matrix(inv.p, inv.q);
  return inv;
}

AbelianGroup group_from_products(std::span<const BigInt> p, const BigInt& tau) {
  const std::size_t t = p.size();
  std::vector<BigInt> factors;
  BigInt previous = 1;
  for (std::size_t k = 1; k + 2 <= t; ++k) {
    BigInt d = gcd_of_k_products(p, k);
    factors.push_back(d / previous);
    previous = std::move(d);
  }
  factors.push_back(tau / previous);
  return AbelianGroup::from_invariant_factors(factors);
}

AbelianGroup group_structure(const FlowerSpec& spec) {
  const FlowerInvariants inv = flower_invariants(spec);
  return group_from_products(inv.p, inv.tau);
}

namespace {

// Pairwise coprime base for the entries above 1: every entry is a product of
// powers of base elements.
std::vector<BigInt> coprime_base(std::span<const BigInt> a) {
  std::vector<BigInt> base;
  for (const auto& x : a)
    if (abs(x) > 1) base.push_back(abs(x));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        BigInt g = gcd(base[i], base[j]);
        if (g == 1) continue;
        changed = true;
        if (base[i] == base[j]) {
          base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
          break;
        }
        BigInt x = base[i] / g;
        BigInt y = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (BigInt* v : {&g, &x, &y})
          if (*v > 1) base.push_back(std::move(*v));
      }
  }
  return base;
}

}  // namespace

std::size_t m_value(std::span<const BigInt> a) {
  std::size_t best = 1;
  for (const auto& b : coprime_base(a)) {
    const auto hits = static_cast<std::size_t>(
        std::count_if(a.begin(), a.end(), [&](const BigInt& x) { return gcd(x, b) != 1; }));
    best = std::max(best, hits);
  }
  return best;
}

std::size_t min_generators(const FlowerSpec& spec) {
  const std::size_t m = m_value(flower_invariants(spec).p);
  return m == 1 ? 1 : m - 1;
}

bool is_cyclic(const FlowerSpec& spec) { return m_value(flower_invariants(spec).p) <= 2; }

AbelianGroup equal_petal_group(const FlowerSpec& spec) {
  const FlowerInvariants inv = flower_invariants(spec);
  std::optional<BigInt> a;
  BigInt q_sum = 0;
  std::size_t s = 0;
  for (std::size_t i = 0; i < inv.p.size(); ++i) {
    if (spec.petals[i].trivial()) continue;
    if (a && *a != inv.p[i])
      throw Error(ErrorKind::UnequalPetals,
                  "petal tau values " + a->get_str() + " and " + inv.p[i].get_str() + " differ");
    a = inv.p[i];
    q_sum += inv.q[i];
    ++s;
  }
  // Fewer than two petals: the group is cyclic of order tau(F).
  if (s < 2) return AbelianGroup::from_cyclic_orders(std::vector<BigInt>{inv.tau});
  const BigInt r = static_cast<long>(inv.p.size() - s) * *a + q_sum;
  std::vector<BigInt> factors(s - 2, *a);
  factors.push_back(r * *a);
  return AbelianGroup::from_invariant_factors(factors);
}

EdgeLabel petal_generator_edge(const FlowerSpec& spec, std::size_t petal) {
  spec.validate();
  if (petal >= spec.petals.size())
    throw Error(ErrorKind::BadIndex, "petal " + std::to_string(petal) + " out of range");
  const auto& chain = spec.petals[petal];
  if (chain.trivial()) return EdgeLabel::center(static_cast<int>(petal));
  return EdgeLabel::boundary(static_cast<int>(chain.polygons()), static_cast<int>(petal));
}

namespace {

std::vector<BigInt> without_index(std::span<const BigInt> p, std::size_t skip) {
  std::vector<BigInt> rest;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != skip) rest.push_back(p[j]);
  return rest;
}

// Shared state for classifying many edges of one flower.
class FlowerEdgeClassifier {
 public:
  explicit FlowerEdgeClassifier(const FlowerSpec& spec)
      : spec_(spec), inv_(flower_invariants(spec)), smith_(smith_decompose(inv_.relation)) {
    for (std::size_t i = 0; i < inv_.p.size(); ++i)
      petal_ok_.push_back(m_value(without_index(inv_.p, i)) == 1);
  }

  bool petal_generates(std::size_t i) const { return petal_ok_.at(i); }

  BigInt generator_order(std::size_t i) const {
    std::vector<BigInt> unit(inv_.p.size());
    unit.at(i) = 1;
    return cokernel_order(smith_, unit);
  }

  EdgeClass classify(const EdgeLabel& e) const {
    const std::size_t t = spec_.petals.size();
    const int raw = e.kind == EdgeKind::Center ? e.index : e.petal;
    if (raw < 0 || static_cast<std::size_t>(raw) >= t)
      throw Error(ErrorKind::UnknownEdge, e.to_string() + " is not an edge of this flower");
    const auto i = static_cast<std::size_t>(raw);
    EdgeLabel label = e;
    if (e.kind == EdgeKind::Boundary && e.index == 0) label = EdgeLabel::center(raw);

    BigInt a;
    const ChainSpec& petal = spec_.petals[i];
    if (label.kind == EdgeKind::Center) {
      a = inv_.q[i];
    } else {
      const auto table = edge_coefficients(petal, ChainBase::Head, raw);
      auto it = table.find(label);
      if (it == table.end()) throw Error(ErrorKind::UnknownEdge, e.to_string() + " is not an edge of this flower");
      a = it->second;
    }
    const BigInt ord_f = generator_order(i);
    EdgeClass out;
    out.edge = label;
    out.petal = i;
    out.order = ord_f / gcd(a, ord_f);
    out.generator = petal_ok_[i] && gcd(a, inv_.tau) == 1;
    out.coefficient = std::move(a);
    return out;
  }

 private:
  const FlowerSpec& spec_;
  FlowerInvariants inv_;
  SmithDecomposition smith_;
  std::vector<bool> petal_ok_;
};

}  // namespace

bool petal_generator_test(const FlowerSpec& spec, std::size_t petal) {
  const FlowerInvariants inv = flower_invariants(spec);
  if (petal >= inv.p.size()) throw Error(ErrorKind::BadIndex, "petal " + std::to_string(petal) + " out of range");
  return m_value(without_index(inv.p, petal)) == 1;
}

bool exists_generating_edge(const FlowerSpec& spec) {
  const FlowerInvariants inv = flower_invariants(spec);
  for (std::size_t i = 0; i < inv.p.size(); ++i)
    if (m_value(without_index(inv.p, i)) == 1) return true;
  return false;
}

BigInt petal_generator_order(const FlowerSpec& spec, std::size_t petal) {
  spec.validate();
  if (petal >= spec.petals.size()) throw Error(ErrorKind::BadIndex, "petal " + std::to_string(petal) + " out of range");
  return FlowerEdgeClassifier(spec).generator_order(petal);
}

EdgeClass classify_edge(const FlowerSpec& spec, const EdgeLabel& e) {
  return FlowerEdgeClassifier(spec).classify(e);
}

std::vector<EdgeClass> classify_all_edges(const FlowerSpec& spec) {
  const FlowerEdgeClassifier classifier(spec);
  std::vector<EdgeClass> out;
  const Multigraph g = build_flower(spec);
  for (const auto& e : g.edges()) out.push_back(classifier.classify(e.label));
  return out;
}

FlowerSpec thick_cycle_spec(std::span<const int> ns) {
  if (ns.size() < 2) throw Error(ErrorKind::BadParameters, "thick cycle needs at least two multiplicities");
  FlowerSpec spec{static_cast<int>(ns.size()), {}};
  for (int n : ns) {
    if (n < 1) throw Error(ErrorKind::BadParameters, "edge multiplicity below 1");
    spec.petals.push_back(ChainSpec{std::vector<int>(static_cast<std::size_t>(n - 1), 2)});
  }
  return spec;
}

AbelianGroup thick_cycle_group(std::span<const int> ns) {
  thick_cycle_spec(ns);
  std::vector<BigInt> n(ns.begin(), ns.end());
  const std::vector<BigInt> ones(n.size(), BigInt(1));
  return group_from_products(n, flower_tau(n, ones));
}

namespace {

void check_sunflower(int t, int s, int r, int n) {
  if (t < 2 || s < 0 || s > t || r < 2 || n < 1)
    throw Error(ErrorKind::BadParameters, "sunflower needs t >= 2, 0 <= s <= t, r >= 2, n >= 1");
}

}  // namespace

FlowerSpec sunflower_spec(int t, int s, int r, int n) {
  check_sunflower(t, s, r, n);
  FlowerSpec spec{t, {}};
  for (int i = 0; i < t; ++i)
    spec.petals.push_back(i < s ? ChainSpec{std::vector<int>(static_cast<std::size_t>(n), r)} : ChainSpec{});
  return spec;
}

AbelianGroup sunflower_group(int t, int s, int r, int n) {
  check_sunflower(t, s, r, n);
  const ChainInvariants c = regular_chain_invariants(r, n);
  const BigInt& tau = c.tau();
  const BigInt& tau_e = c.tau_free_contract();
  if (s < 2) {
    const BigInt order = static_cast<long>(t - s) * tau + tau_e;
    return AbelianGroup::from_cyclic_orders(std::vector<BigInt>{s == 0 ? BigInt(t) : order});
  }
  std::vector<BigInt> factors(static_cast<std::size_t>(s - 2), tau);
  factors.push_back((s * tau_e + static_cast<long>(t - s) * tau) * tau);
  return AbelianGroup::from_invariant_factors(factors);
}

}  // namespace sandflower
