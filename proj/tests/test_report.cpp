#include <doctest.h>

#include <set>

#include "sandflower/error.hpp"
#include "sandflower/flower.hpp"
#include "sandflower/report.hpp"
#include "sandflower/spec_io.hpp"
#include "sandflower/sweep.hpp"
#include "test_support.hpp"

using namespace sandflower;

namespace {

const FlowerSpec kThreeTriangles{3, {ChainSpec{{3}}, ChainSpec{{3}}, ChainSpec{{3}}}};

// Brute-force canonical class count: sequences of petal indices up to
// rotation (and optionally reflection).
std::size_t count_classes(std::size_t petals, std::size_t t, bool reflect) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> seq(t, 0);
  while (true) {
    std::vector<std::size_t> best = seq;
    for (int flip = 0; flip < (reflect ? 2 : 1); ++flip) {
      std::vector<std::size_t> s = seq;
      if (flip) std::reverse(s.begin(), s.end());
      for (std::size_t r = 0; r < t; ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        best = std::min(best, s);
      }
    }
    seen.insert(best);
    std::size_t pos = t;
    while (pos > 0 && seq[pos - 1] + 1 == petals) seq[--pos] = 0;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return seen.size();
}

}  // namespace

TEST_CASE("chain report") {
  const Report r = chain_report(ChainSpec{{4, 4, 4, 4}}, {.edges = true, .partitions = false, .verify = true});
  CHECK(r.kind == "chain");
  CHECK(r.tau == 209);
  CHECK(r.group.to_string() == "Z_209");
  CHECK(r.mu == 1);
  CHECK(r.cyclic);
  CHECK_FALSE(r.generating_edge_exists.has_value());
  CHECK(r.edges.size() == 13);
  CHECK(r.verified());
  CHECK_FALSE(r.oracle.empty());
  const std::string text = to_text(r);
  CHECK(text.find("group: Z_209, mu=1, cyclic=yes") != std::string::npos);
  CHECK(text.find("oracle: OK") != std::string::npos);
}

TEST_CASE("flower report") {
  const Report r = flower_report(kThreeTriangles, {.edges = true, .partitions = true, .verify = true});
  CHECK(r.kind == "flower");
  CHECK(r.group.to_string() == "Z_3 ⊕ Z_18");
  CHECK(r.mu == 2);
  CHECK_FALSE(r.cyclic);
  CHECK(r.generating_edge_exists == false);
  CHECK(r.partitions.size() == 1);
  CHECK(r.verified());
  CHECK(to_text(r).find("group: Z_3 ⊕ Z_18, mu=2, cyclic=no") != std::string::npos);
  CHECK(to_text(r).find("generating edge exists: no") != std::string::npos);

  const Report quiet = flower_report(kThreeTriangles, {});
  CHECK(quiet.edges.empty());
  CHECK(quiet.partitions.empty());
  CHECK(quiet.oracle.empty());
}

TEST_CASE("json report schema") {
  const Report chain = chain_report(ChainSpec{{3, 4}}, {.edges = true, .partitions = false, .verify = true});
  const Report flower = flower_report(kThreeTriangles, {.edges = true, .partitions = true, .verify = true});
  std::set<std::string> keys;
  const auto chain_json = to_json(chain);
  for (const auto& [k, v] : chain_json.items()) keys.insert(k);
  for (const auto* r : {&chain, &flower}) {
    const auto j = to_json(*r);
    std::set<std::string> these;
    for (const auto& [k, v] : j.items()) these.insert(k);
    CHECK(these == keys);
    CHECK(AbelianGroup::parse(j.at("group").at("display").get<std::string>()) == r->group);
  }
  for (const char* k : {"kind", "tau", "group", "mu", "cyclic", "edges", "partitions", "oracle"}) CHECK(keys.contains(k));
  CHECK(to_json(flower).at("generating_edge_exists") == false);
  CHECK(to_json(flower).at("tau") == 54);
}

TEST_CASE("big values survive json") {
  const Report r = chain_report(ChainSpec{std::vector<int>(40, 9)}, {});
  const auto j = to_json(r);
  CHECK(j.at("tau").is_string());
  CHECK(BigInt(j.at("tau").get<std::string>()) == r.tau);
}

TEST_CASE("group display round trip over many flowers") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Report r = flower_report(testsupport::random_flower(rng, 2, 6, 3, 6), {});
    CHECK(AbelianGroup::parse(r.group.to_string()).factors() == r.group.factors());
  }
}

TEST_CASE("sweep enumeration") {
  const auto petals = enumerate_petals(2, 4);
  CHECK(petals.size() == 13);
  CHECK(petals.front().trivial());

  const SweepOptions rot{.max_t = 3, .max_polys = 1, .max_k = 3, .jobs = 1, .dedup = SweepDedup::Rotation};
  const SweepOptions dih{.max_t = 3, .max_polys = 1, .max_k = 3, .jobs = 1, .dedup = SweepDedup::Dihedral};
  const std::size_t n = enumerate_petals(1, 3).size();
  CHECK(enumerate_flowers(rot).size() == count_classes(n, 2, false) + count_classes(n, 3, false));
  CHECK(enumerate_flowers(dih).size() == count_classes(n, 2, true) + count_classes(n, 3, true));

  const SweepOptions four{.max_t = 4, .max_polys = 2, .max_k = 3, .jobs = 1, .dedup = SweepDedup::Rotation};
  const std::size_t m = enumerate_petals(2, 3).size();
  std::size_t expect = 0;
  for (std::size_t t = 2; t <= 4; ++t) expect += count_classes(m, t, false);
  const auto specs = enumerate_flowers(four);
  CHECK(specs.size() == expect);
  CHECK(std::is_sorted(specs.begin(), specs.end()));
  CHECK_THROWS_AS((void)enumerate_flowers(SweepOptions{.max_t = 1}), Error);
}

TEST_CASE("sweep checks pass and do not depend on worker count") {
  const SweepOptions opts{.max_t = 3, .max_polys = 1, .max_k = 4, .jobs = 1, .dedup = SweepDedup::Dihedral};
  const auto specs = enumerate_flowers(opts);
  const SweepSummary one = run_checks(specs, 1);
  const SweepSummary three = run_checks(specs, 3);
  CHECK(one.instances == specs.size());
  CHECK(one.passed == one.instances);
  CHECK(one.failures.empty());
  CHECK(one.minimal_failure() == nullptr);
  CHECK(three.passed == one.passed);
  CHECK(check_flower(kThreeTriangles).empty());
}

TEST_CASE("invalid specs are reported as sweep failures") {
  const SweepSummary s = run_checks({kThreeTriangles, FlowerSpec{3, {ChainSpec{{1}}, ChainSpec{}, ChainSpec{}}}}, 2);
  CHECK(s.instances == 2);
  CHECK(s.passed == 1);
  REQUIRE(s.failures.size() == 1);
  REQUIRE(s.minimal_failure() != nullptr);
}
