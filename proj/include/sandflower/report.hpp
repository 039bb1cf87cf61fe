#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sandflower/abelian_group.hpp"
#include "sandflower/flower.hpp"
#include "sandflower/graph.hpp"

namespace sandflower {

struct EdgeRow {
  EdgeLabel edge;
  BigInt coefficient;  // relative to e_0 for chains, to f_petal for flowers
  BigInt order;
  bool generator = false;
};

struct PartitionRow {
  PrimePartition partition;
  IntMatrix reduced;
  AbelianGroup group;
  std::size_t mu = 0;
};

struct Report {
  std::string kind;  // "chain" or "flower"
  BigInt tau;
  std::vector<BigInt> tau_sequence;  // chains only: tau(G_0), ..., tau(G_n)
  AbelianGroup group;
  std::size_t mu = 0;
  bool cyclic = true;
  std::optional<bool> generating_edge_exists;  // flowers only
  std::vector<EdgeRow> edges;
  std::vector<PartitionRow> partitions;
  std::map<std::string, bool> oracle;  // check name -> agreement

  bool verified() const;
};

struct ReportOptions {
  bool edges = false;
  bool partitions = false;
  bool verify = false;
};

Report chain_report(const ChainSpec& spec, const ReportOptions& opts);
Report flower_report(const FlowerSpec& spec, const ReportOptions& opts);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace sandflower
