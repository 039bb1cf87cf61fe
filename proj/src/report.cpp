#include "sandflower/report.hpp"

#include <sstream>

#include "sandflower/chain.hpp"
#include "sandflower/oracle.hpp"

namespace sandflower {

using nlohmann::json;

bool Report::verified() const {
  for (const auto& [name, ok] : oracle)
    if (!ok) return false;
  return true;
}

Report chain_report(const ChainSpec& spec, const ReportOptions& opts) {
  const ChainInvariants inv = chain_invariants(spec);
  Report r;
  r.kind = "chain";
  r.tau = inv.tau();
  r.tau_sequence = inv.taus;
  r.group = AbelianGroup::from_cyclic_orders(std::vector<BigInt>{inv.tau()});
  r.mu = r.group.rank();
  r.cyclic = true;

  if (opts.edges || opts.verify) {
    for (const auto& [label, c] : edge_coefficients(spec, ChainBase::Tail)) {
      EdgeRow row{label, c, edge_order(spec, label), is_generating_edge_chain(spec, label)};
      r.edges.push_back(std::move(row));
    }
  }
  if (opts.verify) {
    const Multigraph g = build_chain(spec);
    r.oracle["tau_matrix_tree"] = tau_matrix_tree(g) == r.tau;
    r.oracle["group_laplacian"] = sandpile_group_laplacian(g) == r.group;
    r.oracle["group_cycle_cut"] = sandpile_group_cycle_cut(g) == r.group;
    const EdgeLatticePresentation lattice(g);
    bool orders = true, generators = true;
    for (const auto& row : r.edges) {
      orders = orders && lattice.order_of_edge(row.edge) == row.order;
      generators = generators && edge_generator_oracle(g, row.edge) == row.generator;
    }
    r.oracle["edge_orders"] = orders;
    r.oracle["edge_generators"] = generators;
    if (!spec.trivial()) {
      const auto e0 = EdgeLabel::boundary(0);
      const auto en = EdgeLabel::boundary(static_cast<int>(spec.polygons()));
      const std::vector<EdgeLabel> both{e0, en};
      const BigInt value = tau_with_contracted(g, std::vector<EdgeLabel>{e0}) *
                               tau_with_contracted(g, std::vector<EdgeLabel>{en}) -
                           tau_matrix_tree(g) * tau_with_contracted(g, both);
      r.oracle["two_end_identity"] = value == 1 && two_end_identity(spec) == 1;
    }
  }
  if (!opts.edges) r.edges.clear();
  return r;
}

Report flower_report(const FlowerSpec& spec, const ReportOptions& opts) {
  const FlowerInvariants inv = flower_invariants(spec);
  Report r;
  r.kind = "flower";
  r.tau = inv.tau;
  r.group = group_structure(spec);
  r.mu = min_generators(spec);
  r.cyclic = is_cyclic(spec);
  r.generating_edge_exists = exists_generating_edge(spec);

  if (opts.edges || opts.verify) {
    for (auto& c : classify_all_edges(spec)) r.edges.push_back(EdgeRow{c.edge, c.coefficient, c.order, c.generator});
  }
  if (opts.partitions || opts.verify) {
    for (const auto& parts : prime_partitions(inv.p)) {
      PartitionRow row;
      row.partition = make_prime_partition(inv, parts);
      row.reduced = flower_relation_matrix(row.partition.alphas, row.partition.betas);
      row.group = group_via_partition(spec, parts);
      row.mu = min_generators_via_partition(spec, parts);
      r.partitions.push_back(std::move(row));
    }
  }
  if (opts.verify) {
    const Multigraph g = build_flower(spec);
    const BigInt tau_g = tau_matrix_tree(g);
    const AbelianGroup lap = sandpile_group_laplacian(g);
    r.oracle["tau_matrix_tree"] = tau_g == r.tau;
    r.oracle["det_relation"] = abs(determinant(inv.relation)) == r.tau;
    r.oracle["group_laplacian"] = lap == r.group;
    r.oracle["group_cycle_cut"] = sandpile_group_cycle_cut(g) == r.group;
    r.oracle["mu"] = lap.rank() == r.mu && lap.is_cyclic() == r.cyclic;
    bool parts_ok = !r.partitions.empty();
    for (const auto& row : r.partitions) parts_ok = parts_ok && row.group == r.group && row.mu == r.mu;
    r.oracle["partitions"] = parts_ok;
    const EdgeLatticePresentation lattice(g);
    bool orders = true, generators = true, any_generator = false;
    for (const auto& row : r.edges) {
      const bool oracle_gen = edge_generator_oracle(g, row.edge);
      any_generator = any_generator || oracle_gen;
      orders = orders && lattice.order_of_edge(row.edge) == row.order;
      generators = generators && oracle_gen == row.generator;
    }
    r.oracle["edge_orders"] = orders;
    r.oracle["edge_generators"] = generators && any_generator == *r.generating_edge_exists;
  }
  if (!opts.edges) r.edges.clear();
  if (!opts.partitions) r.partitions.clear();
  return r;
}

namespace {

json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json big_list(const std::vector<BigInt>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(big(v));
  return out;
}

}  // namespace

json to_json(const Report& report) {
  json j;
  j["kind"] = report.kind;
  j["tau"] = big(report.tau);
  j["tau_sequence"] = big_list(report.tau_sequence);
  j["group"] = {{"factors", big_list(report.group.factors())}, {"display", report.group.to_string()}};
  j["mu"] = report.mu;
  j["cyclic"] = report.cyclic;
  j["generating_edge_exists"] = report.generating_edge_exists ? json(*report.generating_edge_exists) : json(nullptr);
  j["edges"] = json::array();
  for (const auto& row : report.edges)
    j["edges"].push_back({{"edge", row.edge.to_string()},
                          {"coefficient", big(row.coefficient)},
                          {"order", big(row.order)},
                          {"generator", row.generator}});
  j["partitions"] = json::array();
  for (const auto& row : report.partitions) {
    std::vector<std::vector<std::size_t>> parts = row.partition.parts;
    json reduced = json::array();
    for (std::size_t i = 0; i < row.reduced.rows(); ++i) {
      json line = json::array();
      for (std::size_t c = 0; c < row.reduced.cols(); ++c) line.push_back(big(row.reduced(i, c)));
      reduced.push_back(std::move(line));
    }
    j["partitions"].push_back({{"parts", parts},
                               {"alphas", big_list(row.partition.alphas)},
                               {"betas", big_list(row.partition.betas)},
                               {"reduced_matrix", reduced},
                               {"group", row.group.to_string()},
                               {"mu", row.mu}});
  }
  j["oracle"] = report.oracle;
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  if (!report.tau_sequence.empty()) {
    out << "tau sequence:";
    for (const auto& t : report.tau_sequence) out << ' ' << t;
    out << '\n';
  }
  out << "tau = " << report.tau << '\n';
  out << "group: " << report.group.to_string() << ", mu=" << report.mu
      << ", cyclic=" << (report.cyclic ? "yes" : "no") << '\n';
  if (report.generating_edge_exists)
    out << "generating edge exists: " << (*report.generating_edge_exists ? "yes" : "no") << '\n';
  if (!report.edges.empty()) {
    out << "edge\tcoefficient\torder\tgenerator\n";
    for (const auto& row : report.edges)
      out << row.edge.to_string() << '\t' << row.coefficient << '\t' << row.order << '\t'
          << (row.generator ? "yes" : "no") << '\n';
  }
  for (const auto& row : report.partitions) {
    out << "prime partition:";
    for (const auto& part : row.partition.parts) {
      out << " {";
      for (std::size_t i = 0; i < part.size(); ++i) out << (i ? "," : "") << part[i];
      out << '}';
    }
    out << "  group " << row.group.to_string() << ", mu=" << row.mu << '\n';
    out << "reduced relation matrix:\n";
    for (std::size_t i = 0; i < row.reduced.rows(); ++i) {
      out << ' ';
      for (std::size_t c = 0; c < row.reduced.cols(); ++c) out << ' ' << row.reduced(i, c);
      out << '\n';
    }
  }
  if (!report.oracle.empty()) {
    for (const auto& [name, ok] : report.oracle) out << "  " << name << ": " << (ok ? "ok" : "MISMATCH") << '\n';
    out << "oracle: " << (report.verified() ? "OK" : "MISMATCH") << '\n';
  }
  return out.str();
}

}  // namespace sandflower
