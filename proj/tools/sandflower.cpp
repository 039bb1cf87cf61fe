// Command-line front end: chain and flower reports, verification sweeps, SNF.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sandflower/error.hpp"
#include "sandflower/flower.hpp"
#include "sandflower/report.hpp"
#include "sandflower/spec_io.hpp"
#include "sandflower/sweep.hpp"

namespace {

using namespace sandflower;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitPartition = 4;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int emit(const Report& report, bool json) {
  if (json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << to_text(report);
  }
  return report.verified() ? kExitOk : kExitMismatch;
}

struct ChainArgs {
  std::string ks;
  bool edges = false;
  bool verify = false;
  bool json = false;
};

int run_chain(const ChainArgs& a) {
  const ChainSpec spec = parse_ks(a.ks);
  return emit(chain_report(spec, {.edges = a.edges, .partitions = false, .verify = a.verify}), a.json);
}

struct FlowerArgs {
  std::string spec_path;
  bool mu = false;
  bool generators = false;
  bool partition = false;
  std::string with_partition;
  bool verify = false;
  bool json = false;
};

int run_flower(const FlowerArgs& a) {
  const SpecFile file = parse_spec_text(read_file(a.spec_path));
  if (const auto* chain = std::get_if<ChainSpec>(&file)) {
    return emit(chain_report(*chain, {.edges = a.generators, .partitions = false, .verify = a.verify}), a.json);
  }
  const FlowerSpec& spec = std::get<FlowerSpec>(file);
  Report report = flower_report(spec, {.edges = a.generators, .partitions = a.partition, .verify = a.verify});

  std::optional<PartitionRow> custom;
  if (!a.with_partition.empty()) {
    const Parts parts = parse_parts(a.with_partition);
    const FlowerInvariants inv = flower_invariants(spec);
    PartitionRow row;
    row.partition = make_prime_partition(inv, parts);
    row.reduced = reduced_relation_matrix(spec, parts);
    row.group = group_via_partition(spec, parts);
    row.mu = min_generators_via_partition(spec, parts);
    report.oracle["custom_partition"] = row.group == report.group && row.mu == report.mu;
    report.partitions.push_back(std::move(row));
  }

  const int code = emit(report, a.json);
  if (!a.json) {
    if (a.mu) {
      const FlowerInvariants inv = flower_invariants(spec);
      std::cout << "p =";
      for (const auto& v : inv.p) std::cout << ' ' << v;
      std::cout << "\nm(p) = " << m_value(inv.p) << '\n';
    }
    if (a.generators) {
      for (std::size_t i = 0; i < spec.petals.size(); ++i)
        std::cout << "petal " << i << " generator " << petal_generator_edge(spec, i).to_string() << ": "
                  << (petal_generator_test(spec, i) ? "generates" : "does not generate") << '\n';
    }
  }
  return code;
}

struct SweepArgs {
  SweepOptions opts;
  std::string dedup = "dihedral";
};

int run_sweep_cmd(SweepArgs a) {
  a.opts.dedup = a.dedup == "rotation" ? SweepDedup::Rotation : SweepDedup::Dihedral;
  const SweepSummary s = run_sweep(a.opts);
  if (s.failures.empty()) {
    std::cout << "all " << s.instances << " instances OK\n";
    return kExitOk;
  }
  std::cout << s.passed << " of " << s.instances << " instances OK, " << s.failures.size() << " failed\n";
  constexpr std::size_t kListed = 20;
  for (std::size_t i = 0; i < std::min(kListed, s.failures.size()); ++i)
    std::cout << "FAIL " << encode(s.failures[i].spec) << '\n';
  if (s.failures.size() > kListed) std::cout << "... " << s.failures.size() - kListed << " more\n";
  const SweepFailure* minimal = s.minimal_failure();
  std::cout << "minimal failing spec: " << to_json(minimal->spec).dump() << '\n';
  for (const auto& check : minimal->checks) std::cout << "  " << check << '\n';
  return kExitMismatch;
}

int run_snf(const std::string& path) {
  std::istringstream in(read_file(path));
  const IntMatrix m = parse_matrix(in);
  const SmithForm f = smith_normal_form(m);
  for (std::size_t i = 0; i < f.diagonal.size(); ++i) std::cout << (i ? " " : "") << f.diagonal[i];
  std::cout << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandpile groups of polygon chains and polygon flowers"};
  app.require_subcommand(1);

  ChainArgs chain_args;
  auto* chain = app.add_subcommand("chain", "Spanning trees, group and edge orders of a polygon chain");
  chain->add_option("--ks", chain_args.ks, "Comma-separated polygon side counts")->required();
  chain->add_flag("--edges", chain_args.edges, "Print edge coefficients, orders and generator flags");
  chain->add_flag("--verify", chain_args.verify, "Compare against the matrix-tree and SNF oracles");
  chain->add_flag("--json", chain_args.json, "Emit the report as JSON");

  FlowerArgs flower_args;
  auto* flower = app.add_subcommand("flower", "Sandpile group of a polygon flower from a JSON spec");
  flower->add_option("--spec", flower_args.spec_path, "Spec file ('-' for stdin)")->required();
  flower->add_flag("--mu", flower_args.mu, "Show the petal tau vector and its m-value");
  flower->add_flag("--generators", flower_args.generators, "Classify every edge as generator or not");
  flower->add_flag("--partition", flower_args.partition, "List minimum prime partitions and reduced matrices");
  flower->add_option("--with-partition", flower_args.with_partition,
                     "Reduce with a given partition, e.g. '0,2|1,3' (0-based petals)");
  flower->add_flag("--verify", flower_args.verify, "Compare against the matrix-tree and SNF oracles");
  flower->add_flag("--json", flower_args.json, "Emit the report as JSON");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Check every formula against the oracles on all small flowers");
  sweep->add_option("--max-t", sweep_args.opts.max_t, "Largest center length")->required();
  sweep->add_option("--max-polys", sweep_args.opts.max_polys, "Most polygons per petal")->required();
  sweep->add_option("--max-k", sweep_args.opts.max_k, "Largest polygon side count")->required();
  sweep->add_option("--jobs", sweep_args.opts.jobs, "Worker threads");
  sweep->add_option("--dedup", sweep_args.dedup, "Petal sequence dedup: rotation or dihedral")
      ->check(CLI::IsMember({"rotation", "dihedral"}));

  std::string matrix_path;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", matrix_path, "Matrix file: 'rows cols' then entries ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*chain) return run_chain(chain_args);
    if (*flower) return run_flower(flower_args);
    if (*sweep) return run_sweep_cmd(sweep_args);
    if (*snf) return run_snf(matrix_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidPartition ? kExitPartition : kExitInput;
  }
  return kExitInput;
}
