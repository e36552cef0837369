// classgraph: conjugacy-class graphs of finite groups.
//
//   classgraph analyze sym:5 [--format human|json|dot]
//   classgraph verify --max-order 2000 [--families cyc,dih,...|all] [--jobs N] [--strict]
//   classgraph export prod(sym:3,heis:5) [--format dot|json] [--out DIR]
//
// Exit status: 0 when every check passes or is vacuous, 1 on any failure or
// counterexample, 2 on bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "classgraph/analysis.hpp"
#include "classgraph/catalog.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/report.hpp"
#include "classgraph/sweep.hpp"

namespace cg = classgraph;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string descriptor;
  std::size_t max_order = 2000;
  std::string families = "all";
  std::string format = "human";
  std::size_t jobs = 1;
  std::size_t cap = cg::kDefaultOrderCap;
  std::uint64_t seed = cg::kDefaultSeed;
  bool strict = false;
  std::string out = ".";
};

cg::GroupOptions group_options(const RunConfig& c) {
  cg::GroupOptions o;
  o.order_cap = c.cap;
  return o;
}

cg::AnalysisOptions analysis_options(const RunConfig& c) {
  cg::AnalysisOptions o;
  o.sampling.seed = c.seed;
  return o;
}

std::set<std::string> parse_families(const std::string& list) {
  static const std::set<std::string> known{"cyc", "dih", "dic", "sym", "alt", "heis", "prod"};
  std::set<std::string> out;
  std::istringstream in(list);
  std::string tag;
  while (std::getline(in, tag, ',')) {
    if (tag == "all") return {};
    if (!known.contains(tag)) throw cg::MalformedInput("unknown family '" + tag + "' in --families");
    out.insert(tag);
  }
  return out;
}

std::string file_stem(const std::string& descriptor) {
  std::string stem;
  for (const char c : descriptor) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) != 0;
    if (keep)
      stem += c;
    else if (!stem.empty() && stem.back() != '_')
      stem += '_';
  }
  while (!stem.empty() && stem.back() == '_') stem.pop_back();
  return stem.empty() ? "group" : stem;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

int cmd_analyze(const RunConfig& c) {
  const auto group = cg::make_group(c.descriptor, group_options(c));
  const auto report = cg::analyze(group, analysis_options(c));
  if (c.format == "json")
    std::cout << cg::report_json(report).dump(2) << '\n';
  else if (c.format == "dot")
    std::cout << cg::to_dot(report.gamma.graph, "Gamma " + report.group)
              << cg::to_dot(report.delta.graph, "Delta " + report.group);
  else
    std::cout << cg::report_human(report);
  return report.has_failure() ? kExitFail : 0;
}

int cmd_verify(const RunConfig& c) {
  cg::SweepConfig config;
  config.filter.max_order = c.max_order;
  config.filter.families = parse_families(c.families);
  config.group_options = group_options(c);
  config.sampling.seed = c.seed;
  config.jobs = c.jobs;
  if (c.max_order > c.cap) throw cg::MalformedInput("--max-order exceeds --cap");
  const auto result = cg::run_sweep(config);
  if (c.format == "json")
    std::cout << cg::summary_json(result).dump(2) << '\n';
  else
    std::cout << cg::summary_human(result);
  return cg::sweep_passed(result, c.strict) ? 0 : kExitFail;
}

int cmd_export(const RunConfig& c) {
  const auto group = cg::make_group(c.descriptor, group_options(c));
  const auto report = cg::analyze(group, analysis_options(c));
  const std::filesystem::path dir(c.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto stem = file_stem(c.descriptor);
  try {
    if (c.format != "json") {
      write_file(dir / (stem + ".gamma.dot"), cg::to_dot(report.gamma.graph, "Gamma " + report.group));
      write_file(dir / (stem + ".delta.dot"), cg::to_dot(report.delta.graph, "Delta " + report.group));
    }
    if (c.format != "dot") write_file(dir / (stem + ".report.json"), cg::report_json(report).dump(2) + "\n");
  } catch (const std::runtime_error& e) {
    std::cerr << "classgraph: " << e.what() << '\n';
    return kExitInput;
  }
  return report.has_failure() ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy-class size graphs of finite groups"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", config.cap, "Element-enumeration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "Seed for sampled centralizer-law checks");
  };

  auto* analyze = app.add_subcommand("analyze", "Analyse one group");
  analyze->add_option("group", config.descriptor, "Group descriptor, e.g. sym:5 or prod(sym:3,heis:5)")->required();
  analyze->add_option("--format", config.format)->check(CLI::IsMember({"human", "json", "dot"}));
  add_common(analyze);

  auto* verify = app.add_subcommand("verify", "Sweep the built-in catalog");
  verify->add_option("--max-order", config.max_order)->check(CLI::PositiveNumber);
  verify->add_option("--families", config.families, "Comma-separated: cyc,dih,dic,sym,alt,heis,prod or all");
  verify->add_option("--format", config.format)->check(CLI::IsMember({"human", "json"}));
  verify->add_option("--jobs", config.jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--strict", config.strict, "Treat groups skipped for resource limits as failures");
  add_common(verify);

  auto* exporter = app.add_subcommand("export", "Write DOT graphs and the JSON report");
  exporter->add_option("group", config.descriptor)->required();
  exporter->add_option("--format", config.format)->check(CLI::IsMember({"human", "json", "dot"}));
  exporter->add_option("--out", config.out, "Output directory");
  add_common(exporter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(config);
    if (*verify) return cmd_verify(config);
    return cmd_export(config);
  } catch (const cg::MalformedInput& e) {
    std::cerr << "classgraph: " << e.what() << '\n';
    return kExitInput;
  } catch (const cg::ResourceLimit& e) {
    std::cerr << "classgraph: " << e.what() << '\n';
    return kExitInput;
  }
}
