#include "classgraph/sweep.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "classgraph/errors.hpp"
#include "classgraph/report.hpp"

namespace classgraph {

namespace {

struct Failure {
  std::string group;
  std::string check;
  std::string witness;
};

std::vector<Failure> failures_of(const AnalysisReport& r) {
  std::vector<Failure> out;
  if (r.theorem.outcome == TheoremOutcome::counterexample) out.push_back({r.group, "theorem", r.theorem.witness});
  const std::pair<const char*, const LemmaVerdict*> lemmas[] = {{"connectivity", &r.connectivity},
                                                                {"prime_power", &r.prime_power},
                                                                {"centralizer_laws", &r.centralizer_laws},
                                                                {"diameter", &r.diameter},
                                                                {"gamma_delta", &r.gamma_delta}};
  for (const auto& [name, v] : lemmas)
    if (v->verdict == Verdict::fail) out.push_back({r.group, name, v->witness});
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  const auto entries = catalog_entries(config.filter);
  const auto n = static_cast<std::int64_t>(entries.size());
  std::vector<std::optional<AnalysisReport>> reports(entries.size());
  std::vector<std::string> skip_reason(entries.size());

  AnalysisOptions options;
  options.sampling = config.sampling;
  options.execution = kernels::Execution::serial;
  const int jobs = static_cast<int>(std::max<std::size_t>(config.jobs, 1));

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const auto group = make_family(entries[i].spec, config.group_options);
      reports[i] = analyze(group, options);
    } catch (const ResourceLimit& e) {
      skip_reason[i] = e.what();
    }
  }

  SweepResult result;
  result.filter = config.filter;
  result.seed = config.sampling.seed;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (reports[i])
      result.reports.push_back(std::move(*reports[i]));
    else
      result.skipped.push_back({entries[i].descriptor, skip_reason[i]});
  }
  return result;
}

std::size_t failure_count(const SweepResult& result) {
  std::size_t total = 0;
  for (const auto& r : result.reports) total += failures_of(r).size();
  return total;
}

bool sweep_passed(const SweepResult& result, bool strict) {
  return failure_count(result) == 0 && (!strict || result.skipped.empty());
}

nlohmann::ordered_json summary_json(const SweepResult& result) {
  nlohmann::ordered_json j;
  j["max_order"] = result.filter.max_order;
  if (result.filter.families.empty())
    j["families"] = "all";
  else
    j["families"] = result.filter.families;
  j["seed"] = result.seed;
  j["groups_checked"] = result.reports.size();

  auto skipped = nlohmann::ordered_json::array();
  for (const auto& s : result.skipped) skipped.push_back({{"group", s.group}, {"reason", s.reason}});
  j["skipped"] = std::move(skipped);

  std::map<std::string, std::size_t> theorem{{"confirmed", 0}, {"vacuous", 0}, {"COUNTEREXAMPLE", 0}};
  const char* lemma_names[] = {"connectivity", "prime_power", "centralizer_laws", "diameter", "gamma_delta"};
  std::map<std::string, std::map<std::string, std::size_t>> lemmas;
  for (const auto* name : lemma_names) lemmas[name] = {{"pass", 0}, {"vacuous", 0}, {"FAIL", 0}};

  auto regular = nlohmann::ordered_json::array();
  auto diameter_three = nlohmann::ordered_json::array();
  auto disconnected = nlohmann::ordered_json::array();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) {
    ++theorem[to_string(r.theorem.outcome)];
    ++lemmas["connectivity"][to_string(r.connectivity.verdict)];
    ++lemmas["prime_power"][to_string(r.prime_power.verdict)];
    ++lemmas["centralizer_laws"][to_string(r.centralizer_laws.verdict)];
    ++lemmas["diameter"][to_string(r.diameter.verdict)];
    ++lemmas["gamma_delta"][to_string(r.gamma_delta.verdict)];
    if (r.gamma_metrics.regular_with_positive_degree())
      regular.push_back({{"group", r.group}, {"k", r.gamma_metrics.k}, {"vertices", r.gamma.graph.labels()}});
    if (r.diameter_three) diameter_three.push_back(r.group);
    if (r.gamma_metrics.components.size() > 1) disconnected.push_back(r.group);
    for (const auto& f : failures_of(r))
      failures.push_back({{"group", f.group}, {"check", f.check}, {"witness", f.witness}});
  }
  j["theorem"] = theorem;
  nlohmann::ordered_json lemma_json;
  for (const auto* name : lemma_names) lemma_json[name] = lemmas[name];
  j["lemmas"] = std::move(lemma_json);
  j["regular_gamma_count"] = regular.size();
  j["regular_gamma"] = std::move(regular);
  j["diameter_three"] = std::move(diameter_three);
  j["disconnected_gamma_count"] = disconnected.size();
  j["disconnected_gamma"] = std::move(disconnected);
  j["failure_count"] = failures.size();
  j["failures"] = std::move(failures);
  return j;
}

std::string summary_human(const SweepResult& result) {
  const auto j = summary_json(result);
  std::ostringstream out;
  out << "groups checked: " << j["groups_checked"] << " (max order " << result.filter.max_order << ")\n";
  out << "skipped: " << result.skipped.size() << '\n';
  for (const auto& s : result.skipped) out << "  " << s.group << ": " << s.reason << '\n';
  out << "theorem: " << j["theorem"]["confirmed"] << " confirmed, " << j["theorem"]["vacuous"] << " vacuous, "
      << j["theorem"]["COUNTEREXAMPLE"] << " counterexamples\n";
  out << "lemma exercise counts (pass / vacuous / fail):\n";
  for (const auto& [name, counts] : j["lemmas"].items())
    out << "  " << name << ": " << counts["pass"] << " / " << counts["vacuous"] << " / " << counts["FAIL"] << '\n';
  out << "regular Gamma with k >= 1: " << j["regular_gamma_count"] << '\n';
  for (const auto& r : j["regular_gamma"]) {
    out << "  " << r["group"].get<std::string>() << "  k=" << r["k"] << "  {";
    bool first = true;
    for (const auto& v : r["vertices"]) {
      out << (first ? "" : ",") << v;
      first = false;
    }
    out << "}\n";
  }
  out << "diameter-3 Gamma:";
  for (const auto& g : j["diameter_three"]) out << ' ' << g.get<std::string>();
  out << "\ndisconnected Gamma: " << j["disconnected_gamma_count"] << '\n';
  out << "failures: " << j["failure_count"] << '\n';
  for (const auto& f : j["failures"])
    out << "  " << f["group"].get<std::string>() << " [" << f["check"].get<std::string>()
        << "] " << f["witness"].get<std::string>() << '\n';
  return out.str();
}

}  // namespace classgraph
