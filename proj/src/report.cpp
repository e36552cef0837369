#include "classgraph/report.hpp"

#include <sstream>

namespace classgraph {

namespace {

nlohmann::ordered_json diameter_json(const Diameter& d) {
  switch (d.kind) {
    case Diameter::Kind::finite:
      return d.value;
    case Diameter::Kind::infinite:
      return "infinite";
    case Diameter::Kind::undefined:
      break;
  }
  return "undefined";
}

std::string diameter_text(const Diameter& d) {
  const auto j = diameter_json(d);
  return j.is_string() ? j.get<std::string>() : std::to_string(d.value);
}

nlohmann::ordered_json lemma_json(const LemmaVerdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(v.verdict);
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string regularity_text(const GraphMetrics& m) {
  switch (m.regularity) {
    case Regularity::empty:
      return "empty";
    case Regularity::not_regular:
      return "not-regular";
    case Regularity::regular:
      break;
  }
  return "regular";
}

void print_graph(std::ostream& out, const char* name, const Graph& g, const GraphMetrics& m) {
  out << name << ": " << g.size() << " vertices {";
  for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g.label(i);
  out << "}, edges {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : ",") << g.label(u) << '-' << g.label(v);
    first = false;
  }
  out << "}\n  " << regularity_text(m);
  if (m.regularity == Regularity::regular) out << " k=" << m.k;
  out << (m.complete ? ", complete" : "") << ", " << m.components.size() << " component(s), diameter "
      << diameter_text(m.diameter) << '\n';
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::vacuous:
      return "vacuous";
    case Verdict::fail:
      break;
  }
  return "FAIL";
}

std::string to_string(TheoremOutcome o) {
  switch (o) {
    case TheoremOutcome::vacuous:
      return "vacuous";
    case TheoremOutcome::confirmed:
      return "confirmed";
    case TheoremOutcome::counterexample:
      break;
  }
  return "COUNTEREXAMPLE";
}

nlohmann::ordered_json graph_json(const Graph& graph, const GraphMetrics& m) {
  nlohmann::ordered_json j;
  j["vertices"] = graph.labels();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({graph.label(u), graph.label(v)});
  j["edges"] = std::move(edges);
  j["degrees"] = m.degrees;
  j["regularity"] = regularity_text(m);
  j["k"] = m.regularity == Regularity::regular ? nlohmann::ordered_json(m.k) : nlohmann::ordered_json();
  j["complete"] = m.complete;
  auto components = nlohmann::ordered_json::array();
  for (const auto& c : m.components) {
    auto labels = nlohmann::ordered_json::array();
    for (const auto v : c) labels.push_back(graph.label(v));
    components.push_back(std::move(labels));
  }
  j["components"] = std::move(components);
  j["diameter"] = diameter_json(m.diameter);
  return j;
}

nlohmann::ordered_json report_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["class_sizes"] = r.class_sizes;
  j["gamma"] = graph_json(r.gamma.graph, r.gamma_metrics);
  j["delta"] = graph_json(r.delta.graph, r.delta_metrics);

  nlohmann::ordered_json theorem;
  theorem["verdict"] = to_string(r.theorem.outcome);
  if (r.theorem.outcome != TheoremOutcome::vacuous) {
    theorem["k"] = r.theorem.k;
    theorem["vertices"] = r.theorem.vertices;
  }
  if (!r.theorem.witness.empty()) theorem["witness"] = r.theorem.witness;
  j["theorem"] = std::move(theorem);

  nlohmann::ordered_json lemmas;
  lemmas["connectivity"] = lemma_json(r.connectivity);
  lemmas["prime_power"] = lemma_json(r.prime_power);
  lemmas["centralizer_laws"] = lemma_json(r.centralizer_laws);
  lemmas["diameter"] = lemma_json(r.diameter);
  lemmas["diameter"]["diameter_three"] = r.diameter_three;
  lemmas["gamma_delta"] = lemma_json(r.gamma_delta);
  j["lemmas"] = std::move(lemmas);

  j["partners"] = r.partners;
  auto minimal = nlohmann::ordered_json::array();
  for (const auto& m : r.minimal_centralizers)
    minimal.push_back({{"representative", m.representative},
                       {"class_size", m.class_size},
                       {"centralizer_order", m.centralizer_order},
                       {"subgroups", m.subgroups}});
  j["minimal_centralizers"] = std::move(minimal);
  j["strongly_noncentral_count"] = r.strongly_noncentral_count;
  return j;
}

std::string report_human(const AnalysisReport& r) {
  std::ostringstream out;
  out << "group " << r.group << ", order " << r.order << "\nclass sizes:";
  for (const auto s : r.class_sizes) out << ' ' << s;
  out << '\n';
  print_graph(out, "Gamma", r.gamma.graph, r.gamma_metrics);
  print_graph(out, "Delta", r.delta.graph, r.delta_metrics);
  out << "partners:";
  for (const auto& block : r.partners) {
    out << " {";
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? "," : "") << block[i];
    out << '}';
  }
  out << "\ntheorem: " << to_string(r.theorem.outcome);
  if (r.theorem.outcome != TheoremOutcome::vacuous)
    out << " (k=" << r.theorem.k << ", " << r.theorem.vertices << " vertices)";
  if (!r.theorem.witness.empty()) out << "\n  witness: " << r.theorem.witness;
  out << '\n';
  auto lemma = [&](const char* name, const LemmaVerdict& v) {
    out << "  " << name << ": " << to_string(v.verdict);
    if (!v.note.empty()) out << " (" << v.note << ')';
    if (!v.witness.empty()) out << "\n    witness: " << v.witness;
    out << '\n';
  };
  out << "lemmas:\n";
  lemma("connectivity", r.connectivity);
  lemma("prime power", r.prime_power);
  lemma("centralizer laws", r.centralizer_laws);
  lemma("diameter", r.diameter);
  lemma("gamma/delta", r.gamma_delta);
  if (r.diameter_three) out << "  diameter-3 Gamma\n";
  out << "minimal centralizers:";
  if (r.minimal_centralizers.empty()) out << " none";
  out << '\n';
  for (const auto& m : r.minimal_centralizers)
    out << "  " << m.representative << "  class size " << m.class_size << ", |C| = " << m.centralizer_order
        << ", " << m.subgroups << " subgroup(s)\n";
  out << "strongly noncentral classes: " << r.strongly_noncentral_count << '\n';
  return out.str();
}

}  // namespace classgraph
