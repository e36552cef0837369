#include "classgraph/analysis.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <numeric>
#include <random>
#include <sstream>

#include "classgraph/errors.hpp"
#include "classgraph/number_theory.hpp"

namespace classgraph {

namespace {

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << '}';
  return out.str();
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << join(g.labels()) << " edges {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : ",") << g.label(u) << '-' << g.label(v);
    first = false;
  }
  out << '}';
  return out.str();
}

LemmaVerdict failed(std::string witness) { return {Verdict::fail, std::move(witness), {}}; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Closed neighbourhood of a label, as labels.
std::vector<std::uint64_t> closed_neighbourhood(const Graph& g, std::uint64_t label) {
  const auto v = g.position(label);
  std::vector<std::uint64_t> out{label};
  for (const auto w : g.neighbors(v)) out.push_back(g.label(w));
  std::sort(out.begin(), out.end());
  return out;
}

class CentralizerLawChecker {
 public:
  CentralizerLawChecker(const GroupProfile& profile, std::span<const ElementSet> centralizers)
      : p_(profile), g_(*profile.group), c_(centralizers) {
    regular_ = p_.gamma_metrics.regular_with_positive_degree();
    for (const auto label : p_.gamma.graph.labels()) closed_[label] = closed_neighbourhood(p_.gamma.graph, label);
  }

  std::uint64_t class_size(std::uint32_t x) const { return p_.classes.entries[p_.classes.class_of[x]].size; }

  // Law (i) for a pair already known to satisfy C(x) <= C(y), both noncentral.
  std::optional<std::string> inclusion(std::uint32_t x, std::uint32_t y) {
    ++inclusions_;
    const auto sx = class_size(x), sy = class_size(y);
    if (sx % sy != 0) return witness(x, y, "C(x) <= C(y) but |y^G| = " + std::to_string(sy) +
                                               " does not divide |x^G| = " + std::to_string(sx));
    const auto& nx = closed_[sx];
    const auto& ny = closed_[sy];
    if (!std::includes(nx.begin(), nx.end(), ny.begin(), ny.end()))
      return witness(x, y, "closed neighbourhood of " + std::to_string(sy) + " not contained in that of " +
                               std::to_string(sx));
    if (regular_ && nx != ny)
      return witness(x, y, "Gamma is regular but " + std::to_string(sx) + " and " + std::to_string(sy) +
                               " are not partners");
    return std::nullopt;
  }

  // Law (ii) for a commuting pair of coprime orders.
  std::optional<std::string> coprime_product(std::uint32_t x, std::uint32_t y) {
    ++coprime_pairs_;
    const auto xy = g_.mul(x, y);
    if (c_[xy] != (c_[x] & c_[y])) return witness(x, y, "C(xy) != C(x) & C(y)");
    return std::nullopt;
  }

  // Law (iii).
  std::optional<std::string> power(std::uint32_t x, std::uint64_t k) {
    ++powers_;
    const auto xk = g_.pow(x, k);
    if (!c_[x].is_subset_of(c_[xk]))
      return witness(x, xk, "C(x) not contained in C(x^" + std::to_string(k) + ")");
    return std::nullopt;
  }

  bool coprime_orders(std::uint32_t x, std::uint32_t y) const {
    return std::gcd(g_.order_of(x), g_.order_of(y)) == 1;
  }

  std::string counts() const {
    return std::to_string(inclusions_) + " inclusion pairs, " + std::to_string(coprime_pairs_) +
           " coprime commuting pairs, " + std::to_string(powers_) + " powers";
  }

 private:
  std::string witness(std::uint32_t x, std::uint32_t y, const std::string& what) const {
    return "x = " + g_.format(g_.element(x)) + ", y = " + g_.format(g_.element(y)) + ": " + what;
  }

  const GroupProfile& p_;
  const Group& g_;
  std::span<const ElementSet> c_;
  bool regular_ = false;
  std::map<std::uint64_t, std::vector<std::uint64_t>> closed_;
  std::size_t inclusions_ = 0, coprime_pairs_ = 0, powers_ = 0;
};

}  // namespace

GroupProfile make_profile(const Group& group) {
  GroupProfile p;
  p.group = &group;
  p.classes = conjugacy_classes(group);
  p.gamma = build_gamma(p.classes);
  p.delta = build_delta(p.classes);
  p.gamma_metrics = metrics(p.gamma.graph);
  p.delta_metrics = metrics(p.delta.graph);
  return p;
}

std::vector<Element> minimal_centralizer_reps(const Group& group, std::span<const ElementSet> centralizers) {
  if (group.is_abelian()) throw NotApplicable("minimal centralizers: group is abelian");
  // Distinct centralizers of noncentral elements, keyed to their smallest element.
  std::map<ElementSet, std::uint32_t> distinct;
  for (std::uint32_t x = 0; x < group.order(); ++x)
    if (!group.is_central(x)) distinct.emplace(centralizers[x], x);

  std::vector<std::pair<const ElementSet*, std::uint32_t>> by_size;
  for (const auto& [set, rep] : distinct) by_size.emplace_back(&set, rep);
  std::sort(by_size.begin(), by_size.end(),
            [](const auto& a, const auto& b) { return a.first->count() < b.first->count(); });

  std::vector<Element> out;
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    const auto& candidate = *by_size[i].first;
    const auto size = candidate.count();
    bool minimal = true;
    for (std::size_t j = 0; j < i && minimal; ++j)
      if (by_size[j].first->count() < size && by_size[j].first->is_subset_of(candidate)) minimal = false;
    if (minimal) out.push_back(group.element(by_size[i].second));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> minimal_centralizer_reps(const Group& group) {
  const auto cents = kernels::centralizer_sets(group, kernels::Execution::parallel);
  return minimal_centralizer_reps(group, cents);
}

bool is_strongly_noncentral(const Group& group, Element g) {
  return factorize(central_quotient_element_order(group, g)).size() >= 2;
}

TheoremVerdict check_main_theorem(const GroupProfile& profile) {
  const auto& m = profile.gamma_metrics;
  TheoremVerdict v;
  if (!m.regular_with_positive_degree()) return v;
  v.k = m.k;
  v.vertices = profile.gamma.graph.size();
  if (m.complete && v.vertices == m.k + 1) {
    v.outcome = TheoremOutcome::confirmed;
  } else {
    v.outcome = TheoremOutcome::counterexample;
    v.witness = "Gamma is " + std::to_string(m.k) + "-regular but not complete on k+1 vertices: " +
                describe(profile.gamma.graph);
  }
  return v;
}

TheoremVerdict check_main_theorem(const Group& group) { return check_main_theorem(make_profile(group)); }

LemmaVerdict check_connectivity_lemma(const GroupProfile& profile) {
  const auto& m = profile.gamma_metrics;
  const auto& g = profile.gamma.graph;
  bool applied = false;
  std::string note;
  if (m.regular_with_positive_degree()) {
    applied = true;
    if (!m.connected()) return failed("Gamma is " + std::to_string(m.k) + "-regular but disconnected: " + describe(g));
    note = "regular and connected";
  }
  if (m.components.size() > 1) {
    applied = true;
    if (g.size() != 2 || g.edge_count() != 0)
      return failed("disconnected Gamma is not two isolated vertices: " + describe(g));
    note = "disconnected: two isolated vertices";
  }
  if (!applied) return {};
  return {Verdict::pass, {}, note};
}

LemmaVerdict check_ppower_lemma(const GroupProfile& profile) {
  const auto& m = profile.gamma_metrics;
  if (!m.regular_with_positive_degree()) return {};
  const auto& labels = profile.gamma.graph.labels();
  const auto it = std::find_if(labels.begin(), labels.end(), [](auto v) { return is_prime_power(v); });
  if (it == labels.end()) return {};
  if (!m.complete)
    return failed("regular Gamma with prime-power vertex " + std::to_string(*it) +
                  " is not complete: " + describe(profile.gamma.graph));
  return {Verdict::pass, {}, "prime-power vertex " + std::to_string(*it)};
}

LemmaVerdict check_diameter_lemma(const GroupProfile& profile) {
  const auto& m = profile.gamma_metrics;
  bool applied = false;
  if (m.connected()) {
    applied = true;
    if (m.diameter.value > 3)
      return failed("connected Gamma has diameter " + std::to_string(m.diameter.value) + ": " +
                    describe(profile.gamma.graph));
  }
  if (m.regular_with_positive_degree()) {
    applied = true;
    if (!m.connected() || m.diameter.value > 2)
      return failed("regular Gamma has diameter above 2: " + describe(profile.gamma.graph));
  }
  if (!applied) return {};
  return {Verdict::pass, {}, "diameter " + std::to_string(m.diameter.value)};
}

LemmaVerdict check_gamma_delta_relations(const GroupProfile& profile) {
  const auto& a = profile.gamma_metrics;
  const auto& b = profile.delta_metrics;
  if (a.components.size() != b.components.size())
    return failed("Gamma has " + std::to_string(a.components.size()) + " components, Delta has " +
                  std::to_string(b.components.size()));
  if (!a.diameter.finite() || !b.diameter.finite())
    return {Verdict::pass, {}, "diameter comparison skipped (not both finite)"};
  const auto da = a.diameter.value, db = b.diameter.value;
  if ((da > db ? da - db : db - da) > 1)
    return failed("diam Gamma = " + std::to_string(da) + ", diam Delta = " + std::to_string(db));
  return {Verdict::pass, {}, "diameters " + std::to_string(da) + " and " + std::to_string(db)};
}

LemmaVerdict check_centralizer_laws(const GroupProfile& profile, std::span<const ElementSet> centralizers,
                                    const SamplingPolicy& policy) {
  const auto& group = *profile.group;
  const auto n = static_cast<std::uint32_t>(group.order());
  if (group.is_abelian()) return {};
  CentralizerLawChecker check(profile, centralizers);

  std::vector<std::uint32_t> noncentral;
  for (std::uint32_t x = 0; x < n; ++x)
    if (!group.is_central(x)) noncentral.push_back(x);

  if (n <= policy.exhaustive_limit) {
    for (const auto x : noncentral)
      for (const auto y : noncentral)
        if (centralizers[x].is_subset_of(centralizers[y]))
          if (auto w = check.inclusion(x, y)) return failed(*w);
    for (std::uint32_t x = 0; x < n; ++x)
      for (auto y = centralizers[x].find_first(); y != ElementSet::npos; y = centralizers[x].find_next(y))
        if (check.coprime_orders(x, static_cast<std::uint32_t>(y)))
          if (auto w = check.coprime_product(x, static_cast<std::uint32_t>(y))) return failed(*w);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint64_t k = 0; k < group.order_of(x); ++k)
        if (auto w = check.power(x, k)) return failed(*w);
    return {Verdict::pass, {}, "exhaustive: " + check.counts()};
  }

  std::mt19937_64 rng(policy.seed ^ fnv1a(group.name()));
  auto pick = [&rng](const std::vector<std::uint32_t>& from) { return from[rng() % from.size()]; };
  std::vector<std::uint32_t> pool;
  for (std::size_t t = 0; t < policy.samples_per_law; ++t) {
    const auto x = pick(noncentral);
    pool.clear();
    const auto& cx = centralizers[x];
    for (auto y = cx.find_first(); y != ElementSet::npos; y = cx.find_next(y))
      if (!group.is_central(static_cast<std::uint32_t>(y)) && cx.is_subset_of(centralizers[y]))
        pool.push_back(static_cast<std::uint32_t>(y));
    if (auto w = check.inclusion(x, pick(pool))) return failed(*w);
  }
  for (std::size_t t = 0; t < policy.samples_per_law; ++t) {
    const auto x = static_cast<std::uint32_t>(rng() % n);
    pool.clear();
    const auto& cx = centralizers[x];
    for (auto y = cx.find_first(); y != ElementSet::npos; y = cx.find_next(y))
      if (check.coprime_orders(x, static_cast<std::uint32_t>(y))) pool.push_back(static_cast<std::uint32_t>(y));
    if (auto w = check.coprime_product(x, pick(pool))) return failed(*w);
  }
  for (std::size_t t = 0; t < policy.samples_per_law; ++t) {
    const auto x = static_cast<std::uint32_t>(rng() % n);
    if (auto w = check.power(x, rng() % group.order_of(x))) return failed(*w);
  }
  return {Verdict::pass, {}, "sampled: " + check.counts()};
}

LemmaVerdict check_centralizer_laws(const Group& group, const SamplingPolicy& policy) {
  const auto profile = make_profile(group);
  const auto cents = kernels::centralizer_sets(group, kernels::Execution::parallel);
  return check_centralizer_laws(profile, cents, policy);
}

bool AnalysisReport::has_failure() const {
  return theorem.outcome == TheoremOutcome::counterexample || connectivity.verdict == Verdict::fail ||
         prime_power.verdict == Verdict::fail || centralizer_laws.verdict == Verdict::fail ||
         diameter.verdict == Verdict::fail || gamma_delta.verdict == Verdict::fail;
}

AnalysisReport analyze(const Group& group, const AnalysisOptions& options) {
  const auto profile = make_profile(group);
  const auto cents = kernels::centralizer_sets(group, options.execution);

  AnalysisReport r;
  r.group = group.name();
  r.order = group.order();
  r.class_sizes = profile.classes.sizes();
  r.gamma = profile.gamma;
  r.delta = profile.delta;
  r.gamma_metrics = profile.gamma_metrics;
  r.delta_metrics = profile.delta_metrics;
  r.partners = partner_partition(profile.gamma.graph);
  r.theorem = check_main_theorem(profile);
  r.connectivity = check_connectivity_lemma(profile);
  r.prime_power = check_ppower_lemma(profile);
  r.centralizer_laws = check_centralizer_laws(profile, cents, options.sampling);
  r.diameter = check_diameter_lemma(profile);
  r.gamma_delta = check_gamma_delta_relations(profile);
  r.diameter_three = profile.gamma_metrics.connected() && profile.gamma_metrics.diameter.value == 3;

  if (!group.is_abelian()) {
    std::map<std::uint32_t, MinimalCentralizerClass> by_class;
    for (const auto rep : minimal_centralizer_reps(group, cents)) {
      const auto cls = profile.classes.class_of[rep.index];
      const auto& entry = profile.classes.entries[cls];
      auto& summary = by_class[cls];
      if (summary.subgroups == 0) {
        summary.representative = group.format(entry.representative);
        summary.class_size = entry.size;
        summary.centralizer_order = entry.centralizer_order;
      }
      ++summary.subgroups;
    }
    for (auto& [cls, summary] : by_class) r.minimal_centralizers.push_back(std::move(summary));
  }
  for (const auto& entry : profile.classes.entries)
    if (entry.size > 1 && is_strongly_noncentral(group, entry.representative)) ++r.strongly_noncentral_count;
  return r;
}

}  // namespace classgraph
