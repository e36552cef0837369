#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "classgraph/conjugacy.hpp"
#include "classgraph/graphs.hpp"
#include "classgraph/group.hpp"
#include "classgraph/kernels.hpp"

namespace classgraph {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

enum class Verdict { pass, vacuous, fail };

// Outcome of one lemma check. A fail always carries a witness.
struct LemmaVerdict {
  Verdict verdict = Verdict::vacuous;
  std::string witness;
  std::string note;
};

enum class TheoremOutcome { vacuous, confirmed, counterexample };

struct TheoremVerdict {
  TheoremOutcome outcome = TheoremOutcome::vacuous;
  std::size_t k = 0;
  std::size_t vertices = 0;
  std::string witness;
};

// Class data, both graphs and their metrics, computed once per group.
struct GroupProfile {
  const Group* group = nullptr;
  ClassTable classes;
  SizeGraph gamma;
  PrimeGraph delta;
  GraphMetrics gamma_metrics;
  GraphMetrics delta_metrics;
};

GroupProfile make_profile(const Group& group);

// One canonical (smallest) element per distinct minimal centralizer, ascending.
// Throws NotApplicable for abelian groups.
std::vector<Element> minimal_centralizer_reps(const Group& group);
std::vector<Element> minimal_centralizer_reps(const Group& group, std::span<const ElementSet> centralizers);

// o(gZ) has at least two distinct prime factors.
bool is_strongly_noncentral(const Group& group, Element g);

TheoremVerdict check_main_theorem(const GroupProfile& profile);
TheoremVerdict check_main_theorem(const Group& group);

LemmaVerdict check_connectivity_lemma(const GroupProfile& profile);
LemmaVerdict check_ppower_lemma(const GroupProfile& profile);
LemmaVerdict check_diameter_lemma(const GroupProfile& profile);
LemmaVerdict check_gamma_delta_relations(const GroupProfile& profile);

struct SamplingPolicy {
  std::size_t exhaustive_limit = 200;
  std::size_t samples_per_law = 500;
  std::uint64_t seed = kDefaultSeed;
};

// Three centralizer laws, exhaustive up to policy.exhaustive_limit and sampled
// above it (seeded from policy.seed and the group name):
//   (i)   C(x) <= C(y)  =>  |y^G| divides |x^G| and N[|y^G|] <= N[|x^G|] in Gamma,
//         with equality of closed neighbourhoods when Gamma is k-regular, k >= 1;
//   (ii)  xy = yx with coprime orders  =>  C(xy) = C(x) & C(y);
//   (iii) C(x) <= C(x^k).
LemmaVerdict check_centralizer_laws(const GroupProfile& profile, std::span<const ElementSet> centralizers,
                                    const SamplingPolicy& policy = {});
LemmaVerdict check_centralizer_laws(const Group& group, const SamplingPolicy& policy = {});

struct MinimalCentralizerClass {
  std::string representative;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t subgroups = 0;  // distinct minimal centralizers of elements in this class
};

struct AnalysisOptions {
  SamplingPolicy sampling;
  kernels::Execution execution = kernels::Execution::parallel;
};

struct AnalysisReport {
  std::string group;
  std::size_t order = 0;
  std::vector<std::uint64_t> class_sizes;
  SizeGraph gamma;
  PrimeGraph delta;
  GraphMetrics gamma_metrics;
  GraphMetrics delta_metrics;
  std::vector<std::vector<std::uint64_t>> partners;
  TheoremVerdict theorem;
  LemmaVerdict connectivity;
  LemmaVerdict prime_power;
  LemmaVerdict centralizer_laws;
  LemmaVerdict diameter;
  LemmaVerdict gamma_delta;
  bool diameter_three = false;
  std::vector<MinimalCentralizerClass> minimal_centralizers;
  std::size_t strongly_noncentral_count = 0;

  bool has_failure() const;
};

AnalysisReport analyze(const Group& group, const AnalysisOptions& options = {});

}  // namespace classgraph
