#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "classgraph/permutation.hpp"

namespace classgraph {

// Subset of a group's elements, indexed by canonical element index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultOrderCap = 10000;

struct GroupOptions {
  std::size_t order_cap = kDefaultOrderCap;
  // Cayley tables up to this order get the full cubic associativity check.
  std::size_t full_associativity_limit = 512;
  std::size_t associativity_samples = 100000;
  // Permutation groups up to this order keep a full multiplication table.
  std::size_t table_limit = 4096;
};

// A group element: its canonical index plus the identifier of the owning group.
struct Element {
  std::uint32_t index = 0;
  std::uint64_t group = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class Realization { permutation, cayley_table };

// A finite group, either a permutation group given by generators or an
// abstract group given by its multiplication table. Elements are numbered in
// canonical order: lexicographic on image sequences for permutation groups,
// table index for Cayley groups. The identity is always index 0.
//
// Immutable after construction and safe to share between threads.
class Group {
 public:
  // Closure of the generators under composition. An empty generator list gives
  // the trivial group. Throws MalformedInput for bad generators and
  // ResourceLimit when the closure exceeds options.order_cap.
  static Group from_generators(std::size_t degree, std::span<const Permutation> generators,
                               const GroupOptions& options = {});

  // Validates the Latin-square property, the identity row and column at index
  // 0, and associativity (full check up to options.full_associativity_limit,
  // random triples above).
  static Group from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                                 const GroupOptions& options = {});

  // For tables produced by trusted constructors (families, products). Only the
  // closure of `generators` is verified.
  static Group from_trusted_table(std::vector<std::uint32_t> table, std::size_t order,
                                  std::vector<std::uint32_t> generators,
                                  const GroupOptions& options = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::uint64_t id() const { return id_; }
  Realization realization() const { return realization_; }
  // Number of points moved by a permutation group; 0 for Cayley groups.
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  const GroupOptions& options() const { return options_; }

  Element identity() const { return {0, id_}; }
  Element element(std::size_t index) const;
  std::vector<Element> elements() const;
  std::vector<Element> generators() const;
  std::span<const std::uint32_t> generator_indices() const { return generators_; }

  bool owns(Element e) const { return e.group == id_ && e.index < order_; }

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, std::int64_t exponent) const;
  // by^-1 * a * by
  Element conjugate(Element a, Element by) const;
  bool commute(Element a, Element b) const;

  std::optional<Element> find(const Permutation& p) const;
  // Throws NotApplicable for Cayley groups.
  const Permutation& permutation(Element e) const;
  std::string format(Element e) const;

  // Index-level arithmetic for inner loops; no ownership checks.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_.empty() ? mul_by_lookup(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t exponent) const;
  std::uint32_t order_of(std::uint32_t a) const { return element_orders_[a]; }
  bool is_central(std::uint32_t a) const { return center_[a]; }
  const ElementSet& center_set() const { return center_; }
  bool has_table() const { return !table_.empty(); }
  bool is_abelian() const { return center_.count() == order_; }

 private:
  Group() = default;

  std::uint32_t mul_by_lookup(std::uint32_t a, std::uint32_t b) const;
  void check_owned(Element e) const;
  void finish_construction();

  std::string name_;
  std::uint64_t id_ = 0;
  Realization realization_ = Realization::permutation;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  GroupOptions options_;

  std::vector<Permutation> permutations_;  // sorted; permutation groups only
  std::vector<std::uint32_t> table_;       // row-major, may be empty for large permutation groups
  std::vector<std::uint32_t> generators_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> element_orders_;
  ElementSet center_;
};

std::size_t element_order(const Group& group, Element g);

// The p-part and p'-part of g: commuting powers of g with g_p * g_p' = g.
// Throws MalformedInput when p is not prime.
std::pair<Element, Element> power_parts(const Group& group, Element g, std::uint64_t p);

std::vector<Element> center(const Group& group);

std::vector<Element> centralizer(const Group& group, Element g);
ElementSet centralizer_set(const Group& group, std::uint32_t index);

// Least k >= 1 with g^k in Z(G).
std::size_t central_quotient_element_order(const Group& group, Element g);

}  // namespace classgraph
