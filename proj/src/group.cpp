#include "classgraph/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_set>

#include "classgraph/errors.hpp"
#include "classgraph/kernels.hpp"
#include "classgraph/number_theory.hpp"

namespace classgraph {

namespace {

std::uint64_t next_group_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

ResourceLimit cap_exceeded(std::size_t cap) {
  return ResourceLimit("group order exceeds the element-enumeration cap of " + std::to_string(cap));
}

// Closure of `generators` from the identity using a multiplication callback.
template <typename Mul>
std::vector<bool> subgroup_closure(std::size_t order, std::span<const std::uint32_t> generators, Mul mul) {
  std::vector<bool> in(order, false);
  std::deque<std::uint32_t> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto s : generators) {
      const auto y = mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace

Group Group::from_generators(std::size_t degree, std::span<const Permutation> generators,
                             const GroupOptions& options) {
  if (degree == 0) throw MalformedInput("permutation degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw MalformedInput("generator " + g.to_cycle_string() + " has degree " + std::to_string(g.degree()) +
                           ", expected " + std::to_string(degree));

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const auto identity = Permutation::identity(degree);
  seen.insert(identity);
  queue.push_back(identity);
  while (!queue.empty()) {
    const auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      auto y = x * s;
      if (seen.contains(y)) continue;
      if (seen.size() >= options.order_cap) throw cap_exceeded(options.order_cap);
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }

  Group g;
  g.id_ = next_group_id();
  g.realization_ = Realization::permutation;
  g.degree_ = degree;
  g.options_ = options;
  g.permutations_.assign(seen.begin(), seen.end());
  std::sort(g.permutations_.begin(), g.permutations_.end());
  g.order_ = g.permutations_.size();

  for (const auto& s : generators) {
    const auto idx = g.find(s)->index;
    if (idx != 0 && std::find(g.generators_.begin(), g.generators_.end(), idx) == g.generators_.end())
      g.generators_.push_back(idx);
  }

  std::vector<std::vector<std::uint32_t>> right(g.generators_.size(), std::vector<std::uint32_t>(g.order_));
  for (std::size_t s = 0; s < g.generators_.size(); ++s)
    for (std::uint32_t x = 0; x < g.order_; ++x)
      right[s][x] = g.find(g.permutations_[x] * g.permutations_[g.generators_[s]])->index;

  if (g.order_ <= options.table_limit) {
    const auto tree = kernels::spanning_tree(right, g.order_);
    g.table_ = kernels::multiplication_table(right, tree, kernels::Execution::serial);
  }

  g.inverse_.resize(g.order_);
  for (std::uint32_t x = 0; x < g.order_; ++x) g.inverse_[x] = g.find(g.permutations_[x].inverse())->index;

  g.finish_construction();
  return g;
}

Group Group::from_cayley_table(const std::vector<std::vector<std::uint32_t>>& rows, const GroupOptions& options) {
  const auto n = rows.size();
  if (n == 0) throw MalformedInput("Cayley table is empty");
  if (n > options.order_cap) throw cap_exceeded(options.order_cap);

  std::vector<std::uint32_t> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw MalformedInput("Cayley table row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n)
        throw MalformedInput("Cayley table entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") is out of range");
      table.push_back(rows[i][j]);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i)
    if (table[i] != i || table[i * n] != i)
      throw MalformedInput("Cayley table: index 0 is not the identity (row/column " + std::to_string(i) + ")");

  std::vector<std::uint32_t> seen_in_col(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = table[i * n + j];
      if (row_seen[v])
        throw MalformedInput("Cayley table is not a Latin square: row " + std::to_string(i) + " repeats " +
                             std::to_string(v));
      row_seen[v] = true;
      if (seen_in_col[j * n + v]++)
        throw MalformedInput("Cayley table is not a Latin square: column " + std::to_string(j) + " repeats " +
                             std::to_string(v));
    }
  }

  if (n <= options.full_associativity_limit) {
    if (const auto bad = kernels::find_associativity_violation(table, n, kernels::Execution::serial))
      throw MalformedInput("Cayley table is not associative at (" + std::to_string((*bad)[0]) + ", " +
                           std::to_string((*bad)[1]) + ", " + std::to_string((*bad)[2]) + ")");
  } else {
    std::mt19937_64 rng(0x5eed'ca1e'7ab1eULL);
    for (std::size_t t = 0; t < options.associativity_samples; ++t) {
      const auto a = rng() % n, b = rng() % n, c = rng() % n;
      if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
        throw MalformedInput("Cayley table is not associative at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  }

  // Greedy generating set: take the smallest element outside the subgroup generated so far.
  std::vector<std::uint32_t> gens;
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return table[static_cast<std::size_t>(a) * n + b]; };
  auto covered = subgroup_closure(n, gens, mul);
  for (std::uint32_t x = 1; x < n; ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    covered = subgroup_closure(n, gens, mul);
  }
  return from_trusted_table(std::move(table), n, std::move(gens), options);
}

Group Group::from_trusted_table(std::vector<std::uint32_t> table, std::size_t order,
                                std::vector<std::uint32_t> generators, const GroupOptions& options) {
  if (order > options.order_cap) throw cap_exceeded(options.order_cap);
  if (table.size() != order * order) throw MalformedInput("Cayley table has the wrong size");
  Group g;
  g.id_ = next_group_id();
  g.realization_ = Realization::cayley_table;
  g.order_ = order;
  g.options_ = options;
  g.table_ = std::move(table);
  for (const auto s : generators) {
    if (s >= order) throw MalformedInput("generator index out of range");
    if (s != 0 && std::find(g.generators_.begin(), g.generators_.end(), s) == g.generators_.end())
      g.generators_.push_back(s);
  }
  const auto reached = subgroup_closure(order, g.generators_, [&](auto a, auto b) { return g.mul(a, b); });
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw MalformedInput("generators do not generate the whole table");

  g.inverse_.resize(order);
  for (std::uint32_t x = 0; x < order; ++x) {
    const auto* row = g.table_.data() + static_cast<std::size_t>(x) * order;
    g.inverse_[x] = static_cast<std::uint32_t>(std::find(row, row + order, 0U) - row);
  }
  g.finish_construction();
  return g;
}

void Group::finish_construction() {
  element_orders_.resize(order_);
  for (std::uint32_t x = 0; x < order_; ++x) {
    if (realization_ == Realization::permutation) {
      // lcm of cycle lengths
      const auto& p = permutations_[x];
      std::vector<bool> done(p.degree(), false);
      std::uint64_t l = 1;
      for (std::uint32_t s = 0; s < p.degree(); ++s) {
        if (done[s]) continue;
        std::uint64_t len = 0;
        for (auto q = s; !done[q]; q = p(q)) {
          done[q] = true;
          ++len;
        }
        l = std::lcm(l, len);
      }
      element_orders_[x] = static_cast<std::uint32_t>(l);
    } else {
      std::uint32_t k = 1;
      for (auto y = x; y != 0; y = mul(y, x)) ++k;
      element_orders_[x] = x == 0 ? 1 : k;
    }
  }

  center_.resize(order_);
  for (std::uint32_t x = 0; x < order_; ++x) {
    bool central = true;
    for (const auto s : generators_)
      if (mul(x, s) != mul(s, x)) {
        central = false;
        break;
      }
    center_[x] = central;
  }
}

std::uint32_t Group::mul_by_lookup(std::uint32_t a, std::uint32_t b) const {
  const auto product = permutations_[a] * permutations_[b];
  const auto it = std::lower_bound(permutations_.begin(), permutations_.end(), product);
  return static_cast<std::uint32_t>(it - permutations_.begin());
}

std::uint32_t Group::pow(std::uint32_t a, std::uint64_t exponent) const {
  exponent %= element_orders_[a];
  std::uint32_t result = 0;
  std::uint32_t base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

void Group::check_owned(Element e) const {
  if (e.group != id_) throw ForeignElement("element belongs to a different group");
  if (e.index >= order_) throw ForeignElement("element index out of range");
}

Element Group::element(std::size_t index) const {
  if (index >= order_) throw std::out_of_range("element index " + std::to_string(index) + " out of range");
  return {static_cast<std::uint32_t>(index), id_};
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = {i, id_};
  return out;
}

std::vector<Element> Group::generators() const {
  std::vector<Element> out;
  for (const auto s : generators_) out.push_back({s, id_});
  return out;
}

Element Group::multiply(Element a, Element b) const {
  check_owned(a);
  check_owned(b);
  return {mul(a.index, b.index), id_};
}

Element Group::inverse(Element a) const {
  check_owned(a);
  return {inverse_[a.index], id_};
}

Element Group::power(Element a, std::int64_t exponent) const {
  check_owned(a);
  const auto o = static_cast<std::int64_t>(element_orders_[a.index]);
  const auto e = ((exponent % o) + o) % o;
  return {pow(a.index, static_cast<std::uint64_t>(e)), id_};
}

Element Group::conjugate(Element a, Element by) const {
  check_owned(a);
  check_owned(by);
  return {mul(mul(inverse_[by.index], a.index), by.index), id_};
}

bool Group::commute(Element a, Element b) const {
  check_owned(a);
  check_owned(b);
  return mul(a.index, b.index) == mul(b.index, a.index);
}

std::optional<Element> Group::find(const Permutation& p) const {
  if (realization_ != Realization::permutation || p.degree() != degree_) return std::nullopt;
  const auto it = std::lower_bound(permutations_.begin(), permutations_.end(), p);
  if (it == permutations_.end() || *it != p) return std::nullopt;
  return Element{static_cast<std::uint32_t>(it - permutations_.begin()), id_};
}

const Permutation& Group::permutation(Element e) const {
  check_owned(e);
  if (realization_ != Realization::permutation) throw NotApplicable("Cayley-table group has no permutations");
  return permutations_[e.index];
}

std::string Group::format(Element e) const {
  check_owned(e);
  if (realization_ == Realization::permutation) return permutations_[e.index].to_cycle_string();
  return "#" + std::to_string(e.index);
}

std::size_t element_order(const Group& group, Element g) {
  if (!group.owns(g)) throw ForeignElement("element belongs to a different group");
  return group.order_of(g.index);
}

std::pair<Element, Element> power_parts(const Group& group, Element g, std::uint64_t p) {
  if (!is_prime(p)) throw MalformedInput(std::to_string(p) + " is not prime");
  const std::uint64_t o = element_order(group, g);
  std::uint64_t p_power = 1;
  while (o % (p_power * p) == 0) p_power *= p;
  const std::uint64_t m = o / p_power;
  if (p_power == 1) return {group.identity(), g};
  if (m == 1) return {g, group.identity()};
  const auto t = mod_inverse(m % p_power, p_power);
  const auto s = mod_inverse(p_power % m, m);
  return {Element{group.pow(g.index, (m * t) % o), group.id()},
          Element{group.pow(g.index, (p_power * s) % o), group.id()}};
}

std::vector<Element> center(const Group& group) {
  std::vector<Element> out;
  const auto& z = group.center_set();
  for (auto i = z.find_first(); i != ElementSet::npos; i = z.find_next(i)) out.push_back(group.element(i));
  return out;
}

ElementSet centralizer_set(const Group& group, std::uint32_t index) {
  ElementSet out(group.order());
  for (std::uint32_t h = 0; h < group.order(); ++h)
    if (group.mul(index, h) == group.mul(h, index)) out.set(h);
  return out;
}

std::vector<Element> centralizer(const Group& group, Element g) {
  if (!group.owns(g)) throw ForeignElement("element belongs to a different group");
  if (group.order() > group.options().order_cap)
    throw ResourceLimit("centralizer needs the full element list, which exceeds the cap");
  const auto set = centralizer_set(group, g.index);
  std::vector<Element> out;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(group.element(i));
  return out;
}

std::size_t central_quotient_element_order(const Group& group, Element g) {
  if (!group.owns(g)) throw ForeignElement("element belongs to a different group");
  std::size_t k = 1;
  for (auto y = g.index; !group.is_central(y); y = group.mul(y, g.index)) ++k;
  return k;
}

}  // namespace classgraph
