#include "classgraph/conjugacy.hpp"

#include <algorithm>
#include <limits>

#include "classgraph/errors.hpp"

namespace classgraph {

std::vector<std::uint64_t> ClassTable::sizes() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.size);
  std::sort(out.begin(), out.end());
  return out;
}

ClassTable conjugacy_classes(const Group& group) {
  const auto n = group.order();
  if (n > group.options().order_cap) throw ResourceLimit("conjugacy classes: group order exceeds the cap");
  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> conjugators;
  for (const auto s : group.generator_indices()) conjugators.push_back(s);

  ClassTable table;
  table.group_order = n;
  table.class_of.assign(n, unassigned);
  std::vector<std::uint32_t> orbit;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (table.class_of[x] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(table.entries.size());
    orbit.assign(1, x);
    table.class_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const auto y = orbit[head];
      for (const auto s : conjugators) {
        const auto z = group.mul(group.mul(group.inv(s), y), s);
        if (table.class_of[z] == unassigned) {
          table.class_of[z] = id;
          orbit.push_back(z);
        }
      }
    }
    table.entries.push_back({group.element(x), orbit.size(), n / orbit.size()});
    if (orbit.size() == 1) ++table.center_size;
  }
  return table;
}

}  // namespace classgraph
