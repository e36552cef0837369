#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "classgraph/group.hpp"

namespace classgraph {

struct ClassEntry {
  Element representative;  // smallest element of the class in canonical order
  std::size_t size = 0;
  std::size_t centralizer_order = 0;
};

// Conjugacy-class decomposition. Entries are sorted by representative index,
// so the identity class comes first.
struct ClassTable {
  std::vector<ClassEntry> entries;
  std::vector<std::uint32_t> class_of;  // element index -> entry index
  std::size_t center_size = 0;
  std::size_t group_order = 0;

  // Class sizes with multiplicity, ascending.
  std::vector<std::uint64_t> sizes() const;
};

// Orbits of the conjugation action, expanded breadth-first under the
// generators. Throws ResourceLimit when the group exceeds its order cap.
ClassTable conjugacy_classes(const Group& group);

}  // namespace classgraph
