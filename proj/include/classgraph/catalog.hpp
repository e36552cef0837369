#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "classgraph/group.hpp"

namespace classgraph {

enum class Family { cyclic, dihedral, dicyclic, symmetric, alternating, heisenberg, product, file };

// A parsed group descriptor: `sym:5`, `alt:5`, `cyc:12`, `dih:8` (order 16),
// `dic:4` (order 16), `heis:5`, `prod(sym:3,heis:5)`, `file:<path>`.
struct FamilySpec {
  Family family = Family::cyclic;
  std::size_t parameter = 0;
  std::string path;
  std::vector<FamilySpec> operands;

  static FamilySpec parse(std::string_view descriptor);
  std::string descriptor() const;
  // Order from the family formula; 0 for file groups.
  std::size_t order() const;
};

std::string family_tag(Family f);

Group make_family(const FamilySpec& spec, const GroupOptions& options = {});
Group make_group(std::string_view descriptor, const GroupOptions& options = {});

// Permutation x permutation acts on the disjoint union of the point sets;
// any other combination becomes a Cayley table indexed a * |B| + b.
Group direct_product(const Group& a, const Group& b, const GroupOptions& options = {});

// Generator file (`degree n` then one permutation per line) or Cayley file
// (`{"order": n, "table": [[...]]}`). Throws MalformedInput with line or byte
// position on bad input.
Group load_group_file(const std::filesystem::path& path, const GroupOptions& options = {});
Group parse_group_text(std::string_view text, const GroupOptions& options = {});

struct CatalogFilter {
  std::size_t max_order = 2000;
  // Tags from family_tag(); empty selects everything. Products are emitted
  // when "prod" is selected, built from the selected base families (all base
  // families when none is selected).
  std::set<std::string> families;
  std::size_t product_order_limit = 2000;
};

struct CatalogEntry {
  std::string descriptor;
  FamilySpec spec;
  std::size_t order = 0;
};

// Deterministic: sorted by order, then descriptor. Groups are not built.
std::vector<CatalogEntry> catalog_entries(const CatalogFilter& filter);

struct CatalogGroup {
  std::string descriptor;
  Group group;
};

std::vector<CatalogGroup> enumerate_catalog(const CatalogFilter& filter, const GroupOptions& options = {});

}  // namespace classgraph
