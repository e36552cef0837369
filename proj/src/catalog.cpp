#include "classgraph/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "classgraph/errors.hpp"

namespace classgraph {

namespace {

struct Tag {
  Family family;
  const char* name;
};

constexpr Tag kTags[] = {{Family::cyclic, "cyc"},      {Family::dihedral, "dih"},    {Family::dicyclic, "dic"},
                         {Family::symmetric, "sym"},   {Family::alternating, "alt"}, {Family::heisenberg, "heis"},
                         {Family::product, "prod"},    {Family::file, "file"}};

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

MalformedInput bad_descriptor(std::string_view d, const std::string& why) {
  return MalformedInput("bad group descriptor '" + std::string(d) + "': " + why);
}

void check_range(const FamilySpec& s) {
  const auto n = s.parameter;
  auto fail = [&](const char* why) { throw bad_descriptor(s.descriptor(), why); };
  switch (s.family) {
    case Family::cyclic:
      if (n < 1) fail("cyclic needs n >= 1");
      break;
    case Family::dihedral:
      if (n < 3) fail("dihedral needs n >= 3");
      break;
    case Family::dicyclic:
      if (n < 2) fail("dicyclic needs n >= 2");
      break;
    case Family::symmetric:
    case Family::alternating:
      if (n < 1 || n > 8) fail("symmetric and alternating need 1 <= n <= 8");
      break;
    case Family::heisenberg:
      if (n != 3 && n != 5 && n != 7) fail("heisenberg needs p in {3, 5, 7}");
      break;
    case Family::product:
    case Family::file:
      break;
  }
}

// Splits "A,B" at the top-level comma.
std::pair<std::string_view, std::string_view> split_operands(std::string_view inner, std::string_view whole) {
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) return {inner.substr(0, i), inner.substr(i + 1)};
  }
  throw bad_descriptor(whole, "prod needs two operands");
}

Permutation cycle_of(std::size_t degree, std::initializer_list<std::uint32_t> points) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  const std::vector<std::uint32_t> p(points);
  for (std::size_t i = 0; i < p.size(); ++i) images[p[i]] = p[(i + 1) % p.size()];
  return Permutation::from_images(std::move(images));
}

Permutation full_cycle(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation::from_images(std::move(images));
}

Group dicyclic(std::size_t n, const GroupOptions& options) {
  // a^k x^j at index j*2n + k, with x^2 = a^n and x a x^-1 = a^-1.
  const auto m = 2 * n, order = 4 * n;
  if (order > options.order_cap) throw ResourceLimit("dicyclic group exceeds the order cap");
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v) {
      const auto k1 = u % m, j1 = u / m, k2 = v % m, j2 = v / m;
      std::size_t k, j;
      if (j1 == 0) {
        k = (k1 + k2) % m;
        j = j2;
      } else if (j2 == 0) {
        k = (k1 + m - k2) % m;
        j = 1;
      } else {
        k = (k1 + m - k2 + n) % m;
        j = 0;
      }
      table[u * order + v] = static_cast<std::uint32_t>(j * m + k);
    }
  return Group::from_trusted_table(std::move(table), order, {1, static_cast<std::uint32_t>(m)}, options);
}

Group heisenberg(std::size_t p, const GroupOptions& options) {
  // Unitriangular triples: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab') at index a*p^2 + b*p + c.
  const auto order = p * p * p;
  if (order > options.order_cap) throw ResourceLimit("heisenberg group exceeds the order cap");
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v) {
      const auto a1 = u / (p * p), b1 = u / p % p, c1 = u % p;
      const auto a2 = v / (p * p), b2 = v / p % p, c2 = v % p;
      const auto a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
      table[u * order + v] = static_cast<std::uint32_t>(a * p * p + b * p + c);
    }
  return Group::from_trusted_table(std::move(table), order,
                                   {static_cast<std::uint32_t>(p * p), static_cast<std::uint32_t>(p)}, options);
}

}  // namespace

std::string family_tag(Family f) {
  for (const auto& t : kTags)
    if (t.family == f) return t.name;
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view d) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  d = trim(d);
  FamilySpec spec;
  if (d.starts_with("prod(")) {
    if (!d.ends_with(")")) throw bad_descriptor(d, "missing ')'");
    const auto [lhs, rhs] = split_operands(d.substr(5, d.size() - 6), d);
    spec.family = Family::product;
    spec.operands = {parse(lhs), parse(rhs)};
    return spec;
  }
  const auto colon = d.find(':');
  if (colon == std::string_view::npos) throw bad_descriptor(d, "expected family:parameter");
  const auto tag = d.substr(0, colon);
  const auto value = d.substr(colon + 1);
  if (tag == "file") {
    if (value.empty()) throw bad_descriptor(d, "missing path");
    spec.family = Family::file;
    spec.path = std::string(value);
    return spec;
  }
  const auto it = std::find_if(std::begin(kTags), std::end(kTags), [&](const Tag& t) { return t.name == tag; });
  if (it == std::end(kTags) || it->family == Family::product) throw bad_descriptor(d, "unknown family");
  spec.family = it->family;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), spec.parameter);
  if (ec != std::errc() || end != value.data() + value.size()) throw bad_descriptor(d, "bad parameter");
  check_range(spec);
  return spec;
}

std::string FamilySpec::descriptor() const {
  switch (family) {
    case Family::product:
      return "prod(" + operands.at(0).descriptor() + "," + operands.at(1).descriptor() + ")";
    case Family::file:
      return "file:" + path;
    default:
      return family_tag(family) + ":" + std::to_string(parameter);
  }
}

std::size_t FamilySpec::order() const {
  switch (family) {
    case Family::cyclic:
      return parameter;
    case Family::dihedral:
      return 2 * parameter;
    case Family::dicyclic:
      return 4 * parameter;
    case Family::symmetric:
      return factorial(parameter);
    case Family::alternating:
      return parameter <= 1 ? 1 : factorial(parameter) / 2;
    case Family::heisenberg:
      return parameter * parameter * parameter;
    case Family::product:
      return operands.at(0).order() * operands.at(1).order();
    case Family::file:
      break;
  }
  return 0;
}

Group make_family(const FamilySpec& spec, const GroupOptions& options) {
  check_range(spec);
  const auto n = spec.parameter;
  std::vector<Permutation> gens;
  std::size_t degree = std::max<std::size_t>(n, 1);
  Group g = [&] {
    switch (spec.family) {
      case Family::cyclic:
        if (n > 1) gens.push_back(full_cycle(n));
        break;
      case Family::dihedral: {
        gens.push_back(full_cycle(n));
        std::vector<std::uint32_t> flip(n);
        for (std::uint32_t i = 0; i < n; ++i) flip[i] = static_cast<std::uint32_t>(n - 1 - i);
        gens.push_back(Permutation::from_images(std::move(flip)));
        break;
      }
      case Family::symmetric:
        if (n == 2) gens.push_back(cycle_of(2, {0, 1}));
        if (n > 2) {
          gens.push_back(full_cycle(n));
          gens.push_back(cycle_of(n, {0, 1}));
        }
        break;
      case Family::alternating:
        for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle_of(n, {0, 1, k}));
        break;
      case Family::dicyclic:
        return dicyclic(n, options);
      case Family::heisenberg:
        return heisenberg(n, options);
      case Family::product: {
        const auto a = make_family(spec.operands.at(0), options);
        const auto b = make_family(spec.operands.at(1), options);
        return direct_product(a, b, options);
      }
      case Family::file:
        return load_group_file(spec.path, options);
    }
    if (spec.order() > options.order_cap)
      throw ResourceLimit(spec.descriptor() + " has order " + std::to_string(spec.order()) +
                          ", above the cap of " + std::to_string(options.order_cap));
    return Group::from_generators(degree, gens, options);
  }();
  g.set_name(spec.descriptor());
  return g;
}

Group make_group(std::string_view descriptor, const GroupOptions& options) {
  return make_family(FamilySpec::parse(descriptor), options);
}

Group direct_product(const Group& a, const Group& b, const GroupOptions& options) {
  const auto na = a.order(), nb = b.order(), order = na * nb;
  if (order > options.order_cap)
    throw ResourceLimit("direct product of order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(options.order_cap));
  Group product = [&] {
    if (a.realization() == Realization::permutation && b.realization() == Realization::permutation) {
      const auto ida = Permutation::identity(a.degree()), idb = Permutation::identity(b.degree());
      std::vector<Permutation> gens;
      for (const auto& s : a.generators()) gens.push_back(a.permutation(s).direct_sum(idb));
      for (const auto& s : b.generators()) gens.push_back(ida.direct_sum(b.permutation(s)));
      return Group::from_generators(a.degree() + b.degree(), gens, options);
    }
    std::vector<std::uint32_t> table(order * order);
    for (std::uint32_t x = 0; x < order; ++x)
      for (std::uint32_t y = 0; y < order; ++y)
        table[static_cast<std::size_t>(x) * order + y] =
            static_cast<std::uint32_t>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
    std::vector<std::uint32_t> gens;
    for (const auto s : a.generator_indices()) gens.push_back(static_cast<std::uint32_t>(s * nb));
    for (const auto s : b.generator_indices()) gens.push_back(s);
    return Group::from_trusted_table(std::move(table), order, std::move(gens), options);
  }();
  product.set_name("prod(" + a.name() + "," + b.name() + ")");
  return product;
}

std::vector<CatalogEntry> catalog_entries(const CatalogFilter& filter) {
  auto selected = [&](const char* tag) { return filter.families.empty() || filter.families.contains(tag); };
  auto any_base_selected = [&] {
    for (const auto& t : kTags)
      if (t.family != Family::product && t.family != Family::file && filter.families.contains(t.name)) return true;
    return false;
  }();

  std::vector<CatalogEntry> base;
  auto add = [&](Family f, std::size_t n) {
    FamilySpec s;
    s.family = f;
    s.parameter = n;
    base.push_back({s.descriptor(), s, s.order()});
  };
  const bool all_bases = !any_base_selected;
  auto want = [&](const char* tag) { return all_bases || filter.families.contains(tag); };
  for (std::size_t n = 1; n <= 64; ++n) if (want("cyc")) add(Family::cyclic, n);
  for (std::size_t n = 3; n <= 64; ++n) if (want("dih")) add(Family::dihedral, n);
  for (std::size_t n = 2; n <= 16; ++n) if (want("dic")) add(Family::dicyclic, n);
  for (std::size_t n = 2; n <= 6; ++n) if (want("sym")) add(Family::symmetric, n);
  for (std::size_t n = 3; n <= 6; ++n) if (want("alt")) add(Family::alternating, n);
  for (const std::size_t p : {3, 5, 7}) if (want("heis")) add(Family::heisenberg, p);

  auto by_order = [](const CatalogEntry& x, const CatalogEntry& y) {
    return x.order != y.order ? x.order < y.order : x.descriptor < y.descriptor;
  };
  std::sort(base.begin(), base.end(), by_order);

  std::vector<CatalogEntry> out;
  // Base groups appear only when their family is named (or nothing is).
  if (filter.families.empty() || any_base_selected)
    for (const auto& e : base)
      if (e.order <= filter.max_order) out.push_back(e);

  if (selected("prod")) {
    const auto limit = std::min(filter.max_order, filter.product_order_limit);
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        const auto oa = base[i].order, ob = base[j].order;
        if (oa == 1 || ob == 1 || std::gcd(oa, ob) != 1 || oa * ob > limit) continue;
        FamilySpec s;
        s.family = Family::product;
        s.operands = {base[i].spec, base[j].spec};
        out.push_back({s.descriptor(), s, s.order()});
      }
  }
  std::sort(out.begin(), out.end(), by_order);
  return out;
}

std::vector<CatalogGroup> enumerate_catalog(const CatalogFilter& filter, const GroupOptions& options) {
  std::vector<CatalogGroup> out;
  for (const auto& e : catalog_entries(filter)) out.push_back({e.descriptor, make_family(e.spec, options)});
  return out;
}

}  // namespace classgraph
