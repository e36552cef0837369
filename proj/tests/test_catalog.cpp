#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "classgraph/catalog.hpp"
#include "classgraph/conjugacy.hpp"
#include "classgraph/errors.hpp"

using namespace classgraph;

namespace {

std::vector<std::string> descriptors(const CatalogFilter& f) {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries(f)) out.push_back(e.descriptor);
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string error_of(const std::string& text) {
  try {
    parse_group_text(text);
  } catch (const MalformedInput& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Families, Orders) {
  const std::map<std::string, std::size_t> want = {
      {"cyc:1", 1},   {"cyc:12", 12}, {"dih:3", 6},   {"dih:8", 16},  {"dic:2", 8},
      {"dic:4", 16},  {"sym:1", 1},   {"sym:5", 120}, {"alt:3", 3},   {"alt:5", 60},
      {"heis:3", 27}, {"heis:7", 343}, {"prod(sym:3,heis:5)", 750}, {"prod(dic:3,cyc:5)", 60}};
  for (const auto& [d, n] : want) {
    EXPECT_EQ(make_group(d).order(), n) << d;
    EXPECT_EQ(FamilySpec::parse(d).order(), n) << d;
  }
}

TEST(Families, Structure) {
  EXPECT_FALSE(make_group("dih:5").is_abelian());
  EXPECT_EQ(make_group("dih:4").center_set().count(), 2U);
  EXPECT_EQ(make_group("dic:2").center_set().count(), 2U);  // quaternion group
  EXPECT_EQ(make_group("alt:4").center_set().count(), 1U);
  EXPECT_TRUE(make_group("cyc:30").is_abelian());

  const auto heis = make_group("heis:5");
  EXPECT_EQ(heis.center_set().count(), 5U);
  const auto t = conjugacy_classes(heis);
  EXPECT_EQ(t.entries.size(), 29U);
  const auto sizes = t.sizes();
  EXPECT_EQ(std::count(sizes.begin(), sizes.end(), 5U), 24);
  for (std::uint32_t x = 1; x < heis.order(); ++x) EXPECT_EQ(heis.order_of(x), 5U);
}

TEST(Families, Realizations) {
  EXPECT_EQ(make_group("prod(sym:3,cyc:5)").realization(), Realization::permutation);
  EXPECT_EQ(make_group("prod(sym:3,cyc:5)").degree(), 8U);
  EXPECT_EQ(make_group("prod(sym:3,heis:5)").realization(), Realization::cayley_table);
  EXPECT_EQ(make_group("dic:3").realization(), Realization::cayley_table);
  EXPECT_EQ(make_group("prod(sym:3,heis:5)").name(), "prod(sym:3,heis:5)");
}

TEST(DirectProduct, ClassSizesAreProducts) {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"sym:3", "dih:4"}, {"dic:3", "sym:3"}, {"heis:3", "dih:5"}, {"alt:4", "dic:2"}, {"sym:4", "cyc:5"}}) {
    const auto ga = make_group(a), gb = make_group(b);
    const auto prod = direct_product(ga, gb);
    std::vector<std::uint64_t> want;
    for (const auto x : conjugacy_classes(ga).sizes())
      for (const auto y : conjugacy_classes(gb).sizes()) want.push_back(x * y);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(conjugacy_classes(prod).sizes(), want) << a << " x " << b;
  }
}

TEST(DirectProduct, RespectsCap) {
  GroupOptions small;
  small.order_cap = 100;
  EXPECT_THROW(make_group("prod(sym:4,cyc:5)", small), ResourceLimit);
}

TEST(Descriptors, RoundTrip) {
  for (const auto* d : {"cyc:7", "dih:12", "dic:5", "sym:6", "alt:4", "heis:7", "prod(sym:3,heis:5)",
                        "prod(prod(cyc:2,cyc:3),alt:5)"})
    EXPECT_EQ(FamilySpec::parse(d).descriptor(), d);
  EXPECT_EQ(FamilySpec::parse("file:groups/s3.txt").path, "groups/s3.txt");
}

TEST(Descriptors, Errors) {
  for (const auto* d : {"", "foo:3", "sym", "sym:", "sym:x", "sym:9", "alt:0", "cyc:0", "dih:2", "dic:1", "heis:4",
                        "heis:2", "prod(sym:3)", "prod(sym:3,cyc:5", "prod(sym:3,cyc:5,cyc:7)", "file:"})
    EXPECT_THROW(make_group(d), MalformedInput) << d;
}

TEST(Catalog, SmallBound) {
  const auto d = descriptors({.max_order = 10});
  EXPECT_EQ(d.size(), 23U);
  EXPECT_EQ(d.front(), "cyc:1");
  for (const auto* want : {"dih:5", "dic:2", "alt:3", "sym:3", "prod(cyc:2,alt:3)", "prod(sym:2,cyc:5)"})
    EXPECT_TRUE(contains(d, want)) << want;
  EXPECT_EQ(descriptors({.max_order = 1}), std::vector<std::string>{"cyc:1"});
}

TEST(Catalog, SortedAndBounded) {
  const auto entries = catalog_entries({.max_order = 750});
  EXPECT_TRUE(std::is_sorted(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.descriptor < b.descriptor;
  }));
  for (const auto& e : entries) {
    EXPECT_LE(e.order, 750U);
    EXPECT_EQ(e.order, e.spec.order());
  }
  EXPECT_TRUE(contains(descriptors({.max_order = 750}), "prod(sym:3,heis:5)"));
  EXPECT_FALSE(contains(descriptors({.max_order = 749}), "prod(sym:3,heis:5)"));
}

TEST(Catalog, FamilyFilter) {
  EXPECT_EQ(descriptors({.max_order = 400, .families = {"heis"}}),
            (std::vector<std::string>{"heis:3", "heis:5", "heis:7"}));
  for (const auto& d : descriptors({.max_order = 200, .families = {"prod"}})) EXPECT_EQ(d.rfind("prod(", 0), 0U);
  for (const auto& d : descriptors({.max_order = 400, .families = {"sym", "prod"}}))
    EXPECT_TRUE(d.starts_with("sym:") || d.starts_with("prod(sym:")) << d;
  EXPECT_TRUE(contains(descriptors({.max_order = 800, .families = {"sym", "heis", "prod"}}), "prod(sym:3,heis:5)"));
}

TEST(Catalog, EnumerateBuildsGroups) {
  for (const auto& [d, g] : enumerate_catalog({.max_order = 24})) EXPECT_EQ(g.order(), FamilySpec::parse(d).order());
}

TEST(GroupFiles, GeneratorFile) {
  const auto g = load_group_file(CLASSGRAPH_TEST_DATA "/sym3.txt");
  EXPECT_EQ(g.order(), 6U);
  EXPECT_EQ(g.name(), "file:" CLASSGRAPH_TEST_DATA "/sym3.txt");
  EXPECT_EQ(make_group("file:" CLASSGRAPH_TEST_DATA "/sym3.txt").order(), 6U);
}

TEST(GroupFiles, CayleyFile) {
  const auto g = load_group_file(CLASSGRAPH_TEST_DATA "/cyclic4.json");
  EXPECT_EQ(g.order(), 4U);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.realization(), Realization::cayley_table);
}

TEST(GroupFiles, Errors) {
  try {
    load_group_file(CLASSGRAPH_TEST_DATA "/nonlatin.json");
    FAIL() << "non-Latin table accepted";
  } catch (const MalformedInput& e) {
    EXPECT_NE(std::string(e.what()).find("nonlatin.json"), std::string::npos);
  }
  EXPECT_THROW(load_group_file("/nonexistent/group.txt"), MalformedInput);
  EXPECT_NE(error_of("degree 3\n(1 2 4)\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("# comment\n\ndegree three\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("(1 2)\n").find("line 1"), std::string::npos);
  EXPECT_FALSE(error_of("").empty());
  EXPECT_NE(error_of("{\"order\": 2, ").find("byte"), std::string::npos);
  EXPECT_FALSE(error_of("{\"order\": 2, \"table\": [[0,1]]}").empty());
  EXPECT_FALSE(error_of("{\"order\": 2, \"table\": [[0,1],[1,-1]]}").empty());
  EXPECT_EQ(error_of("degree 4\n(1 2)(3 4)  # Klein\n(1 3)(2 4)\n"), "");
}
