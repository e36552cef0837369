#include <fstream>
#include <sstream>

#include "classgraph/catalog.hpp"
#include "classgraph/errors.hpp"
#include "json.hpp"

namespace classgraph {

namespace {

Group parse_generator_file(std::string_view text, const GroupOptions& options) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  auto fail = [&](const std::string& what) { return MalformedInput("line " + std::to_string(line_no) + ": " + what); };

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_degree) {
      std::istringstream words(line);
      std::string keyword;
      long long n = 0;
      std::string rest;
      if (!(words >> keyword >> n) || keyword != "degree" || (words >> rest))
        throw fail("expected 'degree n'");
      if (n <= 0) throw fail("degree must be positive");
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(Permutation::parse_cycles(line, degree));
    } catch (const MalformedInput& e) {
      throw fail(e.what());
    }
  }
  if (!have_degree) throw MalformedInput("generator file has no 'degree n' line");
  return Group::from_generators(degree, gens, options);
}

Group parse_cayley_file(std::string_view text, const GroupOptions& options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput("Cayley file, byte " + std::to_string(e.byte) + ": invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    throw MalformedInput("Cayley file must be an object with 'order' and 'table'");
  if (!doc["order"].is_number_unsigned()) throw MalformedInput("Cayley file: 'order' must be a positive integer");
  const auto n = doc["order"].get<std::size_t>();
  const auto& rows = doc["table"];
  if (!rows.is_array() || rows.size() != n)
    throw MalformedInput("Cayley file: 'table' must have " + std::to_string(n) + " rows");
  if (n > options.order_cap) throw ResourceLimit("Cayley table order exceeds the cap");
  std::vector<std::vector<std::uint32_t>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array()) throw MalformedInput("Cayley file: row " + std::to_string(i) + " is not an array");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const auto& v = rows[i][j];
      if (!v.is_number_unsigned())
        throw MalformedInput("Cayley file: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") is not a non-negative integer");
      table[i].push_back(v.get<std::uint32_t>());
    }
  }
  return Group::from_cayley_table(table, options);
}

}  // namespace

Group parse_group_text(std::string_view text, const GroupOptions& options) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_cayley_file(text, options);
  return parse_generator_file(text, options);
}

Group load_group_file(const std::filesystem::path& path, const GroupOptions& options) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open group file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    auto g = parse_group_text(buffer.str(), options);
    g.set_name("file:" + path.string());
    return g;
  } catch (const MalformedInput& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

}  // namespace classgraph
