#include "classgraph/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "classgraph/errors.hpp"

namespace classgraph {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (const auto v : images) {
    if (v >= images.size() || seen[v])
      throw MalformedInput("permutation images are not a bijection on {1.." +
                           std::to_string(images.size()) + "}");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> MalformedInput {
    return MalformedInput("cycle notation, column " + std::to_string(pos + 1) + ": " + what);
  };
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };

  skip_space();
  if (pos == text.size()) throw fail("empty permutation (use () for the identity)");
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos == text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected a point");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) throw fail("point exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (value == 0) throw fail("points are numbered from 1");
      const auto point = static_cast<std::uint32_t>(value - 1);
      if (moved[point]) throw fail("point " + std::to_string(value) + " repeated");
      moved[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::direct_sum(const Permutation& other) const {
  std::vector<std::uint32_t> images = images_;
  const auto shift = static_cast<std::uint32_t>(images_.size());
  images.reserve(images_.size() + other.degree());
  for (const auto v : other.images_) images.push_back(v + shift);
  return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    std::uint32_t p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << p + 1;
      done[p] = true;
      first = false;
      p = images_[p];
    } while (p != start);
    out << ')';
  }
  const auto s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<std::uint32_t> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace classgraph
