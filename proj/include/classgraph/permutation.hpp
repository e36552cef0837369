#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace classgraph {

// A bijection on {0..n-1}, stored as its image sequence. Points are 1-based
// in cycle notation and 0-based everywhere else.
//
// Products compose left to right: (a * b)(i) = b(a(i)), so a is applied first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  // Throws MalformedInput unless images is a bijection on {0..size-1}.
  static Permutation from_images(std::vector<std::uint32_t> images);

  // Parses e.g. "(1 2 3)(4 5)" or "()" on {1..degree}. Commas between points are accepted.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Disjoint union: this acts on the first degree() points, other on the rest.
  Permutation direct_sum(const Permutation& other) const;

  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace classgraph
