#pragma once

#include <stdexcept>
#include <string>

namespace classgraph {

/// Input that violates a documented format or a construction invariant.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource bound (the element-enumeration cap) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation has no meaning for this group (e.g. minimal centralizers of an abelian group).
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element was combined with a group that does not own it.
class ForeignElement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace classgraph
