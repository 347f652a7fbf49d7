#pragma once

#include "gml/pair.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gml {

namespace detail {
struct ElementNode;
}

/// Element of a completion E_A: an atom of A or a pair (finite set, element).
/// Elements are hash-consed in a process-wide store, so equality is pointer
/// equality; ordering is the structural canonical order (atoms before pairs,
/// atoms by id, pairs by argument sequence then result).
///
/// Which pairs collapse to atoms depends on the pair A; build pairs through
/// Completion::apply_coding unless the key is known to be uncoded.
class Element {
 public:
  static Element base(Atom a);
  static Element pair_unchecked(std::vector<Element> args, Element res);

  bool is_base() const;
  Atom atom() const;
  /// Canonically sorted.
  const std::vector<Element>& args() const;
  Element res() const;
  std::uint32_t rank() const;
  std::size_t hash() const;

  friend bool operator==(Element a, Element b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(Element a, Element b);

 private:
  explicit Element(const detail::ElementNode* node) : node_(node) {}
  const detail::ElementNode* node_;
};

/// Sorted in canonical order, duplicate-free.
using ElementSet = std::vector<Element>;

ElementSet make_element_set(std::vector<Element> elements);
bool contains(const ElementSet& s, Element e);
bool is_subset(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);

/// Number of interned elements (diagnostics).
std::size_t interned_element_count();

}  // namespace gml

template <>
struct std::hash<gml::Element> {
  std::size_t operator()(gml::Element e) const noexcept { return e.hash(); }
};
