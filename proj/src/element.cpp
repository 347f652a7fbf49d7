#include "gml/element.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace gml {

namespace detail {
struct ElementNode {
  bool base;
  Atom atom;
  std::vector<Element> args;
  const ElementNode* res;
  std::uint32_t rank;
  std::size_t hash;
};
}  // namespace detail

namespace {

using detail::ElementNode;

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct ContentHash {
  std::size_t operator()(const ElementNode* n) const { return n->hash; }
};

struct ContentEq {
  bool operator()(const ElementNode* a, const ElementNode* b) const {
    return a->base == b->base && a->atom == b->atom && a->res == b->res && a->args == b->args;
  }
};

class Store {
 public:
  const ElementNode* intern(ElementNode probe) {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(&probe); it != index_.end()) return *it;
    nodes_.push_back(std::move(probe));
    const ElementNode* stored = &nodes_.back();
    index_.insert(stored);
    return stored;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return nodes_.size();
  }

 private:
  std::mutex mutex_;
  std::deque<ElementNode> nodes_;
  std::unordered_set<const ElementNode*, ContentHash, ContentEq> index_;
};

Store& store() {
  static Store s;
  return s;
}

}  // namespace

Element Element::base(Atom a) {
  ElementNode probe{true, a, {}, nullptr, 0, mix(0x51ed270b27ULL, a)};
  return Element(store().intern(std::move(probe)));
}

Element Element::pair_unchecked(std::vector<Element> args, Element res) {
  args = make_element_set(std::move(args));
  std::uint32_t rank = res.rank();
  std::size_t h = mix(0x7a3c1f5dULL, res.hash());
  for (auto& a : args) {
    rank = std::max(rank, a.rank());
    h = mix(h, a.hash());
  }
  h = mix(h, args.size());
  ElementNode probe{false, 0, std::move(args), res.node_, rank + 1, h};
  return Element(store().intern(std::move(probe)));
}

bool Element::is_base() const { return node_->base; }
Atom Element::atom() const { return node_->atom; }
const std::vector<Element>& Element::args() const { return node_->args; }
Element Element::res() const { return Element(node_->res); }
std::uint32_t Element::rank() const { return node_->rank; }
std::size_t Element::hash() const { return node_->hash; }

std::strong_ordering operator<=>(Element a, Element b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_base() != b.is_base()) return a.is_base() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_base()) return a.atom() <=> b.atom();
  auto& x = a.args();
  auto& y = b.args();
  auto c = std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  if (c != 0) return c;
  return a.res() <=> b.res();
}

ElementSet make_element_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

bool contains(const ElementSet& s, Element e) { return std::binary_search(s.begin(), s.end(), e); }

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t interned_element_count() { return store().size(); }

}  // namespace gml
