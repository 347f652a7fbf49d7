#pragma once

#include "gml/element.hpp"
#include "gml/natural.hpp"
#include "gml/pair.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gml {

class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCeiling = 1'000'000;

struct RankRestriction {
  /// Carrier E_k relabelled as atoms 0..|E_k|-1 (labels in element syntax).
  PartialPair pair;
  /// elements[i] is the completion element behind atom i; canonical order.
  std::vector<Element> elements;

  std::optional<Atom> atom_of(Element e) const;
};

/// Free completion E_A of a finite partial pair A.
class Completion {
 public:
  explicit Completion(PartialPair base, std::size_t ceiling = kDefaultCeiling);

  const PartialPair& base() const { return base_; }
  std::size_t ceiling() const { return ceiling_; }

  /// c_{E_A}: c_A(a, alpha) when the key is coded, the pair (a, alpha) otherwise.
  Element apply_coding(const ElementSet& args, Element res) const;
  /// The key coded to `e`, if `e` is in the range of c_{E_A}.
  std::optional<std::pair<ElementSet, Element>> invert(Element e) const;
  /// Hereditarily built from atoms of A with no pair that c_A collapses.
  bool is_element(Element e) const;

  /// |E_k| = |A| + 2^|E_{k-1}| |E_{k-1}| - |dom c_A|; nullopt once |E_{k-1}| > 65536.
  std::optional<Natural> predicted_count(std::uint32_t k) const;
  /// Exactly E_k, canonically sorted. Throws CeilingExceeded when the
  /// predicted count or the subset enumeration passes the ceiling.
  const ElementSet& elements_up_to(std::uint32_t k) const;
  /// B_k: carrier E_k, coding c_{E_A} restricted to keys whose value is in E_k.
  RankRestriction restriction(std::uint32_t k) const;

  /// Atoms print as labels, pairs as ({e1,e2,...},e) with args in canonical order.
  std::string format(Element e) const;
  std::string format(const ElementSet& s) const;
  /// Inverse of format; pairs go through apply_coding.
  Element parse(std::string_view text) const;

 private:
  PartialPair base_;
  std::size_t ceiling_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<ElementSet>> levels_;
};

/// Enumerates every subset of `universe` (at most 2^|universe| sets).
/// Throws CeilingExceeded when 2^|universe| > ceiling.
void for_each_subset(const ElementSet& universe, std::size_t ceiling,
                     const std::function<void(const ElementSet&)>& visit);

/// Coding handle for the completion E_{A'} of a pair A' that extends A, with
/// atoms of A sent to the A' atoms of the same label.
class CompletionCoding {
 public:
  using element_type = Element;

  CompletionCoding(const Completion& target, const PartialPair& source);

  Element embed(Atom a) const { return Element::base(atom_map_.at(a)); }
  Element code(const std::vector<Element>& args, Element res) const {
    return target_.apply_coding(make_element_set(args), res);
  }
  std::optional<Element> try_code(const std::vector<Element>& args, Element res) const {
    return code(args, res);
  }
  std::string label(Element e) const { return target_.format(e); }
  const Completion& target() const { return target_; }

 private:
  const Completion& target_;
  std::vector<Atom> atom_map_;
};

class ExtensionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f: E_A -> G with f(x) = x on A and f((a, alpha)) = c_G(f a, f alpha).
/// Construction checks that G's coding extends c_A.
template <class Handle>
class CanonicalMorphism {
 public:
  using target_type = typename Handle::element_type;

  CanonicalMorphism(const Completion& source, Handle target) : source_(source), target_(std::move(target)) {
    for (auto& [key, value] : source_.base().coding()) {
      std::vector<target_type> args;
      for (Atom a : key.args) args.push_back(target_.embed(a));
      if (!(target_.code(args, target_.embed(key.res)) == target_.embed(value)))
        throw ExtensionViolated("target coding does not extend the source pair");
    }
  }

  target_type operator()(Element e) const {
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    target_type image = [&] {
      if (e.is_base()) return target_.embed(e.atom());
      std::vector<target_type> args;
      for (Element a : e.args()) args.push_back((*this)(a));
      return target_.code(args, (*this)(e.res()));
    }();
    memo_.emplace(e, image);
    return image;
  }

  const Handle& target() const { return target_; }

 private:
  const Completion& source_;
  Handle target_;
  mutable std::unordered_map<Element, target_type> memo_;
};

template <class Handle>
typename Handle::element_type canonical_morphism(const Completion& source, Handle target, Element e) {
  return CanonicalMorphism<Handle>(source, std::move(target))(e);
}

}  // namespace gml
