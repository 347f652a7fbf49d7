#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gml {

using Atom = std::uint32_t;
/// Sorted, duplicate-free.
using AtomSet = std::vector<Atom>;

AtomSet make_atom_set(std::vector<Atom> atoms);
bool is_subset(const AtomSet& a, const AtomSet& b);
bool contains(const AtomSet& s, Atom a);

struct CodingKey {
  AtomSet args;
  Atom res;
  auto operator<=>(const CodingKey&) const = default;
};

/// Finite partial pair: atoms 0..n-1 (labels are presentation only, but they
/// identify atoms across pairs) and a finite partial coding (a, alpha) -> atom.
/// The class stores whatever it is given; `validate` checks the invariants.
class PartialPair {
 public:
  PartialPair() = default;
  /// Atoms labelled a0, a1, ...
  explicit PartialPair(std::size_t atom_count);
  explicit PartialPair(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Atom a) const { return labels_.at(a); }
  std::optional<Atom> find(const std::string& label) const;
  Atom add_atom(std::string label);

  /// Inserts or overwrites an entry without checks.
  void set_code(CodingKey key, Atom value);
  std::optional<Atom> code(const CodingKey& key) const;
  bool in_domain(const CodingKey& key) const { return coding_.count(key) != 0; }
  /// Key coded to `value`, if any (the first in key order when not injective).
  std::optional<CodingKey> decode(Atom value) const;

  const std::map<CodingKey, Atom>& coding() const { return coding_; }
  std::size_t coding_size() const { return coding_.size(); }

 private:
  std::vector<std::string> labels_;
  std::map<CodingKey, Atom> coding_;
  std::map<Atom, CodingKey> inverse_;
};

struct Violation {
  enum class Kind { NotInjective, AtomOutOfRange, DuplicateLabel };
  Kind kind;
  std::vector<CodingKey> keys;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const PartialPair& p);

/// Atoms are matched by label.
bool is_subpair(const PartialPair& a, const PartialPair& b);
bool same_pair(const PartialPair& a, const PartialPair& b);

class PairConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Carrier and coding union, matching atoms by label. Throws PairConflict on
/// disagreeing codes or when the union is not injective.
PartialPair pair_union(const PartialPair& a, const PartialPair& b);

/// Total map on atoms; commutes with the codings.
struct Morphism {
  std::vector<Atom> map;
  Atom operator()(Atom a) const { return map.at(a); }
  AtomSet operator()(const AtomSet& s) const;
};

bool is_morphism(const PartialPair& source, const PartialPair& target, const Morphism& f);
Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism inverse(const Morphism& bijection);

class SizeBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All automorphisms, identity first then in lexicographic order of the maps.
std::vector<Morphism> automorphisms(const PartialPair& p, std::size_t max_atoms = 8);
/// Orbit partition under Aut(p); blocks sorted by least member.
std::vector<AtomSet> orbits(const PartialPair& p, std::size_t max_atoms = 8);

}  // namespace gml
