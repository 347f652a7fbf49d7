#include "gml/pair.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gml {

AtomSet make_atom_set(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

bool is_subset(const AtomSet& a, const AtomSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const AtomSet& s, Atom a) { return std::binary_search(s.begin(), s.end(), a); }

PartialPair::PartialPair(std::size_t atom_count) {
  labels_.reserve(atom_count);
  for (std::size_t i = 0; i < atom_count; ++i) labels_.push_back("a" + std::to_string(i));
}

PartialPair::PartialPair(std::vector<std::string> labels) : labels_(std::move(labels)) {}

std::optional<Atom> PartialPair::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Atom>(it - labels_.begin());
}

Atom PartialPair::add_atom(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<Atom>(labels_.size() - 1);
}

void PartialPair::set_code(CodingKey key, Atom value) {
  auto old = coding_.find(key);
  if (old != coding_.end()) {
    auto inv = inverse_.find(old->second);
    if (inv != inverse_.end() && inv->second == key) {
      inverse_.erase(inv);
      for (auto& [k, v] : coding_)
        if (v == old->second && k != key) {
          inverse_.emplace(v, k);
          break;
        }
    }
  }
  coding_[key] = value;
  auto inv = inverse_.find(value);
  if (inv == inverse_.end())
    inverse_.emplace(value, std::move(key));
  else if (key < inv->second)
    inv->second = std::move(key);
}

std::optional<Atom> PartialPair::code(const CodingKey& key) const {
  auto it = coding_.find(key);
  if (it == coding_.end()) return std::nullopt;
  return it->second;
}

std::optional<CodingKey> PartialPair::decode(Atom value) const {
  auto it = inverse_.find(value);
  if (it == inverse_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate(const PartialPair& p) {
  ValidationReport report;
  const std::size_t n = p.size();
  std::set<std::string> seen;
  for (auto& l : p.labels())
    if (!seen.insert(l).second)
      report.violations.push_back({Violation::Kind::DuplicateLabel, {}, "duplicate label " + l});

  std::map<Atom, std::vector<CodingKey>> by_value;
  for (auto& [key, value] : p.coding()) {
    bool out = key.res >= n || value >= n ||
               std::any_of(key.args.begin(), key.args.end(), [&](Atom a) { return a >= n; });
    if (out)
      report.violations.push_back({Violation::Kind::AtomOutOfRange, {key}, "coding entry mentions an atom outside the carrier"});
    by_value[value].push_back(key);
  }
  for (auto& [value, keys] : by_value)
    if (keys.size() > 1)
      report.violations.push_back({Violation::Kind::NotInjective, keys, "several keys coded to one atom"});
  return report;
}

namespace {

// Maps atoms of `a` to atoms of `b` by label.
std::optional<std::vector<Atom>> label_map(const PartialPair& a, const PartialPair& b) {
  std::vector<Atom> map(a.size());
  for (Atom i = 0; i < a.size(); ++i) {
    auto j = b.find(a.label(i));
    if (!j) return std::nullopt;
    map[i] = *j;
  }
  return map;
}

CodingKey map_key(const CodingKey& key, const std::vector<Atom>& map) {
  std::vector<Atom> args;
  args.reserve(key.args.size());
  for (Atom x : key.args) args.push_back(map.at(x));
  return {make_atom_set(std::move(args)), map.at(key.res)};
}

}  // namespace

bool is_subpair(const PartialPair& a, const PartialPair& b) {
  auto map = label_map(a, b);
  if (!map) return false;
  for (auto& [key, value] : a.coding()) {
    auto target = b.code(map_key(key, *map));
    if (!target || *target != map->at(value)) return false;
  }
  return true;
}

bool same_pair(const PartialPair& a, const PartialPair& b) {
  return a.size() == b.size() && a.coding_size() == b.coding_size() && is_subpair(a, b);
}

PartialPair pair_union(const PartialPair& a, const PartialPair& b) {
  PartialPair out = a;
  std::vector<Atom> map(b.size());
  for (Atom i = 0; i < b.size(); ++i) {
    auto j = out.find(b.label(i));
    map[i] = j ? *j : out.add_atom(b.label(i));
  }
  for (auto& [key, value] : b.coding()) {
    CodingKey k = map_key(key, map);
    auto existing = out.code(k);
    if (existing && *existing != map[value])
      throw PairConflict("codings disagree on a shared key");
    out.set_code(std::move(k), map[value]);
  }
  if (!validate(out).ok()) throw PairConflict("union is not a partial pair");
  return out;
}

AtomSet Morphism::operator()(const AtomSet& s) const {
  std::vector<Atom> out;
  out.reserve(s.size());
  for (Atom a : s) out.push_back(map.at(a));
  return make_atom_set(std::move(out));
}

bool is_morphism(const PartialPair& source, const PartialPair& target, const Morphism& f) {
  if (f.map.size() != source.size()) return false;
  for (Atom x : f.map)
    if (x >= target.size()) return false;
  for (auto& [key, value] : source.coding()) {
    auto image = target.code({f(key.args), f(key.res)});
    if (!image || *image != f(value)) return false;
  }
  return true;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  Morphism out;
  out.map.reserve(inner.map.size());
  for (Atom x : inner.map) out.map.push_back(outer(x));
  return out;
}

Morphism inverse(const Morphism& bijection) {
  Morphism out;
  out.map.assign(bijection.map.size(), 0);
  for (Atom i = 0; i < bijection.map.size(); ++i) out.map.at(bijection.map[i]) = i;
  return out;
}

std::vector<Morphism> automorphisms(const PartialPair& p, std::size_t max_atoms) {
  const std::size_t n = p.size();
  if (n > max_atoms)
    throw SizeBoundExceeded("automorphism search limited to " + std::to_string(max_atoms) + " atoms");

  // Each coded triple is checked as soon as its largest atom is assigned.
  std::vector<std::vector<std::pair<CodingKey, Atom>>> ready(n);
  for (auto& [key, value] : p.coding()) {
    Atom top = std::max(key.res, value);
    if (!key.args.empty()) top = std::max(top, key.args.back());
    ready.at(top).emplace_back(key, value);
  }

  std::vector<Morphism> found;
  Morphism current;
  current.map.assign(n, 0);
  std::vector<bool> used(n, false);

  std::function<void(Atom)> extend = [&](Atom i) {
    if (i == n) {
      found.push_back(current);
      return;
    }
    for (Atom image = 0; image < n; ++image) {
      if (used[image]) continue;
      current.map[i] = image;
      bool consistent = std::all_of(ready[i].begin(), ready[i].end(), [&](auto& entry) {
        auto coded = p.code({current(entry.first.args), current(entry.first.res)});
        return coded && *coded == current(entry.second);
      });
      if (!consistent) continue;
      used[image] = true;
      extend(i + 1);
      used[image] = false;
    }
  };
  extend(0);
  // Lexicographic enumeration puts the identity first.
  return found;
}

std::vector<AtomSet> orbits(const PartialPair& p, std::size_t max_atoms) {
  const std::size_t n = p.size();
  std::vector<Atom> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Atom(Atom)> root = [&](Atom x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (auto& theta : automorphisms(p, max_atoms))
    for (Atom x = 0; x < n; ++x) {
      Atom a = root(x), b = root(theta(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<Atom, AtomSet> blocks;
  for (Atom x = 0; x < n; ++x) blocks[root(x)].push_back(x);
  std::vector<AtomSet> out;
  for (auto& [r, block] : blocks) out.push_back(std::move(block));
  return out;
}

}  // namespace gml
