#pragma once

#include "gml/completion.hpp"
#include "gml/pair.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gml {

/// The finite partial coding of a PartialPair as a coding handle over atoms.
class PairCoding {
 public:
  using element_type = Atom;

  explicit PairCoding(const PartialPair& p) : pair_(p) {}

  std::optional<Atom> try_code(const std::vector<Atom>& args, Atom res) const {
    return pair_.code({make_atom_set(args), res});
  }
  std::string label(Atom a) const { return pair_.label(a); }

 private:
  const PartialPair& pair_;
};

template <class E>
struct GeneratedSubmodel {
  /// Atom i is elements[i]; coding is the ambient coding on keys inside the closure.
  PartialPair pair;
  std::vector<E> elements;
  bool saturated = false;
  std::size_t rounds = 0;
};

/// Closure of `seed` under the handle's coding: each round adds c(a, alpha)
/// for every finite a and alpha drawn from the current set. Stops at a fixed
/// point (saturated) or after `budget` rounds. Handles may be partial
/// (`try_code` returns nullopt off the domain). The returned pair carries the
/// keys evaluated in the last round, which is every key of the closure when
/// saturated.
template <class Handle>
GeneratedSubmodel<typename Handle::element_type> generate_subgraphmodel(
    const Handle& coding, std::vector<typename Handle::element_type> seed, std::size_t budget,
    std::size_t ceiling = kDefaultCeiling) {
  using E = typename Handle::element_type;
  auto normalize = [](std::vector<E>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  auto for_each_key = [&](const std::vector<E>& carrier, auto&& visit) {
    const std::size_t n = carrier.size();
    if (n >= 63 || (std::uint64_t{1} << n) > ceiling)
      throw CeilingExceeded("closure round over " + std::to_string(n) + " elements exceeds the ceiling");
    std::vector<E> args;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      args.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) args.push_back(carrier[i]);
      for (const E& res : carrier) visit(args, res);
    }
  };

  GeneratedSubmodel<E> out;
  std::vector<E> current = std::move(seed);
  normalize(current);
  // Keys evaluated so far; the last round of a saturated run covers every key of the closure.
  std::vector<std::pair<std::pair<std::vector<E>, E>, E>> coded;
  for (std::size_t round = 1; round <= budget; ++round) {
    std::vector<E> next = current;
    coded.clear();
    for_each_key(current, [&](const std::vector<E>& args, const E& res) {
      if (auto v = coding.try_code(args, res)) {
        next.push_back(*v);
        coded.push_back({{args, res}, *v});
      }
    });
    normalize(next);
    out.rounds = round;
    if (next == current) {
      out.saturated = true;
      break;
    }
    current = std::move(next);
  }

  std::vector<std::string> labels;
  for (const E& e : current) labels.push_back(coding.label(e));
  out.pair = PartialPair(std::move(labels));
  auto index = [&](const E& e) {
    return static_cast<Atom>(std::lower_bound(current.begin(), current.end(), e) - current.begin());
  };
  for (auto& [key, value] : coded) {
    std::vector<Atom> key_args;
    for (const E& a : key.first) key_args.push_back(index(a));
    out.pair.set_code({make_atom_set(std::move(key_args)), index(key.second)}, index(value));
  }
  out.elements = std::move(current);
  return out;
}

}  // namespace gml
