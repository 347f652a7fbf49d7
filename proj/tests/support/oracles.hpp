#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// library code it is used to check.

#include "gml/pair.hpp"
#include "gml/term.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gml::testing {

/// Every term of exactly `size` nodes whose indices stay below `depth` binders
/// plus the given free names.
inline std::vector<Term> terms_of_size(std::size_t size, std::uint32_t depth,
                                       const std::vector<std::string>& free = {}) {
  std::vector<Term> out;
  if (size == 0) return out;
  if (size == 1) {
    for (std::uint32_t i = 0; i < depth; ++i) out.push_back(Term::bound(i));
    for (auto& f : free) out.push_back(Term::free(f));
    return out;
  }
  for (auto& b : terms_of_size(size - 1, depth + 1, free)) out.push_back(Term::abs(b, "x"));
  for (std::size_t left = 1; left + 1 < size; ++left)
    for (auto& f : terms_of_size(left, depth, free))
      for (auto& a : terms_of_size(size - 1 - left, depth, free)) out.push_back(Term::app(f, a));
  return out;
}

inline std::vector<Term> closed_terms_up_to(std::size_t max_size) {
  std::vector<Term> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    auto batch = terms_of_size(s, 0);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

/// Random term of at most `max_size` nodes; variables drawn from bound
/// indices and the free names.
inline Term random_term(std::mt19937& rng, std::size_t max_size, std::uint32_t depth,
                        const std::vector<std::string>& free) {
  std::uniform_int_distribution<int> pick(0, 2);
  const bool can_leaf = depth > 0 || !free.empty();
  int choice = max_size <= 1 ? 0 : pick(rng);
  if (max_size <= 2 && choice == 2) choice = 1;
  if (choice == 0 && !can_leaf) choice = 1;
  if (max_size <= 1 && !can_leaf) return Term::abs(Term::bound(0), "x");
  if (choice == 0) {
    std::uniform_int_distribution<std::size_t> leaf(0, depth + free.size() - 1);
    std::size_t i = leaf(rng);
    return i < depth ? Term::bound(static_cast<std::uint32_t>(i)) : Term::free(free[i - depth]);
  }
  if (choice == 1) return Term::abs(random_term(rng, max_size - 1, depth + 1, free), "v");
  std::uniform_int_distribution<std::size_t> split(1, max_size - 2);
  std::size_t left = split(rng);
  return Term::app(random_term(rng, left, depth, free), random_term(rng, max_size - 1 - left, depth, free));
}

inline Term random_closed_term(std::mt19937& rng, std::size_t max_size) { return random_term(rng, max_size, 0, {}); }

/// Random valid pair with up to `max_atoms` atoms and `max_triples` coded triples.
inline PartialPair random_pair(std::mt19937& rng, std::size_t max_atoms, std::size_t max_triples,
                               std::size_t min_atoms = 0) {
  std::uniform_int_distribution<std::size_t> atoms(min_atoms, max_atoms);
  PartialPair p(atoms(rng));
  const std::size_t n = p.size();
  if (n == 0) return p;
  std::uniform_int_distribution<std::size_t> triples(0, max_triples);
  std::uniform_int_distribution<Atom> atom(0, static_cast<Atom>(n - 1));
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
  std::size_t want = triples(rng);
  std::set<Atom> used;
  for (std::size_t tries = 0; p.coding_size() < want && tries < 50; ++tries) {
    std::vector<Atom> args;
    auto m = mask(rng);
    for (Atom i = 0; i < n; ++i)
      if (m >> i & 1) args.push_back(i);
    CodingKey key{args, atom(rng)};
    Atom value = atom(rng);
    if (p.in_domain(key) || used.count(value)) continue;
    used.insert(value);
    p.set_code(key, value);
  }
  return p;
}

/// Every valid pair over atoms a0..a{n-1} for n <= max_atoms with at most
/// max_triples coded triples.
inline std::vector<PartialPair> all_small_pairs(std::size_t max_atoms, std::size_t max_triples) {
  std::vector<PartialPair> out;
  for (std::size_t n = 0; n <= max_atoms; ++n) {
    std::vector<CodingKey> keys;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      for (Atom r = 0; r < n; ++r) {
        std::vector<Atom> args;
        for (Atom i = 0; i < n; ++i)
          if (m >> i & 1) args.push_back(i);
        keys.push_back({args, r});
      }
    std::vector<std::pair<CodingKey, Atom>> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      PartialPair p(n);
      for (auto& [k, v] : chosen) p.set_code(k, v);
      out.push_back(p);
      if (chosen.size() == max_triples) return;
      for (std::size_t i = from; i < keys.size(); ++i)
        for (Atom v = 0; v < n; ++v) {
          bool taken = std::any_of(chosen.begin(), chosen.end(), [&](auto& c) { return c.second == v; });
          if (taken) continue;
          chosen.push_back({keys[i], v});
          self(self, i + 1);
          chosen.pop_back();
        }
    };
    rec(rec, 0);
  }
  return out;
}

/// Naive transcription of the partial-pair interpretation clauses: the
/// application clause quantifies over the full powerset of the argument.
class NaivePairOracle {
 public:
  explicit NaivePairOracle(const PartialPair& p) : p_(p) {}

  std::set<Atom> eval(const Term& t, std::vector<std::set<Atom>> stack = {},
                      const std::map<std::string, std::set<Atom>>& env = {}) const {
    switch (t.kind()) {
      case Term::Kind::Bound:
        return t.index() < stack.size() ? stack[stack.size() - 1 - t.index()] : std::set<Atom>{};
      case Term::Kind::Free: {
        auto it = env.find(t.name());
        return it == env.end() ? std::set<Atom>{} : it->second;
      }
      case Term::Kind::App: {
        std::set<Atom> m = eval(t.fun(), stack, env);
        std::set<Atom> n = eval(t.arg(), stack, env);
        std::vector<Atom> nv(n.begin(), n.end());
        std::set<Atom> out;
        for (Atom alpha = 0; alpha < p_.size(); ++alpha)
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv.size()); ++mask) {
            std::vector<Atom> a;
            for (std::size_t i = 0; i < nv.size(); ++i)
              if (mask >> i & 1) a.push_back(nv[i]);
            auto c = p_.code({a, alpha});
            if (c && m.count(*c)) out.insert(alpha);
          }
        return out;
      }
      case Term::Kind::Abs: {
        std::set<Atom> out;
        for (auto& [key, value] : p_.coding()) {
          auto inner = stack;
          inner.emplace_back(key.args.begin(), key.args.end());
          if (eval(t.body(), inner, env).count(key.res)) out.insert(value);
        }
        return out;
      }
    }
    return {};
  }

 private:
  const PartialPair& p_;
};

/// E_k of the completion, straight from the level definition, with elements
/// as strings: atoms "i", pairs "(<sorted args>|res)".
inline std::set<std::string> completion_levels_oracle(const PartialPair& p, std::size_t k) {
  std::set<std::string> level;
  for (Atom a = 0; a < p.size(); ++a) level.insert(std::to_string(a));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::string> prev(level.begin(), level.end());
    std::set<std::string> next = level;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prev.size()); ++mask) {
      std::vector<std::string> args;
      for (std::size_t i = 0; i < prev.size(); ++i)
        if (mask >> i & 1) args.push_back(prev[i]);
      for (auto& res : prev) {
        bool coded = false;
        bool all_atoms = res.front() != '(' &&
                         std::all_of(args.begin(), args.end(), [](auto& s) { return s.front() != '('; });
        if (all_atoms) {
          std::vector<Atom> key;
          for (auto& s : args) key.push_back(static_cast<Atom>(std::stoul(s)));
          std::sort(key.begin(), key.end());
          coded = p.in_domain({key, static_cast<Atom>(std::stoul(res))});
        }
        if (coded) continue;
        std::string e = "(";
        for (auto& s : args) e += s + ",";
        next.insert(e + "|" + res + ")");
      }
    }
    level = std::move(next);
  }
  return level;
}

/// The one-atom pair with the single coded triple ({0}, 0) -> 0.
inline PartialPair p1() {
  PartialPair p(1);
  p.set_code({{0}, 0}, 0);
  return p;
}

inline PartialPair free_pair(std::size_t n) { return PartialPair(n); }

}  // namespace gml::testing
