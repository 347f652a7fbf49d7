#include "doctest.h"
#include "gml/pair.hpp"
#include "gml/pair_io.hpp"
#include "gml/subgraph.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace gml;
using gml::testing::p1;

namespace {

PartialPair with_codes(std::size_t n, std::vector<std::pair<CodingKey, Atom>> codes) {
  PartialPair p(n);
  for (auto& [k, v] : codes) p.set_code(k, v);
  return p;
}

// Brute force over all n! bijections.
std::set<std::vector<Atom>> automorphisms_oracle(const PartialPair& p) {
  std::vector<Atom> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<Atom>> out;
  do {
    bool ok = true;
    for (auto& [key, value] : p.coding()) {
      std::vector<Atom> image;
      for (Atom a : key.args) image.push_back(perm[a]);
      std::sort(image.begin(), image.end());
      auto c = p.code({image, perm[key.res]});
      if (!c || *c != perm[value]) ok = false;
    }
    if (ok) out.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(p1()).ok());

  auto clash = with_codes(1, {{{{0}, 0}, 0}, {{{}, 0}, 0}});
  auto report = validate(clash);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == Violation::Kind::NotInjective);
  CHECK(report.violations[0].keys.size() == 2);

  auto outside = with_codes(1, {{{{5}, 0}, 0}});
  auto r2 = validate(outside);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations[0].kind == Violation::Kind::AtomOutOfRange);

  PartialPair dup(std::vector<std::string>{"a", "a"});
  CHECK_FALSE(validate(dup).ok());
}

TEST_CASE("subpair examples") {
  CHECK(is_subpair(p1(), p1()));
  CHECK(is_subpair(PartialPair(), p1()));
  CHECK_FALSE(is_subpair(p1(), PartialPair(1)));
  CHECK(is_subpair(PartialPair(1), p1()));
}

TEST_CASE("subpair is a partial order on small pairs") {
  auto pairs = testing::all_small_pairs(2, 1);
  for (auto& a : pairs)
    for (auto& b : pairs) {
      bool ab = is_subpair(a, b), ba = is_subpair(b, a);
      if (ab && ba) CHECK(same_pair(a, b));
      if (!ab) continue;
      for (auto& c : pairs)
        if (is_subpair(b, c)) CHECK(is_subpair(a, c));
    }
}

TEST_CASE("union examples") {
  CHECK(same_pair(pair_union(p1(), p1()), p1()));

  PartialPair left(std::vector<std::string>{"a", "b"});
  left.set_code({{0}, 0}, 1);
  PartialPair right(std::vector<std::string>{"c"});
  right.set_code({{}, 0}, 0);
  auto both = pair_union(left, right);
  CHECK(both.size() == 3);
  CHECK(both.coding_size() == 2);
  CHECK(is_subpair(left, both));
  CHECK(is_subpair(right, both));

  auto one = with_codes(3, {{{{0}, 0}, 1}});
  auto two = with_codes(3, {{{{0}, 0}, 2}});
  CHECK_THROWS_AS(pair_union(one, two), PairConflict);

  auto three = with_codes(3, {{{{}, 0}, 1}});
  CHECK_THROWS_AS(pair_union(one, three), PairConflict);  // injectivity
}

TEST_CASE("union is the least upper bound when it exists") {
  std::mt19937 rng(11);
  auto pairs = testing::all_small_pairs(2, 1);
  for (int i = 0; i < 400; ++i) {
    auto& a = pairs[rng() % pairs.size()];
    auto& b = pairs[rng() % pairs.size()];
    PartialPair u;
    try {
      u = pair_union(a, b);
    } catch (const PairConflict&) {
      continue;
    }
    CHECK(validate(u).ok());
    CHECK(is_subpair(a, u));
    CHECK(is_subpair(b, u));
    for (auto& c : pairs)
      if (is_subpair(a, c) && is_subpair(b, c)) CHECK(is_subpair(u, c));
  }
}

TEST_CASE("automorphism examples") {
  auto free2 = automorphisms(PartialPair(2));
  REQUIRE(free2.size() == 2);
  CHECK(free2[0].map == std::vector<Atom>{0, 1});
  CHECK(free2[1].map == std::vector<Atom>{1, 0});

  auto single = automorphisms(p1());
  REQUIRE(single.size() == 1);
  CHECK(single[0].map == std::vector<Atom>{0});

  auto broken = automorphisms(with_codes(2, {{{{0}, 0}, 0}}));
  REQUIRE(broken.size() == 1);
  CHECK(broken[0].map == std::vector<Atom>{0, 1});

  CHECK_THROWS_AS(automorphisms(PartialPair(9)), SizeBoundExceeded);
  CHECK(automorphisms(PartialPair(9), 9).size() == 362880);
}

TEST_CASE("automorphisms agree with brute force and form a group") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto p = testing::random_pair(rng, 5, 6);
    auto auts = automorphisms(p);
    std::set<std::vector<Atom>> got;
    for (auto& f : auts) {
      CHECK(is_morphism(p, p, f));
      got.insert(f.map);
    }
    CHECK(got == automorphisms_oracle(p));
    for (auto& f : auts) {
      CHECK(got.count(inverse(f).map));
      for (auto& g : auts) CHECK(got.count(compose(f, g).map));
    }
    auto parts = orbits(p);
    CHECK(parts.size() <= p.size());
    std::size_t covered = 0;
    for (auto& block : parts) {
      covered += block.size();
      // block = {theta(least) : theta in Aut}
      std::set<Atom> image;
      for (auto& f : auts) image.insert(f(block.front()));
      CHECK(AtomSet(image.begin(), image.end()) == block);
    }
    CHECK(covered == p.size());
  }
}

TEST_CASE("orbit examples") {
  CHECK(orbits(PartialPair(2)) == std::vector<AtomSet>{{0, 1}});
  CHECK(orbits(with_codes(2, {{{{0}, 0}, 0}})) == std::vector<AtomSet>{{0}, {1}});
  CHECK(orbits(PartialPair(1)) == std::vector<AtomSet>{{0}});
}

TEST_CASE("morphism check") {
  // collapsing the free two-atom pair onto p1 is a morphism; the converse direction is not
  auto two = PartialPair(2);
  CHECK(is_morphism(two, p1(), Morphism{{0, 0}}));
  auto coded = with_codes(2, {{{{0}, 1}, 0}});
  CHECK_FALSE(is_morphism(coded, PartialPair(2), Morphism{{0, 1}}));
  CHECK(is_morphism(coded, p1(), Morphism{{0, 0}}));
}

TEST_CASE("pair json round-trip and rejection") {
  auto j = nlohmann::json::parse(R"({"atoms": ["a0", "a1"],
      "coding": [{"args": ["a1", "a0"], "res": "a0", "value": "a1"}]})");
  auto p = pair_from_json(j);
  CHECK(p.size() == 2);
  CHECK(p.code({{0, 1}, 0}) == Atom{1});
  CHECK(same_pair(pair_from_json(pair_to_json(p)), p));

  for (const char* bad : {
           R"({"atoms": ["a0"], "coding": [], "extra": 1})",
           R"({"atoms": ["a0"], "coding": [{"args": ["a0", "a0"], "res": "a0", "value": "a0"}]})",
           R"({"atoms": ["a0"], "coding": [{"args": ["b"], "res": "a0", "value": "a0"}]})",
           R"({"atoms": ["a0"], "coding": [{"args": [], "res": "a0", "value": "a0", "x": 0}]})",
           R"({"atoms": ["a0"], "coding": [{"args": [], "res": "a0"}]})",
           R"({"atoms": ["a0", "a0"], "coding": []})",
           R"({"coding": []})",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(pair_from_json(nlohmann::json::parse(bad)), FormatError);
  }
}

TEST_CASE("environment json") {
  auto env = env_from_json(nlohmann::json::parse(R"({"env": [{"var": "x", "atoms": ["a0"]}]})"));
  CHECK(env.at("x") == std::vector<std::string>{"a0"});
}

TEST_CASE("generated sub graph model inside a finite pair") {
  auto p = p1();
  PairCoding handle(p);
  auto empty = generate_subgraphmodel(handle, {}, 5);
  CHECK(empty.saturated);
  CHECK(empty.pair.size() == 0);

  auto closed = generate_subgraphmodel(handle, {0}, 5);
  CHECK(closed.saturated);
  CHECK(closed.rounds == 1);
  CHECK(closed.elements == std::vector<Atom>{0});
  CHECK(same_pair(closed.pair, p));

  // a chain a0 -> a1 -> a2 under c({}, x) needs two rounds to reach a2
  auto chain = with_codes(3, {{{{}, 0}, 1}, {{{}, 1}, 2}});
  PairCoding ch(chain);
  auto one_round = generate_subgraphmodel(ch, {0}, 1);
  CHECK_FALSE(one_round.saturated);
  CHECK(one_round.elements == std::vector<Atom>{0, 1});
  auto full = generate_subgraphmodel(ch, {0}, 10);
  CHECK(full.saturated);
  CHECK(full.rounds == 3);
  CHECK(full.elements == std::vector<Atom>{0, 1, 2});
  CHECK(is_subpair(full.pair, chain));
  CHECK(validate(full.pair).ok());
}
