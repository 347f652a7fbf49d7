#include "doctest.h"
#include "gml/pair_semantics.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace gml;
using gml::testing::p1;

namespace {

AtomSet as_atoms(const std::set<Atom>& s) { return AtomSet(s.begin(), s.end()); }

}  // namespace

TEST_CASE("interpret examples") {
  CHECK(interpret(Term::free("x"), p1(), {{"x", {}}}).empty());
  CHECK(interpret(Term::free("x"), p1()).empty());
  CHECK(interpret(combinators::I(), p1()) == AtomSet{0});
  CHECK(interpret(parse_term("\\x.x x"), p1()) == AtomSet{0});
  CHECK(interpret(combinators::Omega(), p1()) == AtomSet{0});
  CHECK(omega_characterization(p1()) == AtomSet{0});
  CHECK(interpret(Term::free("x"), p1(), {{"x", {0}}}) == AtomSet{0});
}

TEST_CASE("environment outside the carrier is rejected") {
  CHECK_THROWS_AS(interpret(Term::free("x"), p1(), {{"x", {3}}}), std::invalid_argument);
}

TEST_CASE("free pairs interpret every closed abstraction as empty") {
  for (auto& t : testing::closed_terms_up_to(5)) CHECK(interpret(t, PartialPair(2)).empty());
  CHECK(omega_characterization(PartialPair(3)).empty());
}

TEST_CASE("omega characterization agrees with the interpretation of Omega") {
  std::mt19937 rng(101);
  for (int i = 0; i < 100; ++i) {
    auto p = testing::random_pair(rng, 3, 6);
    CHECK(omega_characterization(p) == interpret(combinators::Omega(), p));
  }
}

TEST_CASE("interpret matches the naive oracle on every small pair and small closed term") {
  auto pairs = testing::all_small_pairs(2, 2);
  auto terms = testing::closed_terms_up_to(7);
  REQUIRE(terms.size() == 201);
  std::size_t checked = 0;
  for (auto& p : pairs) {
    testing::NaivePairOracle oracle(p);
    for (auto& t : terms) {
      AtomSet got = interpret(t, p);
      if (got != as_atoms(oracle.eval(t))) FAIL_CHECK(to_string(t));
      for (Atom a : got) CHECK(a < p.size());
      ++checked;
    }
  }
  CHECK(checked == pairs.size() * 201);
}

TEST_CASE("open terms match the oracle under random environments") {
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    auto p = testing::random_pair(rng, 3, 5, 1);
    Term t = testing::random_term(rng, 12, 0, {"x", "y"});
    std::map<std::string, std::set<Atom>> oenv;
    PairEnvironment env;
    for (const char* v : {"x", "y"}) {
      std::set<Atom> s;
      for (Atom a = 0; a < p.size(); ++a)
        if (rng() % 2) s.insert(a);
      oenv[v] = s;
      env[v] = as_atoms(s);
    }
    CHECK(interpret(t, p, env) == as_atoms(testing::NaivePairOracle(p).eval(t, {}, oenv)));
  }
}

TEST_CASE("monotone in the pair and the environment") {
  std::mt19937 rng(23);
  for (int i = 0; i < 400; ++i) {
    auto big = testing::random_pair(rng, 3, 6, 1);
    // a random subpair: drop coded triples at random
    PartialPair small(big.labels());
    for (auto& [k, v] : big.coding())
      if (rng() % 2) small.set_code(k, v);
    REQUIRE(is_subpair(small, big));
    Term t = testing::random_term(rng, 10, 0, {"x"});
    AtomSet sigma;
    for (Atom a = 0; a < big.size(); ++a)
      if (rng() % 2) sigma.push_back(a);
    AtomSet rho;
    for (Atom a : sigma)
      if (rng() % 2) rho.push_back(a);
    CHECK(is_subset(interpret(t, small, {{"x", rho}}), interpret(t, big, {{"x", sigma}})));
  }
}
