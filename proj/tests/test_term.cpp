#include "doctest.h"
#include "gml/term.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

using namespace gml;

TEST_CASE("parse examples") {
  Term id = parse_term("\\x.x");
  CHECK(id == Term::abs(Term::bound(0)));
  Term omega = parse_term("(\\x.x x)(\\x.x x)");
  Term delta = Term::abs(Term::app(Term::bound(0), Term::bound(0)));
  CHECK(omega == Term::app(delta, delta));
  CHECK(omega == combinators::Omega());
  Term open = parse_term("\\x.y x");
  CHECK(open == Term::abs(Term::app(Term::free("y"), Term::bound(0))));
  CHECK(open.free_names() == std::vector<std::string>{"y"});
  CHECK_FALSE(open.is_closed());
}

TEST_CASE("parse: associativity, multi-binders and aliases") {
  CHECK(parse_term("a b c") == Term::app(Term::app(Term::free("a"), Term::free("b")), Term::free("c")));
  CHECK(parse_term("\\x y.x") == combinators::T());
  CHECK(parse_term("\\x.\\y.y") == combinators::F());
  CHECK(parse_term("T") == combinators::T());
  CHECK(parse_term("I") == combinators::I());
  CHECK(parse_term("Omega") == combinators::Omega());
  // abstraction body extends to the right
  CHECK(parse_term("\\x.x (\\y.y) x") ==
        Term::abs(Term::app(Term::app(Term::bound(0), Term::abs(Term::bound(0))), Term::bound(0))));
  // an abstraction inside an application needs parentheses in this grammar
  CHECK_THROWS_AS(parse_term("\\x.x \\y.y"), ParseError);
  CHECK(parse_term("  ( x_1 )  ") == Term::free("x_1"));
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "\\.x", "(x", "x)", "\\x x", "1x", "\\I.I", "x . y"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_term(bad), ParseError);
  }
  try {
    parse_term("x )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("alpha equality examples") {
  CHECK(alpha_eq(parse_term("\\x.x"), parse_term("\\y.y")));
  CHECK_FALSE(alpha_eq(parse_term("\\x.\\y.x"), parse_term("\\x.\\y.y")));
  CHECK(alpha_eq(parse_term("\\x.x z"), parse_term("\\y.y z")));
  CHECK_FALSE(alpha_eq(parse_term("\\x.x z"), parse_term("\\x.x w")));
}

TEST_CASE("printing avoids capture") {
  // \y. x y where x is free must not print the binder as x
  Term t = Term::abs(Term::app(Term::free("x"), Term::bound(0)), "x");
  std::string s = to_string(t);
  CHECK(parse_term(s) == t);
  CHECK(s != "\\x.x x");
}

TEST_CASE("print/parse round-trip on random terms") {
  std::mt19937 rng(20261018);
  const std::vector<std::string> names{"a", "b", "x", "x0", "v"};
  for (int i = 0; i < 10000; ++i) {
    Term t = testing::random_term(rng, 30, 0, names);
    REQUIRE(t.size() <= 30);
    Term back = parse_term(to_string(t));
    if (!(back == t)) FAIL_CHECK(to_string(t));
  }
}

TEST_CASE("normalize examples") {
  auto r = normalize(parse_term("I I"), 10);
  CHECK(r.status == ReductionResult::Status::NormalForm);
  CHECK(r.term == combinators::I());
  CHECK(r.steps == 1);

  auto w = normalize(combinators::Omega(), 10);
  CHECK(w.status == ReductionResult::Status::BudgetExceeded);
  CHECK(w.term == combinators::Omega());
  CHECK(w.steps == 10);

  auto k = normalize(parse_term("T a b"), 10);
  CHECK(k.status == ReductionResult::Status::NormalForm);
  CHECK(k.term == Term::free("a"));

  auto zero = normalize(parse_term("I I"), 0);
  CHECK(zero.status == ReductionResult::Status::BudgetExceeded);
  CHECK(zero.steps == 0);
}

TEST_CASE("leftmost-outermost finds normal forms past a divergent argument") {
  auto r = normalize(parse_term("F Omega I"), 10);
  CHECK(r.status == ReductionResult::Status::NormalForm);
  CHECK(r.term == combinators::I());
  CHECK(r.steps == 2);
}

TEST_CASE("substitution does not capture") {
  // (\x.\y.x) y  ->  \z.y with y still free
  auto r = normalize(parse_term("(\\x.\\y.x) y"), 5);
  CHECK(r.term == Term::abs(Term::free("y")));
}

TEST_CASE("confluence on random terms") {
  std::mt19937 rng(7);
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    Term t = testing::random_term(rng, 16, 0, {"a", "b"});
    auto nf = normalize(t, 200);
    if (nf.status != ReductionResult::Status::NormalForm) continue;
    CHECK_FALSE(has_redex(nf.term));
    for (auto& reduct : one_step_reducts(t)) {
      auto other = normalize(reduct, 200);
      if (other.status != ReductionResult::Status::NormalForm) continue;
      CHECK(other.term == nf.term);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("variable numeration") {
  CHECK(variable_name(0) == "a");
  CHECK(variable_name(25) == "z");
  CHECK(variable_name(26) == "A");
  for (int n = 0; n < 3000; ++n) {
    std::string s = variable_name(n);
    CHECK(is_identifier(s));
    CHECK_FALSE(is_reserved_name(s));
    CHECK(variable_index(s) == n);
  }
  // reserved names are skipped: H is followed by J
  CHECK(variable_index("J") == variable_index("H") + 1);
}

TEST_CASE("godel numeration round-trips") {
  for (int n = 0; n < 1000; ++n) CHECK(godel_encode(godel_decode(n)) == n);
  CHECK(godel_decode(0) == Term::free("a"));
  CHECK(godel_decode(1) == combinators::I());
  CHECK(godel_encode(combinators::I()) == 1);
}

TEST_CASE("godel encode is injective and decode inverts it") {
  auto terms = testing::closed_terms_up_to(7);
  CHECK(terms.size() == 201);
  std::set<Natural> codes;
  for (auto& t : terms) {
    Natural c = godel_encode(t);
    CHECK(godel_decode(c) == t);
    codes.insert(c);
  }
  CHECK(codes.size() == terms.size());
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    Term t = testing::random_term(rng, 20, 0, {"a", "foo", "Z9"});
    CHECK(godel_decode(godel_encode(t)) == t);
  }
}

TEST_CASE("enumerate_closed_terms") {
  CHECK(enumerate_closed_terms(0).empty());
  auto first = enumerate_closed_terms(40);
  REQUIRE(first.size() == 40);
  for (auto& t : first) CHECK(t.is_closed());
  auto prefix = enumerate_closed_terms(15);
  for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == first[i]);
  // independent oracle: filter the code order by closedness
  std::vector<Term> expected;
  for (int n = 0; expected.size() < 40; ++n) {
    Term t = godel_decode(n);
    if (t.is_closed()) expected.push_back(t);
  }
  for (std::size_t i = 0; i < 40; ++i) CHECK(first[i] == expected[i]);
  for (std::size_t i = 1; i < 40; ++i) CHECK(godel_encode(first[i - 1]) < godel_encode(first[i]));
}
