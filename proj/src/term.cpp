#include "gml/term.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gml {

struct Term::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::string name;
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t size = 1;
  std::uint32_t open_depth = 0;
  bool has_free = false;
};

Term Term::bound(std::uint32_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bound;
  n->index = index;
  n->open_depth = index + 1;
  return Term(std::move(n));
}

Term Term::free(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Free;
  n->name = std::move(name);
  n->has_free = true;
  return Term(std::move(n));
}

Term Term::abs(Term body, std::string hint) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->name = std::move(hint);
  n->size = 1 + body.size();
  n->open_depth = body.open_depth() == 0 ? 0 : body.open_depth() - 1;
  n->has_free = body.node_->has_free;
  n->left = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = 1 + fun.size() + arg.size();
  n->open_depth = std::max(fun.open_depth(), arg.open_depth());
  n->has_free = fun.node_->has_free || arg.node_->has_free;
  n->left = std::move(fun);
  n->right = std::move(arg);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
std::uint32_t Term::index() const { return node_->index; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::body() const { return *node_->left; }
const Term& Term::fun() const { return *node_->left; }
const Term& Term::arg() const { return *node_->right; }
std::size_t Term::size() const { return node_->size; }
std::uint32_t Term::open_depth() const { return node_->open_depth; }
bool Term::is_closed() const { return !node_->has_free && node_->open_depth == 0; }

std::vector<std::string> Term::free_names() const {
  std::set<std::string> names;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (!t.node_->has_free) return;
    switch (t.kind()) {
      case Kind::Free: names.insert(t.name()); break;
      case Kind::Abs: walk(t.body()); break;
      case Kind::App: walk(t.fun()); walk(t.arg()); break;
      case Kind::Bound: break;
    }
  };
  walk(*this);
  return {names.begin(), names.end()};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Bound: return a.index() == b.index();
    case Term::Kind::Free: return a.name() == b.name();
    case Term::Kind::Abs: return a.body() == b.body();
    case Term::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

bool alpha_eq(const Term& a, const Term& b) { return a == b; }

namespace combinators {
Term I() { return Term::abs(Term::bound(0), "x"); }
Term T() { return Term::abs(Term::abs(Term::bound(1), "y"), "x"); }
Term F() { return Term::abs(Term::abs(Term::bound(0), "y"), "x"); }
Term Omega() {
  Term delta = Term::abs(Term::app(Term::bound(0), Term::bound(0)), "x");
  return Term::app(delta, delta);
}
}  // namespace combinators

// ---- reduction ----------------------------------------------------------------

namespace {

// Adds `by` to every index >= cutoff.
Term shift(const Term& t, std::uint32_t by, std::uint32_t cutoff) {
  if (by == 0 || t.open_depth() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Bound: return Term::bound(t.index() + by);
    case Term::Kind::Free: return t;
    case Term::Kind::Abs: return Term::abs(shift(t.body(), by, cutoff + 1), t.name());
    case Term::Kind::App: return Term::app(shift(t.fun(), by, cutoff), shift(t.arg(), by, cutoff));
  }
  return t;
}

// Replaces index `depth` by `value` (shifted under binders) and lowers the
// indices above it by one.
Term substitute(const Term& t, const Term& value, std::uint32_t depth) {
  if (t.open_depth() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      if (t.index() == depth) return shift(value, depth, 0);
      return t.index() > depth ? Term::bound(t.index() - 1) : t;
    case Term::Kind::Free: return t;
    case Term::Kind::Abs: return Term::abs(substitute(t.body(), value, depth + 1), t.name());
    case Term::Kind::App:
      return Term::app(substitute(t.fun(), value, depth), substitute(t.arg(), value, depth));
  }
  return t;
}

bool is_redex(const Term& t) { return t.is_app() && t.fun().is_abs(); }

Term contract(const Term& redex) { return instantiate(redex.fun().body(), redex.arg()); }

}  // namespace

Term instantiate(const Term& body, const Term& value) { return substitute(body, value, 0); }

std::optional<Term> reduce_step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Bound:
    case Term::Kind::Free: return std::nullopt;
    case Term::Kind::Abs:
      if (auto b = reduce_step(t.body())) return Term::abs(*b, t.name());
      return std::nullopt;
    case Term::Kind::App:
      if (is_redex(t)) return contract(t);
      if (auto f = reduce_step(t.fun())) return Term::app(*f, t.arg());
      if (auto a = reduce_step(t.arg())) return Term::app(t.fun(), *a);
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Term> one_step_reducts(const Term& t) {
  std::vector<Term> out;
  switch (t.kind()) {
    case Term::Kind::Bound:
    case Term::Kind::Free: break;
    case Term::Kind::Abs:
      for (auto& b : one_step_reducts(t.body())) out.push_back(Term::abs(b, t.name()));
      break;
    case Term::Kind::App:
      if (is_redex(t)) out.push_back(contract(t));
      for (auto& f : one_step_reducts(t.fun())) out.push_back(Term::app(f, t.arg()));
      for (auto& a : one_step_reducts(t.arg())) out.push_back(Term::app(t.fun(), a));
      break;
  }
  return out;
}

bool has_redex(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Bound:
    case Term::Kind::Free: return false;
    case Term::Kind::Abs: return has_redex(t.body());
    case Term::Kind::App: return is_redex(t) || has_redex(t.fun()) || has_redex(t.arg());
  }
  return false;
}

ReductionResult normalize(const Term& t, std::size_t budget) {
  Term current = t;
  std::size_t steps = 0;
  while (true) {
    if (!has_redex(current)) return {ReductionResult::Status::NormalForm, current, steps};
    if (steps == budget) return {ReductionResult::Status::BudgetExceeded, current, steps};
    current = *reduce_step(current);
    ++steps;
  }
}

}  // namespace gml
