#pragma once

#include "gml/natural.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gml {

/// Untyped lambda term in locally nameless form: bound variables are
/// de Bruijn indices, free variables keep their names. Abstractions carry
/// the binder name only as a printing hint, so structural equality is
/// alpha-equivalence.
class Term {
 public:
  enum class Kind : std::uint8_t { Bound, Free, Abs, App };

  static Term bound(std::uint32_t index);
  static Term free(std::string name);
  static Term abs(Term body, std::string hint = "x");
  static Term app(Term fun, Term arg);

  Kind kind() const;
  bool is_bound() const { return kind() == Kind::Bound; }
  bool is_free() const { return kind() == Kind::Free; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_app() const { return kind() == Kind::App; }

  std::uint32_t index() const;
  /// Free variable name, or the binder hint of an abstraction.
  const std::string& name() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  /// Number of nodes (variables count 1).
  std::size_t size() const;
  /// Distinct free variable names, sorted.
  std::vector<std::string> free_names() const;
  /// No free names and every index points at an enclosing binder.
  bool is_closed() const;
  /// Number of enclosing binders this term needs (max dangling index + 1).
  std::uint32_t open_depth() const;

  /// Node identity, stable for the lifetime of the term; used by memo tables.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool alpha_eq(const Term& a, const Term& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// term ::= '\' ident+ '.' term | app ;  app ::= atom+ ;  atom ::= ident | '(' term ')'
/// The names I, T, F and Omega denote the usual combinators and cannot be bound.
Term parse_term(std::string_view text);

/// Prints with the grammar above. Binder hints are reused unless they would
/// capture; otherwise the first free name of the form x<i> is chosen.
std::string to_string(const Term& t);

namespace combinators {
Term I();
Term T();
Term F();
Term Omega();
}  // namespace combinators

bool is_reserved_name(std::string_view name);
bool is_identifier(std::string_view name);

// ---- reduction --------------------------------------------------------------

/// Substitutes `value` for index 0 in `body` (the body of an abstraction).
Term instantiate(const Term& body, const Term& value);

/// One leftmost-outermost beta step, or nullopt on a normal form.
std::optional<Term> reduce_step(const Term& t);
/// All one-step beta reducts, one per redex position.
std::vector<Term> one_step_reducts(const Term& t);
bool has_redex(const Term& t);

struct ReductionResult {
  enum class Status { NormalForm, BudgetExceeded };
  Status status;
  Term term;
  std::size_t steps;
};

ReductionResult normalize(const Term& t, std::size_t budget);

// ---- numeration ---------------------------------------------------------------

/// Bijection N -> identifiers minus the reserved names, in shortlex order over
/// the character order a-z A-Z 0-9 _ (first character a letter).
std::string variable_name(const Natural& n);
Natural variable_index(std::string_view name);

/// Bijective numeration of alpha-classes of terms:
///   Var(i) -> 3i,  Abs(b) -> 3 code(b) + 1,  App(f, a) -> 3 pair(code f, code a) + 2,
/// where Var(i) is a de Bruijn index and an index i >= depth denotes the free
/// variable variable_name(i - depth). godel_decode(0) is the free variable `a`;
/// the first closed term is \x.x with code 1.
Natural godel_encode(const Term& t);
Term godel_decode(const Natural& n);

/// First `limit` closed terms in numeration order.
std::vector<Term> enumerate_closed_terms(std::size_t limit);

}  // namespace gml
