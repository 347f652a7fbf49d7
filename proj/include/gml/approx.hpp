#pragma once

#include "gml/completion.hpp"
#include "gml/term.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>

namespace gml {

/// Free variables not listed denote the empty set.
using CompletionEnvironment = std::map<std::string, ElementSet>;

/// Exact interpretation of terms in the rank-k restriction B_k of a
/// completion, computed without materializing B_k.
///
/// A value is either an explicit finite set or a suspended abstraction
/// (\x.S, env) capped at some rank c, standing for (\x.S)^{B_k}_env n E_c.
/// Application of a suspended abstraction capped at c >= 1 to a value w is
/// S[x := w n E_{c-1}] n E_{c-1}: the admissible argument sets for a result
/// of rank < c are exactly the finite subsets of E_{c-1}, and interpretation
/// is monotone in the environment. At c = 0 only the coded keys of A remain.
/// Every application through a suspension lowers the cap, so evaluation
/// terminates and only touches the ranks it needs.
class Approximation {
 public:
  struct Value;
  using ValuePtr = std::shared_ptr<const Value>;
  struct EnvNode;
  using Env = std::shared_ptr<const EnvNode>;

  struct Suspended {
    Term abstraction;
    Env env;
    std::uint32_t cap;
  };
  struct Value {
    std::variant<ElementSet, Suspended> repr;
  };
  struct EnvNode {
    ValuePtr value;
    Env next;
  };

  Approximation(const Completion& completion, std::uint32_t k, const CompletionEnvironment& env = {});

  const Completion& completion() const { return completion_; }
  std::uint32_t rank_bound() const { return k_; }

  ValuePtr eval(const Term& t, const Env& env = nullptr) const;
  bool contains(const ValuePtr& v, Element e) const;
  ElementSet materialize(const ValuePtr& v) const;
  ValuePtr restrict(const ValuePtr& v, std::uint32_t cap) const;
  ValuePtr apply(const ValuePtr& fun, const ValuePtr& arg) const;

  static ValuePtr explicit_value(ElementSet s);
  static Env push(const Env& env, ValuePtr v);

 private:
  bool contains_all(const ValuePtr& v, const ElementSet& s) const;

  const Completion& completion_;
  std::uint32_t k_;
  std::map<std::string, ValuePtr> free_;
};

}  // namespace gml
