#include "gml/approx.hpp"

#include <algorithm>

namespace gml {

namespace {

ElementSet up_to_rank(const ElementSet& s, std::uint32_t cap) {
  ElementSet out;
  for (Element e : s)
    if (e.rank() <= cap) out.push_back(e);
  return out;
}

}  // namespace

Approximation::Approximation(const Completion& completion, std::uint32_t k, const CompletionEnvironment& env)
    : completion_(completion), k_(k) {
  for (auto& [name, elements] : env) {
    for (Element e : elements)
      if (!completion.is_element(e))
        throw std::invalid_argument("environment binds " + name + " to a non-element of the completion");
    free_.emplace(name, explicit_value(up_to_rank(make_element_set(elements), k)));
  }
}

Approximation::ValuePtr Approximation::explicit_value(ElementSet s) {
  return std::make_shared<const Value>(Value{std::move(s)});
}

Approximation::Env Approximation::push(const Env& env, ValuePtr v) {
  return std::make_shared<const EnvNode>(EnvNode{std::move(v), env});
}

Approximation::ValuePtr Approximation::eval(const Term& t, const Env& env) const {
  switch (t.kind()) {
    case Term::Kind::Bound: {
      const EnvNode* node = env.get();
      for (std::uint32_t i = 0; i < t.index() && node; ++i) node = node->next.get();
      if (!node) return explicit_value({});
      return node->value;
    }
    case Term::Kind::Free: {
      auto it = free_.find(t.name());
      return it == free_.end() ? explicit_value({}) : it->second;
    }
    case Term::Kind::Abs: return std::make_shared<const Value>(Value{Suspended{t, env, k_}});
    case Term::Kind::App: return apply(eval(t.fun(), env), eval(t.arg(), env));
  }
  return explicit_value({});
}

Approximation::ValuePtr Approximation::restrict(const ValuePtr& v, std::uint32_t cap) const {
  if (auto* s = std::get_if<ElementSet>(&v->repr)) {
    if (std::all_of(s->begin(), s->end(), [&](Element e) { return e.rank() <= cap; })) return v;
    return explicit_value(up_to_rank(*s, cap));
  }
  auto& susp = std::get<Suspended>(v->repr);
  if (susp.cap <= cap) return v;
  return std::make_shared<const Value>(Value{Suspended{susp.abstraction, susp.env, cap}});
}

bool Approximation::contains(const ValuePtr& v, Element e) const {
  if (auto* s = std::get_if<ElementSet>(&v->repr)) return gml::contains(*s, e);
  auto& susp = std::get<Suspended>(v->repr);
  if (e.rank() > susp.cap) return false;
  auto key = completion_.invert(e);
  if (!key) return false;
  ValuePtr body = eval(susp.abstraction.body(), push(susp.env, explicit_value(std::move(key->first))));
  return contains(body, key->second);
}

bool Approximation::contains_all(const ValuePtr& v, const ElementSet& s) const {
  return std::all_of(s.begin(), s.end(), [&](Element e) { return contains(v, e); });
}

Approximation::ValuePtr Approximation::apply(const ValuePtr& fun, const ValuePtr& arg) const {
  std::vector<Element> out;
  if (auto* s = std::get_if<ElementSet>(&fun->repr)) {
    for (Element g : *s) {
      auto key = completion_.invert(g);
      if (key && contains_all(arg, key->first)) out.push_back(key->second);
    }
    return explicit_value(make_element_set(std::move(out)));
  }
  auto& susp = std::get<Suspended>(fun->repr);
  const Term& body = susp.abstraction.body();
  if (susp.cap >= 1) {
    ValuePtr bound = restrict(arg, susp.cap - 1);
    return restrict(eval(body, push(susp.env, bound)), susp.cap - 1);
  }
  for (auto& [key, value] : completion_.base().coding()) {
    ElementSet args;
    for (Atom a : key.args) args.push_back(Element::base(a));
    if (!contains_all(arg, args)) continue;
    if (contains(eval(body, push(susp.env, explicit_value(std::move(args)))), Element::base(key.res)))
      out.push_back(Element::base(key.res));
  }
  return explicit_value(make_element_set(std::move(out)));
}

ElementSet Approximation::materialize(const ValuePtr& v) const {
  if (auto* s = std::get_if<ElementSet>(&v->repr)) return *s;
  auto& susp = std::get<Suspended>(v->repr);
  const Term& body = susp.abstraction.body();
  std::vector<Element> out;
  if (susp.cap == 0) {
    for (auto& [key, value] : completion_.base().coding()) {
      ElementSet args;
      for (Atom a : key.args) args.push_back(Element::base(a));
      if (contains(eval(body, push(susp.env, explicit_value(std::move(args)))), Element::base(key.res)))
        out.push_back(Element::base(value));
    }
    return make_element_set(std::move(out));
  }
  // Coded keys have argument sets inside A, so they are among these subsets.
  const ElementSet& lower = completion_.elements_up_to(susp.cap - 1);
  for_each_subset(lower, completion_.ceiling(), [&](const ElementSet& args) {
    ValuePtr result = restrict(eval(body, push(susp.env, explicit_value(args))), susp.cap - 1);
    for (Element res : materialize(result)) out.push_back(completion_.apply_coding(args, res));
  });
  return make_element_set(std::move(out));
}

}  // namespace gml

#include "gml/graph_semantics.hpp"

namespace gml {

ElementSet approx_interpret(const Term& t, const Completion& c, const CompletionEnvironment& env, std::uint32_t k) {
  Approximation approx(c, k, env);
  return approx.materialize(approx.eval(t));
}

bool approx_contains(const Term& t, const Completion& c, const CompletionEnvironment& env, std::uint32_t k,
                     Element e) {
  Approximation approx(c, k, env);
  return approx.contains(approx.eval(t), e);
}

MemberResult member(const Term& t, const Completion& c, Element e, std::uint32_t max_rank,
                    const CompletionEnvironment& env) {
  if (!c.is_element(e)) throw std::invalid_argument("not an element of the completion");
  // e is not in E_j below its own rank.
  for (std::uint32_t j = e.rank(); j <= max_rank; ++j)
    if (approx_contains(t, c, env, j, e)) return {true, j};
  return {false, max_rank};
}

}  // namespace gml
