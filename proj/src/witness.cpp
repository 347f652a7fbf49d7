#include "gml/graph_semantics.hpp"
#include "gml/pair_semantics.hpp"

#include <algorithm>

namespace gml {

std::optional<Atom> WitnessSubpair::atom_of(Element e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return std::nullopt;
  return static_cast<Atom>(it - elements.begin());
}

namespace {

class WitnessBuilder {
 public:
  WitnessBuilder(const Approximation& approx) : approx_(approx), c_(approx.completion()) {}

  // Bound variables hold explicit sets, innermost last.
  void build(const Term& t, std::vector<ElementSet>& stack, Element e) {
    switch (t.kind()) {
      case Term::Kind::Bound:
      case Term::Kind::Free: elements_.push_back(e); return;
      case Term::Kind::Abs: {
        auto key = c_.invert(e);
        if (!key) throw std::logic_error("abstraction witness is not a coded element");
        stack.push_back(key->first);
        build(t.body(), stack, key->second);
        stack.pop_back();
        record(key->first, key->second, e);
        return;
      }
      case Term::Kind::App: {
        auto env = as_env(stack);
        auto fun = approx_.eval(t.fun(), env);
        auto arg = approx_.eval(t.arg(), env);
        ElementSet args = argument_set(fun, arg, e);
        Element coded = c_.apply_coding(args, e);
        build(t.fun(), stack, coded);
        for (Element a : args) build(t.arg(), stack, a);
        record(args, e, coded);
        return;
      }
    }
  }

  WitnessSubpair finish() {
    WitnessSubpair w;
    w.elements = make_element_set(std::move(elements_));
    std::vector<std::string> labels;
    for (Element x : w.elements) labels.push_back(c_.format(x));
    w.pair = PartialPair(std::move(labels));
    for (auto& [key, value] : keys_) {
      CodingKey k{{}, *w.atom_of(key.second)};
      for (Element a : key.first) k.args.push_back(*w.atom_of(a));
      w.pair.set_code(std::move(k), *w.atom_of(value));
    }
    return w;
  }

 private:
  Approximation::Env as_env(const std::vector<ElementSet>& stack) const {
    Approximation::Env env;
    for (auto& s : stack) env = Approximation::push(env, Approximation::explicit_value(s));
    return env;
  }

  // A finite a <= arg with c(a, e) in fun, as small as greedy removal allows.
  ElementSet argument_set(const Approximation::ValuePtr& fun, const Approximation::ValuePtr& arg, Element e) {
    auto admissible = [&](const ElementSet& a) {
      return std::all_of(a.begin(), a.end(), [&](Element x) { return approx_.contains(arg, x); }) &&
             approx_.contains(fun, c_.apply_coding(a, e));
    };
    std::optional<ElementSet> found;
    if (auto* s = std::get_if<ElementSet>(&fun->repr)) {
      for (Element g : *s) {
        auto key = c_.invert(g);
        if (key && key->second == e && admissible(key->first)) {
          found = key->first;
          break;
        }
      }
    } else {
      auto& susp = std::get<Approximation::Suspended>(fun->repr);
      for (auto& [key, value] : c_.base().coding()) {
        if (found || !e.is_base() || key.res != e.atom()) continue;
        ElementSet a;
        for (Atom x : key.args) a.push_back(Element::base(x));
        if (admissible(a)) found = a;
      }
      // Smallest rank slice of the argument that works; any subset of E_{cap-1} is admissible as a key.
      for (std::uint32_t j = 0; !found && j + 1 <= susp.cap; ++j) {
        ElementSet a = approx_.materialize(approx_.restrict(arg, j));
        if (admissible(a)) found = std::move(a);
      }
    }
    if (!found) throw std::logic_error("no argument set supports the application witness");
    ElementSet a = std::move(*found);
    for (std::size_t i = a.size(); i-- > 0;) {
      ElementSet smaller = a;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (admissible(smaller)) a = std::move(smaller);
    }
    return a;
  }

  void record(const ElementSet& args, Element res, Element value) {
    elements_.insert(elements_.end(), args.begin(), args.end());
    elements_.push_back(res);
    elements_.push_back(value);
    keys_.emplace(std::make_pair(args, res), value);
  }

  const Approximation& approx_;
  const Completion& c_;
  std::vector<Element> elements_;
  std::map<std::pair<ElementSet, Element>, Element> keys_;
};

}  // namespace

WitnessSubpair extract_witness_subpair(const Term& t, const Completion& c, Element e, std::uint32_t k,
                                       const CompletionEnvironment& env) {
  if (!c.is_element(e)) throw PreconditionFailed("not an element of the completion");
  Approximation approx(c, k, env);
  if (!approx.contains(approx.eval(t), e))
    throw PreconditionFailed("element " + c.format(e) + " not found within rank " + std::to_string(k));
  WitnessBuilder builder(approx);
  std::vector<ElementSet> stack(t.open_depth());
  builder.build(t, stack, e);
  WitnessSubpair w = builder.finish();

  PairEnvironment restricted;
  for (auto& [name, members] : env) {
    std::vector<Atom> atoms;
    for (Element x : members)
      if (auto a = w.atom_of(x)) atoms.push_back(*a);
    restricted.emplace(name, make_atom_set(std::move(atoms)));
  }
  if (!contains(interpret(t, w.pair, restricted), *w.atom_of(e)))
    throw std::logic_error("witness subpair failed re-verification");
  return w;
}

}  // namespace gml
