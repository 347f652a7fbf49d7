#include "gml/pair_semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace gml {

namespace {

class Interpreter {
 public:
  Interpreter(const PartialPair& p, const PairEnvironment& env) : pair_(p), env_(env) {
    // Group the domain by argument set; abstraction evaluates its body once per group.
    for (auto& [key, value] : p.coding()) groups_[key.args].emplace_back(key.res, value);
  }

  AtomSet eval(const Term& t, std::vector<AtomSet>& stack) {
    switch (t.kind()) {
      case Term::Kind::Bound: return stack.at(stack.size() - 1 - t.index());
      case Term::Kind::Free: {
        auto it = env_.find(t.name());
        return it == env_.end() ? AtomSet{} : it->second;
      }
      default: break;
    }
    MemoKey key{t.id(), {}};
    for (std::uint32_t i = 0; i < t.open_depth(); ++i) key.bound.push_back(stack.at(stack.size() - 1 - i));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Atom> out;
    if (t.is_app()) {
      AtomSet fun = eval(t.fun(), stack);
      AtomSet arg = eval(t.arg(), stack);
      for (auto& [k, value] : pair_.coding())
        if (contains(fun, value) && is_subset(k.args, arg)) out.push_back(k.res);
    } else {
      for (auto& [args, entries] : groups_) {
        stack.push_back(args);
        AtomSet body = eval(t.body(), stack);
        stack.pop_back();
        for (auto& [res, value] : entries)
          if (contains(body, res)) out.push_back(value);
      }
    }
    AtomSet result = make_atom_set(std::move(out));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  struct MemoKey {
    const void* node;
    std::vector<AtomSet> bound;
    auto operator<=>(const MemoKey&) const = default;
  };

  const PartialPair& pair_;
  const PairEnvironment& env_;
  std::map<AtomSet, std::vector<std::pair<Atom, Atom>>> groups_;
  std::map<MemoKey, AtomSet> memo_;
};

}  // namespace

AtomSet interpret(const Term& t, const PartialPair& p, const PairEnvironment& env) {
  for (auto& [name, atoms] : env)
    for (Atom a : atoms)
      if (a >= p.size())
        throw std::invalid_argument("environment binds " + name + " to an atom outside the carrier");
  PairEnvironment normalized;
  for (auto& [name, atoms] : env) normalized.emplace(name, make_atom_set(atoms));
  std::vector<AtomSet> stack;
  // Dangling indices (ill-scoped terms) read as empty sets.
  stack.resize(t.open_depth());
  return Interpreter(p, normalized).eval(t, stack);
}

AtomSet omega_characterization(const PartialPair& p) {
  Term delta = Term::abs(Term::app(Term::bound(0), Term::bound(0)), "x");
  AtomSet self_app = interpret(delta, p);
  std::vector<Atom> out;
  for (auto& [key, value] : p.coding())
    if (is_subset(key.args, self_app) && contains(key.args, value)) out.push_back(key.res);
  return make_atom_set(std::move(out));
}

}  // namespace gml
