#include "gml/completion.hpp"

#include <algorithm>
#include <cctype>

namespace gml {

std::optional<Atom> RankRestriction::atom_of(Element e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return std::nullopt;
  return static_cast<Atom>(it - elements.begin());
}

Completion::Completion(PartialPair base, std::size_t ceiling) : base_(std::move(base)), ceiling_(ceiling) {
  if (!validate(base_).ok()) throw std::invalid_argument("completion of an invalid partial pair");
}

Element Completion::apply_coding(const ElementSet& args, Element res) const {
  if (res.is_base() && std::all_of(args.begin(), args.end(), [](Element a) { return a.is_base(); })) {
    CodingKey key{{}, res.atom()};
    key.args.reserve(args.size());
    for (Element a : args) key.args.push_back(a.atom());
    if (auto value = base_.code(key)) return Element::base(*value);
  }
  return Element::pair_unchecked(args, res);
}

std::optional<std::pair<ElementSet, Element>> Completion::invert(Element e) const {
  if (!e.is_base()) return std::make_pair(e.args(), e.res());
  auto key = base_.decode(e.atom());
  if (!key) return std::nullopt;
  ElementSet args;
  for (Atom a : key->args) args.push_back(Element::base(a));
  return std::make_pair(std::move(args), Element::base(key->res));
}

bool Completion::is_element(Element e) const {
  if (e.is_base()) return e.atom() < base_.size();
  if (!is_element(e.res())) return false;
  for (Element a : e.args())
    if (!is_element(a)) return false;
  return apply_coding(e.args(), e.res()) == e;
}

std::optional<Natural> Completion::predicted_count(std::uint32_t k) const {
  Natural count = base_.size();
  for (std::uint32_t j = 0; j < k; ++j) {
    if (count > 65536) return std::nullopt;
    unsigned m = count.convert_to<unsigned>();
    count = Natural(base_.size()) + (Natural(1) << m) * m - base_.coding_size();
  }
  return count;
}

void for_each_subset(const ElementSet& universe, std::size_t ceiling,
                     const std::function<void(const ElementSet&)>& visit) {
  const std::size_t n = universe.size();
  if (n >= 63 || (std::uint64_t{1} << n) > ceiling)
    throw CeilingExceeded("enumerating 2^" + std::to_string(n) + " subsets exceeds the ceiling of " +
                          std::to_string(ceiling));
  ElementSet subset;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(universe[i]);
    visit(subset);
  }
}

const ElementSet& Completion::elements_up_to(std::uint32_t k) const {
  std::lock_guard lock(mutex_);
  if (k < levels_.size()) return *levels_[k];
  auto predicted = predicted_count(k);
  if (!predicted || *predicted > ceiling_)
    throw CeilingExceeded("E_" + std::to_string(k) + " has more than " + std::to_string(ceiling_) + " elements");
  if (levels_.empty()) {
    ElementSet atoms;
    for (Atom a = 0; a < base_.size(); ++a) atoms.push_back(Element::base(a));
    levels_.push_back(std::make_unique<ElementSet>(std::move(atoms)));
  }
  while (levels_.size() <= k) {
    const ElementSet& prev = *levels_.back();
    std::vector<Element> next(prev.begin(), prev.end());
    for_each_subset(prev, std::max<std::size_t>(ceiling_, 1), [&](const ElementSet& args) {
      for (Element res : prev) {
        Element e = apply_coding(args, res);
        if (!e.is_base()) next.push_back(e);
      }
    });
    levels_.push_back(std::make_unique<ElementSet>(make_element_set(std::move(next))));
  }
  return *levels_[k];
}

RankRestriction Completion::restriction(std::uint32_t k) const {
  RankRestriction r;
  const ElementSet& carrier = elements_up_to(k);
  r.elements.assign(carrier.begin(), carrier.end());
  std::vector<std::string> labels;
  labels.reserve(carrier.size());
  for (Element e : carrier) labels.push_back(format(e));
  r.pair = PartialPair(std::move(labels));
  // Base atoms sort first, in atom order, so atom ids of A are preserved.
  for (auto& [key, value] : base_.coding()) r.pair.set_code(key, value);
  for (Element e : carrier) {
    if (e.is_base()) continue;
    CodingKey key{{}, *r.atom_of(e.res())};
    for (Element a : e.args()) key.args.push_back(*r.atom_of(a));
    r.pair.set_code(std::move(key), *r.atom_of(e));
  }
  return r;
}

std::string Completion::format(Element e) const {
  if (e.is_base()) return base_.label(e.atom());
  return "(" + format(e.args()) + "," + format(e.res()) + ")";
}

std::string Completion::format(const ElementSet& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += format(s[i]);
  }
  return out + "}";
}

namespace {

class ElementParser {
 public:
  ElementParser(const Completion& c, std::string_view text) : c_(c), text_(text) {}

  Element parse() {
    Element e = element();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("element syntax: " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char ch) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  bool at(char ch) {
    skip();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  Element element() {
    if (at('(')) {
      ++pos_;
      expect('{');
      std::vector<Element> args;
      if (!at('}')) {
        args.push_back(element());
        while (at(',')) {
          ++pos_;
          args.push_back(element());
        }
      }
      expect('}');
      expect(',');
      Element res = element();
      expect(')');
      ElementSet set = make_element_set(args);
      if (set.size() != args.size()) fail("duplicate member in argument set");
      return c_.apply_coding(set, res);
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::string_view("(){},").find(text_[pos_]) == std::string_view::npos &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string label(text_.substr(start, pos_ - start));
    if (label.empty()) fail("expected element");
    auto atom = c_.base().find(label);
    if (!atom) fail("unknown atom '" + label + "'");
    return Element::base(*atom);
  }

  const Completion& c_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element Completion::parse(std::string_view text) const { return ElementParser(*this, text).parse(); }

CompletionCoding::CompletionCoding(const Completion& target, const PartialPair& source) : target_(target) {
  for (Atom a = 0; a < source.size(); ++a) {
    auto t = target.base().find(source.label(a));
    if (!t) throw ExtensionViolated("atom " + source.label(a) + " missing from the target pair");
    atom_map_.push_back(*t);
  }
}

}  // namespace gml
