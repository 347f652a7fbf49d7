#include "gml/minimal_model.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <future>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace gml::minmodel {

namespace {

Natural label_value(const std::string& label) {
  if (label.empty() || !std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("atom label '" + label + "' is not a natural");
  return Natural(label);
}

std::string decimal(const Natural& n) { return n.str(); }

struct ValidCodes {
  std::mutex mutex;
  std::vector<Natural> codes;
  Natural next = 0;

  // Scans raw codes until `done` holds.
  template <class Done>
  void extend_until(Done done) {
    while (!done()) {
      if (pair_from_code(next)) codes.push_back(next);
      ++next;
    }
  }
};

ValidCodes& valid_codes() {
  static ValidCodes table;
  return table;
}

std::map<std::size_t, PartialPair>& relocation_cache() {
  static std::map<std::size_t, PartialPair> cache;
  return cache;
}
std::mutex relocation_mutex;

}  // namespace

std::optional<PartialPair> pair_from_code(const Natural& code) {
  auto [carrier_bits, coding_code] = cantor_unpair(code);
  if (carrier_bits != 0 && boost::multiprecision::msb(carrier_bits) >= 4096) return std::nullopt;
  std::vector<std::uint32_t> carrier = decode_bitset(carrier_bits);
  std::vector<std::string> labels;
  for (auto x : carrier) labels.push_back(std::to_string(x));
  PartialPair p(std::move(labels));
  auto atom_of = [&](const Natural& x) -> std::optional<Atom> {
    if (x > carrier.back()) return std::nullopt;
    auto it = std::lower_bound(carrier.begin(), carrier.end(), x.convert_to<std::uint32_t>());
    if (it == carrier.end() || *it != x) return std::nullopt;
    return static_cast<Atom>(it - carrier.begin());
  };
  for (const Natural& entry : decode_set(coding_code)) {
    if (carrier.empty()) return std::nullopt;
    auto [key_code, value] = cantor_unpair(entry);
    auto [args_bits, res] = cantor_unpair(key_code);
    auto v = atom_of(value);
    auto r = atom_of(res);
    if (!v || !r) return std::nullopt;
    if (args_bits != 0 && boost::multiprecision::msb(args_bits) > carrier.back()) return std::nullopt;
    std::vector<Atom> args;
    for (auto x : decode_bitset(args_bits)) {
      auto a = atom_of(x);
      if (!a) return std::nullopt;
      args.push_back(*a);
    }
    CodingKey key{std::move(args), *r};
    if (p.in_domain(key)) return std::nullopt;
    p.set_code(std::move(key), *v);
  }
  if (!validate(p).ok()) return std::nullopt;
  return p;
}

Natural pair_code(const PartialPair& p) {
  std::vector<std::uint32_t> carrier;
  std::vector<Natural> values;
  for (auto& l : p.labels()) {
    values.push_back(label_value(l));
    if (values.back() >= 4096) throw std::invalid_argument("carrier member too large to number");
    carrier.push_back(values.back().convert_to<std::uint32_t>());
  }
  std::vector<Natural> entries;
  for (auto& [key, value] : p.coding()) {
    std::vector<std::uint32_t> args;
    for (Atom a : key.args) args.push_back(carrier.at(a));
    Natural key_code = cantor_pair(encode_bitset(args), values.at(key.res));
    entries.push_back(cantor_pair(key_code, values.at(value)));
  }
  return cantor_pair(encode_bitset(carrier), encode_set(std::move(entries)));
}

PartialPair enumerate_pair(std::size_t k) {
  auto& table = valid_codes();
  std::lock_guard lock(table.mutex);
  table.extend_until([&] { return table.codes.size() > k; });
  return *pair_from_code(table.codes[k]);
}

std::size_t encode_pair(const PartialPair& p) {
  if (!validate(p).ok()) throw std::invalid_argument("encode_pair: invalid pair");
  Natural code = pair_code(p);
  auto& table = valid_codes();
  std::lock_guard lock(table.mutex);
  table.extend_until([&] { return table.next > code; });
  auto it = std::lower_bound(table.codes.begin(), table.codes.end(), code);
  return static_cast<std::size_t>(it - table.codes.begin());
}

std::vector<Natural> carrier_values(const PartialPair& p) {
  std::vector<Natural> out;
  for (auto& l : p.labels()) out.push_back(label_value(l));
  return out;
}

PartialPair relocate(std::size_t k) {
  {
    std::lock_guard lock(relocation_mutex);
    if (auto it = relocation_cache().find(k); it != relocation_cache().end()) return it->second;
  }
  PartialPair numbered = enumerate_pair(k);
  Natural prime = nth_prime(k);
  std::vector<std::string> labels;
  for (const Natural& x : carrier_values(numbered))
    labels.push_back(decimal(boost::multiprecision::pow(prime, x.convert_to<unsigned>() + 1)));
  PartialPair relocated(std::move(labels));
  for (auto& [key, value] : numbered.coding()) relocated.set_code(key, value);
  std::lock_guard lock(relocation_mutex);
  return relocation_cache().emplace(k, std::move(relocated)).first->second;
}

Morphism relocation_isomorphism(const PartialPair& numbered, const PartialPair& relocated) {
  if (numbered.size() != relocated.size()) throw std::invalid_argument("carriers differ in size");
  Morphism f;
  for (Atom i = 0; i < numbered.size(); ++i) f.map.push_back(i);
  if (!is_morphism(numbered, relocated, f) || !is_morphism(relocated, numbered, inverse(f)))
    throw std::logic_error("relocation is not an isomorphism");
  return f;
}

namespace {

struct Factored {
  std::size_t component;
  std::uint32_t exponent_minus_one;
};

constexpr std::uint64_t kMaxPrimeBase = 1'000'000;

std::optional<Factored> prime_power(const Natural& n) {
  if (n < 2) return std::nullopt;
  // The first exact root from the top has the maximal exponent; n is a prime
  // power iff that root is prime.
  unsigned top = static_cast<unsigned>(boost::multiprecision::msb(n));
  for (unsigned e = top + 1; e >= 1; --e) {
    Natural r = integer_root(n, e);
    if (r < 2 || boost::multiprecision::pow(r, e) != n) continue;
    if (r > kMaxPrimeBase) {
      if (boost::multiprecision::miller_rabin_test(r, 25))
        throw std::out_of_range("prime base beyond the supported range");
      return std::nullopt;
    }
    auto index = prime_index(r.convert_to<std::uint64_t>());
    if (index < 0) return std::nullopt;
    return Factored{static_cast<std::size_t>(index), e - 1};
  }
  return std::nullopt;
}

}  // namespace

bool is_in_P(const Natural& n) {
  auto f = prime_power(n);
  if (!f) return false;
  auto carrier = carrier_values(enumerate_pair(f->component));
  return std::find(carrier.begin(), carrier.end(), Natural(f->exponent_minus_one)) != carrier.end();
}

std::size_t component_of(const Natural& n) {
  if (!is_in_P(n)) throw std::invalid_argument(decimal(n) + " is not in P");
  return prime_power(n)->component;
}

// ---- coded elements ------------------------------------------------------------------

struct CodedElement::Node {
  bool atom;
  Natural value;
  std::vector<CodedElement> args;
  std::optional<CodedElement> res;
};

CodedElement CodedElement::atom(Natural n) {
  return CodedElement(std::make_shared<const Node>(Node{true, std::move(n), {}, std::nullopt}));
}

CodedElement CodedElement::pair(std::vector<CodedElement> args, CodedElement res) {
  std::sort(args.begin(), args.end());
  args.erase(std::unique(args.begin(), args.end()), args.end());
  return CodedElement(std::make_shared<const Node>(Node{false, 0, std::move(args), std::move(res)}));
}

bool CodedElement::is_atom() const { return node_->atom; }
const Natural& CodedElement::value() const { return node_->value; }
const std::vector<CodedElement>& CodedElement::args() const { return node_->args; }
const CodedElement& CodedElement::res() const { return *node_->res; }

std::strong_ordering operator<=>(const CodedElement& a, const CodedElement& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_atom()) {
    if (a.value() < b.value()) return std::strong_ordering::less;
    if (a.value() > b.value()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  auto c = std::lexicographical_compare_three_way(a.args().begin(), a.args().end(), b.args().begin(),
                                                  b.args().end());
  if (c != 0) return c;
  return a.res() <=> b.res();
}

CodedElement universal_coding(const std::vector<CodedElement>& args, const CodedElement& res) {
  bool all_atoms = res.is_atom() && std::all_of(args.begin(), args.end(), [](auto& a) { return a.is_atom(); });
  if (all_atoms) {
    std::size_t k = component_of(res.value());
    bool same = std::all_of(args.begin(), args.end(), [&](auto& a) { return component_of(a.value()) == k; });
    if (same) {
      PartialPair component = relocate(k);
      auto atom = [&](const CodedElement& e) { return *component.find(decimal(e.value())); };
      std::vector<Atom> key_args;
      for (auto& a : args) key_args.push_back(atom(a));
      if (auto value = component.code({make_atom_set(std::move(key_args)), atom(res)}))
        return CodedElement::atom(label_value(component.label(*value)));
    }
  }
  return CodedElement::pair(args, res);
}

Natural encode_element(const CodedElement& e) {
  if (e.is_atom()) return 2 * e.value();
  std::vector<Natural> codes;
  for (auto& a : e.args()) codes.push_back(encode_element(a));
  return 2 * cantor_pair(encode_set(std::move(codes)), encode_element(e.res())) + 1;
}

CodedElement decode_element(const Natural& n) {
  if (n % 2 == 0) {
    Natural v = n / 2;
    if (!is_in_P(v)) throw std::invalid_argument("atom code outside P");
    return CodedElement::atom(std::move(v));
  }
  auto [set_code, res_code] = cantor_unpair((n - 1) / 2);
  std::vector<CodedElement> args;
  for (auto& c : decode_set(set_code)) args.push_back(decode_element(c));
  CodedElement res = decode_element(res_code);
  CodedElement e = CodedElement::pair(std::move(args), std::move(res));
  if (universal_coding(e.args(), e.res()) != e) throw std::invalid_argument("pair code of a coded key");
  return e;
}

std::string format(const CodedElement& e) {
  if (e.is_atom()) return decimal(e.value());
  std::string out = "({";
  for (std::size_t i = 0; i < e.args().size(); ++i) {
    if (i) out += ',';
    out += format(e.args()[i]);
  }
  return out + "}," + format(e.res()) + ")";
}

UniversalCoding::UniversalCoding(const PartialPair& source) : atoms_(carrier_values(source)) {}

CodedElement embed_component_element(const Completion& component, Element e) {
  return CanonicalMorphism<UniversalCoding>(component, UniversalCoding(component.base()))(e);
}

// ---- search --------------------------------------------------------------------------------

SearchOutcome search_counterexample(const Term& lhs, const Term& rhs, std::size_t max_index, std::uint32_t k_m,
                                    std::uint32_t k_n) {
  struct Scan {
    std::optional<Counterexample> hit;
    bool skipped = false;
  };
  auto scan = [&](std::size_t k) {
    Scan s;
    try {
      auto component = std::make_shared<const Completion>(relocate(k));
      Verdict v = check_inequation(lhs, rhs, *component, k_m, k_n);
      if (v.fails()) s.hit = Counterexample{k, component, std::move(v)};
    } catch (const CeilingExceeded& e) {
      std::clog << "component " << k << " skipped: " << e.what() << '\n';
      s.skipped = true;
    }
    return s;
  };

  SearchOutcome outcome;
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start <= max_index; start += width) {
    std::vector<std::future<Scan>> batch;
    for (std::size_t k = start; k <= max_index && k < start + width; ++k) {
      relocate(k);
      batch.push_back(std::async(std::launch::async, scan, k));
    }
    // Results are merged in index order, so the least failing component wins.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      Scan s = batch[i].get();
      if (s.skipped) outcome.skipped.push_back(start + i);
      if (s.hit && !outcome.hit) outcome.hit = std::move(s.hit);
    }
    if (outcome.hit) break;
  }
  return outcome;
}

bool restriction_property_check(const Term& q, std::size_t k, std::uint32_t r, std::vector<std::size_t> others) {
  if (!q.is_closed()) throw std::invalid_argument("restriction property is stated for closed terms");
  if (others.empty())
    for (std::size_t j = 0; others.size() < 2; ++j)
      if (j != k && relocate(j).size() > 0) others.push_back(j);

  PartialPair component = relocate(k);
  PartialPair joined = component;
  for (std::size_t j : others)
    if (j != k) joined = pair_union(joined, relocate(j));

  Completion small(component);
  Completion large(joined);
  CanonicalMorphism<CompletionCoding> embed(small, CompletionCoding(large, component));
  Approximation inside(small, r);
  Approximation outside(large, r);
  auto q_inside = inside.eval(q);
  auto q_outside = outside.eval(q);
  for (Element e : small.elements_up_to(r)) {
    Element image = embed(e);
    if (image.rank() != e.rank()) return false;
    if (inside.contains(q_inside, e) != outside.contains(q_outside, image)) return false;
  }
  return true;
}

}  // namespace gml::minmodel
