#pragma once

#include "gml/completion.hpp"
#include "gml/graph_semantics.hpp"
#include "gml/natural.hpp"
#include "gml/pair.hpp"
#include "gml/term.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gml::minmodel {

// ---- numeration of finite partial pairs with carrier in N ---------------------
//
// A pair N with carrier C and coding entries ((a, alpha) -> v) has raw code
//   cantor(bits(C), set_code{ cantor(cantor(bits(a), alpha), v) })
// where bits(S) = sum of 2^x and set_code is the gap/list bijection of
// natural.hpp. Raw codes of valid pairs are enumerated in ascending order;
// the k-th one is N_k. N_0 is the empty pair. Atoms are the carrier members
// in ascending order, labelled by their decimal value.

std::optional<PartialPair> pair_from_code(const Natural& code);
/// Labels must be decimal naturals.
Natural pair_code(const PartialPair& p);

PartialPair enumerate_pair(std::size_t k);
std::size_t encode_pair(const PartialPair& p);

/// Carrier values of a numbered or relocated pair (labels read as naturals).
std::vector<Natural> carrier_values(const PartialPair& p);

/// P_k: atoms p_k^(x+1) for x in N_k (p_0 = 2), coding transported along
/// x -> p_k^(x+1). Atom i of P_k corresponds to atom i of N_k.
PartialPair relocate(std::size_t k);
/// The atom-wise isomorphism N_k -> P_k, checked in both directions.
Morphism relocation_isomorphism(const PartialPair& numbered, const PartialPair& relocated);

/// n = p_k^(x+1) with x in the carrier of N_k. Prime bases above 10^6 are
/// outside the supported range (std::out_of_range).
bool is_in_P(const Natural& n);
/// Throws std::invalid_argument when n is not in P.
std::size_t component_of(const Natural& n);

// ---- elements of E_P ------------------------------------------------------------

/// AtomCode(n) with n in P, or PairCode(finite set, element).
class CodedElement {
 public:
  static CodedElement atom(Natural n);
  /// No collapse check; see universal_coding.
  static CodedElement pair(std::vector<CodedElement> args, CodedElement res);

  bool is_atom() const;
  const Natural& value() const;
  const std::vector<CodedElement>& args() const;
  const CodedElement& res() const;

  friend bool operator==(const CodedElement& a, const CodedElement& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const CodedElement& a, const CodedElement& b);

 private:
  struct Node;
  explicit CodedElement(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// c_{E_P}: the component coding when every input is an atom of one P_k and
/// the key is coded there, the pair code otherwise.
CodedElement universal_coding(const std::vector<CodedElement>& args, const CodedElement& res);

/// Tag bit 0: atom n -> 2n. Tag bit 1: pair -> 2 cantor(set_code(args), code(res)) + 1.
Natural encode_element(const CodedElement& e);
/// Throws std::invalid_argument on codes that are not elements of E_P.
CodedElement decode_element(const Natural& n);

std::string format(const CodedElement& e);

/// Coding handle over E_P for CanonicalMorphism and generate_subgraphmodel;
/// `source` names the pair whose atoms are embedded (labels read as naturals).
class UniversalCoding {
 public:
  using element_type = CodedElement;

  UniversalCoding() = default;
  explicit UniversalCoding(const PartialPair& source);

  CodedElement embed(Atom a) const { return CodedElement::atom(atoms_.at(a)); }
  CodedElement code(const std::vector<CodedElement>& args, const CodedElement& res) const {
    return universal_coding(args, res);
  }
  std::optional<CodedElement> try_code(const std::vector<CodedElement>& args, const CodedElement& res) const {
    return universal_coding(args, res);
  }
  std::string label(const CodedElement& e) const { return format(e); }

 private:
  std::vector<Natural> atoms_;
};

/// Completion element of component P_k -> element of E_P.
CodedElement embed_component_element(const Completion& component, Element e);

// ---- search -----------------------------------------------------------------------

struct Counterexample {
  std::size_t index;
  std::shared_ptr<const Completion> component;
  Verdict verdict;
};

struct SearchOutcome {
  std::optional<Counterexample> hit;
  /// Components skipped because a ceiling was exceeded.
  std::vector<std::size_t> skipped;
};

/// Runs check_inequation on the completions of P_0 .. P_K and reports the
/// least index that fails with evidence. Components are scanned in parallel.
SearchOutcome search_counterexample(const Term& lhs, const Term& rhs, std::size_t max_index, std::uint32_t k_m,
                                    std::uint32_t k_n);

/// Compares approx(Q) in E_{P_k} with approx(Q) in the completion of
/// P_k + P_j (j in `others`) restricted to P_k material, element by element
/// over E_r(P_k). Empty `others` picks the two least nonempty components != k.
bool restriction_property_check(const Term& q, std::size_t k, std::uint32_t r,
                                std::vector<std::size_t> others = {});

}  // namespace gml::minmodel
