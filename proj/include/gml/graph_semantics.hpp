#pragma once

#include "gml/approx.hpp"
#include "gml/completion.hpp"
#include "gml/term.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace gml {

/// interpret(t, restriction(p, k), env) expressed over completion elements.
/// Environment members above rank k are dropped.
ElementSet approx_interpret(const Term& t, const Completion& c, const CompletionEnvironment& env, std::uint32_t k);

/// Membership in approx_interpret without materializing it.
bool approx_contains(const Term& t, const Completion& c, const CompletionEnvironment& env, std::uint32_t k,
                     Element e);

struct MemberResult {
  bool found;
  /// Least rank bound at which e appears when found; the searched bound otherwise.
  std::uint32_t rank;
};

/// Semi-decision: a hit is exact, a miss only says "not up to max_rank".
MemberResult member(const Term& t, const Completion& c, Element e, std::uint32_t max_rank,
                    const CompletionEnvironment& env = {});

struct WitnessSubpair {
  /// Finite subpair of E_A; atom i is elements[i], labels in element syntax.
  PartialPair pair;
  std::vector<Element> elements;

  std::optional<Atom> atom_of(Element e) const;
};

class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite A' <= E_A with e in interpret(t, A', env n A'), built by induction on
/// t (variable: {e}; abstraction: one new coded triple; application: union of
/// the parts plus the used triple). Re-verified with pair semantics.
/// Throws PreconditionFailed when e is not in approx_interpret(t, c, env, k).
WitnessSubpair extract_witness_subpair(const Term& t, const Completion& c, Element e, std::uint32_t k,
                                       const CompletionEnvironment& env = {});

/// Outcome of checking M <= N between bounded approximations. Non-membership
/// is only ever established up to nonmember_bound, so FailsWithEvidence is
/// evidence of failure, not a proof.
struct Verdict {
  enum class Kind { HoldsUpTo, FailsWithEvidence, Unknown };
  Kind kind;
  Term lhs;
  Term rhs;
  /// Rank bound used for the left-hand side.
  std::uint32_t member_bound;
  std::uint32_t nonmember_bound;
  std::optional<Element> witness;
  /// Least rank bound at which the witness enters approx(lhs).
  std::uint32_t member_rank = 0;
  std::optional<WitnessSubpair> witness_subpair;

  bool fails() const { return kind == Kind::FailsWithEvidence; }
};

inline constexpr std::uint32_t kDefaultMemberBound = 2;
inline constexpr std::uint32_t kDefaultNonmemberSlack = 2;

/// Scans approx(M, k_M) in canonical order for an element missing from
/// approx(N, k_N); requires closed terms and k_N >= k_M.
Verdict check_inequation(const Term& lhs, const Term& rhs, const Completion& c, std::uint32_t k_m,
                         std::uint32_t k_n);
/// Both directions, run concurrently.
std::pair<Verdict, Verdict> check_equation(const Term& lhs, const Term& rhs, const Completion& c,
                                           std::uint32_t k_m, std::uint32_t k_n);

const char* to_string(Verdict::Kind kind);
nlohmann::json verdict_to_json(const Verdict& v, const Completion& c);

}  // namespace gml
