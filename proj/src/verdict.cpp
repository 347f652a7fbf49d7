#include "gml/graph_semantics.hpp"
#include "gml/pair_io.hpp"

#include <future>

namespace gml {

Verdict check_inequation(const Term& lhs, const Term& rhs, const Completion& c, std::uint32_t k_m,
                         std::uint32_t k_n) {
  if (!lhs.is_closed() || !rhs.is_closed()) throw std::invalid_argument("inequations relate closed terms");
  if (k_n < k_m) throw std::invalid_argument("nonmember bound must be at least the member bound");

  Verdict v{Verdict::Kind::HoldsUpTo, lhs, rhs, k_m, k_n, std::nullopt, 0, std::nullopt};
  Approximation left(c, k_m);
  Approximation right(c, k_n);
  auto rhs_value = right.eval(rhs);
  // Canonical order, so the first miss is the least witness.
  for (Element alpha : left.materialize(left.eval(lhs))) {
    if (right.contains(rhs_value, alpha)) continue;
    v.kind = Verdict::Kind::FailsWithEvidence;
    v.witness = alpha;
    v.member_rank = member(lhs, c, alpha, k_m).rank;
    v.witness_subpair = extract_witness_subpair(lhs, c, alpha, v.member_rank);
    return v;
  }
  return v;
}

std::pair<Verdict, Verdict> check_equation(const Term& lhs, const Term& rhs, const Completion& c,
                                           std::uint32_t k_m, std::uint32_t k_n) {
  auto backward = std::async(std::launch::async, [&] { return check_inequation(rhs, lhs, c, k_m, k_n); });
  Verdict forward = check_inequation(lhs, rhs, c, k_m, k_n);
  return {std::move(forward), backward.get()};
}

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::HoldsUpTo: return "holds_up_to";
    case Verdict::Kind::FailsWithEvidence: return "fails_with_evidence";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

nlohmann::json verdict_to_json(const Verdict& v, const Completion& c) {
  nlohmann::json j;
  j["inequation"] = {{"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}};
  j["kind"] = to_string(v.kind);
  j["member_bound"] = v.member_bound;
  j["nonmember_bound"] = v.nonmember_bound;
  if (v.fails()) {
    j["witness"] = c.format(*v.witness);
    j["member_rank"] = v.member_rank;
    j["witness_subpair"] = pair_to_json(v.witness_subpair->pair);
    j["note"] = "witness is in lhs exactly; absence from rhs is only checked up to nonmember_bound";
  } else {
    j["note"] = "approx(lhs, member_bound) is included in approx(rhs, nonmember_bound)";
  }
  return j;
}

}  // namespace gml
