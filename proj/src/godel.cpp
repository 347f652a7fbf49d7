#include "gml/term.hpp"

#include <algorithm>
#include <array>

namespace gml {

namespace {

constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr std::string_view kTail = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";

// Shortlex rank of an identifier, reserved names included.
Natural raw_index(std::string_view name) {
  Natural offset = 0;
  Natural block = kLetters.size();
  for (std::size_t len = 1; len < name.size(); ++len) {
    offset += block;
    block *= kTail.size();
  }
  Natural within = kLetters.find(name[0]);
  for (std::size_t i = 1; i < name.size(); ++i) within = within * kTail.size() + kTail.find(name[i]);
  return offset + within;
}

std::string raw_name(Natural r) {
  std::size_t len = 1;
  Natural block = kLetters.size();
  while (r >= block) {
    r -= block;
    block *= kTail.size();
    ++len;
  }
  std::string out(len, ' ');
  for (std::size_t i = len; i-- > 1;) {
    out[i] = kTail[static_cast<std::size_t>(r % kTail.size())];
    r /= kTail.size();
  }
  out[0] = kLetters[static_cast<std::size_t>(r)];
  return out;
}

const std::array<Natural, 4>& reserved_ranks() {
  static const std::array<Natural, 4> ranks = [] {
    std::array<Natural, 4> r{raw_index("F"), raw_index("I"), raw_index("T"), raw_index("Omega")};
    std::sort(r.begin(), r.end());
    return r;
  }();
  return ranks;
}

Natural encode(const Term& t, std::uint32_t depth) {
  switch (t.kind()) {
    case Term::Kind::Bound: return Natural(3) * t.index();
    case Term::Kind::Free: return 3 * (Natural(depth) + variable_index(t.name()));
    case Term::Kind::Abs: return 3 * encode(t.body(), depth + 1) + 1;
    case Term::Kind::App: return 3 * cantor_pair(encode(t.fun(), depth), encode(t.arg(), depth)) + 2;
  }
  return 0;
}

Term decode(const Natural& n, std::uint32_t depth) {
  Natural q = n / 3;
  switch (static_cast<int>(n % 3)) {
    case 0:
      if (q < depth) return Term::bound(static_cast<std::uint32_t>(q));
      return Term::free(variable_name(q - depth));
    case 1: return Term::abs(decode(q, depth + 1), "x");
    default: {
      auto [f, a] = cantor_unpair(q);
      return Term::app(decode(f, depth), decode(a, depth));
    }
  }
}

}  // namespace

std::string variable_name(const Natural& n) {
  Natural r = n;
  for (auto& reserved : reserved_ranks())
    if (reserved <= r) ++r;
  return raw_name(r);
}

Natural variable_index(std::string_view name) {
  if (!is_identifier(name) || is_reserved_name(name))
    throw std::invalid_argument("not a variable name: " + std::string(name));
  Natural r = raw_index(name);
  Natural below = 0;
  for (auto& reserved : reserved_ranks())
    if (reserved < r) ++below;
  return r - below;
}

Natural godel_encode(const Term& t) { return encode(t, 0); }

Term godel_decode(const Natural& n) { return decode(n, 0); }

std::vector<Term> enumerate_closed_terms(std::size_t limit) {
  std::vector<Term> out;
  out.reserve(limit);
  for (Natural n = 0; out.size() < limit; ++n) {
    Term t = godel_decode(n);
    if (t.is_closed()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace gml
