#pragma once

#include "gml/pair.hpp"
#include "gml/term.hpp"

#include <map>
#include <string>

namespace gml {

/// Free variables not listed denote the empty set.
using PairEnvironment = std::map<std::string, AtomSet>;

/// Exact interpretation of `t` in the finite partial pair `p`:
///   x      -> env(x)
///   M N    -> {alpha : (a, alpha) in dom c, a <= N, c(a, alpha) in M}
///   \x.M   -> {c(a, alpha) : (a, alpha) in dom c, alpha in M[x := a]}
/// Throws std::invalid_argument when the environment leaves the carrier.
AtomSet interpret(const Term& t, const PartialPair& p, const PairEnvironment& env = {});

/// {alpha : exists a <= (\x.xx)^p with (a, alpha) in dom c and c(a, alpha) in a}
AtomSet omega_characterization(const PartialPair& p);

}  // namespace gml
