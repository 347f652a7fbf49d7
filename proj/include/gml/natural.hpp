#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace gml {

using Natural = boost::multiprecision::cpp_int;

/// Cantor pairing: (x, y) -> (x + y)(x + y + 1)/2 + y. Bijective N x N -> N.
Natural cantor_pair(const Natural& x, const Natural& y);
std::pair<Natural, Natural> cantor_unpair(const Natural& n);

/// Bijective code of finite sequences: [] -> 0, x :: xs -> 1 + pair(x, code(xs)).
Natural encode_list(const std::vector<Natural>& xs);
std::vector<Natural> decode_list(Natural n);

/// Bijective code of finite sets of naturals. The ascending elements are
/// turned into gaps (c1, c2 - c1 - 1, ...) and the gap list is list-coded.
/// Input need not be sorted; duplicates are rejected with std::invalid_argument.
Natural encode_set(std::vector<Natural> xs);
std::vector<Natural> decode_set(const Natural& n);

/// Sum of 2^x over the members; members must be < 2^32.
Natural encode_bitset(const std::vector<std::uint32_t>& members);
std::vector<std::uint32_t> decode_bitset(const Natural& n);

/// Largest r with r^e <= n.
Natural integer_root(const Natural& n, unsigned e);

/// Memoized incremental sieve. prime(0) == 2.
std::uint64_t nth_prime(std::size_t k);
/// Index of p among the primes, or -1 when p is not prime.
std::int64_t prime_index(std::uint64_t p);

}  // namespace gml
