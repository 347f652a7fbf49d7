#include "gml/natural.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace gml {

Natural cantor_pair(const Natural& x, const Natural& y) {
  Natural s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& n) {
  // w = floor((sqrt(8n + 1) - 1) / 2)
  Natural disc = 8 * n + 1;
  Natural w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  Natural t = w * (w + 1) / 2;
  Natural y = n - t;
  return {w - y, y};
}

Natural encode_list(const std::vector<Natural>& xs) {
  Natural code = 0;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) code = 1 + cantor_pair(*it, code);
  return code;
}

std::vector<Natural> decode_list(Natural n) {
  std::vector<Natural> out;
  while (n != 0) {
    auto [head, tail] = cantor_unpair(n - 1);
    out.push_back(std::move(head));
    n = std::move(tail);
  }
  return out;
}

Natural encode_set(std::vector<Natural> xs) {
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("encode_set: duplicate member");
  std::vector<Natural> gaps;
  gaps.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    gaps.push_back(i == 0 ? xs[0] : xs[i] - xs[i - 1] - 1);
  return encode_list(gaps);
}

std::vector<Natural> decode_set(const Natural& n) {
  std::vector<Natural> gaps = decode_list(n);
  std::vector<Natural> out;
  out.reserve(gaps.size());
  for (std::size_t i = 0; i < gaps.size(); ++i)
    out.push_back(i == 0 ? gaps[0] : out.back() + gaps[i] + 1);
  return out;
}

Natural encode_bitset(const std::vector<std::uint32_t>& members) {
  Natural n = 0;
  for (auto m : members) boost::multiprecision::bit_set(n, m);
  return n;
}

std::vector<std::uint32_t> decode_bitset(const Natural& n) {
  std::vector<std::uint32_t> out;
  if (n == 0) return out;
  auto top = boost::multiprecision::msb(n);
  for (std::uint32_t i = 0; i <= top; ++i)
    if (boost::multiprecision::bit_test(n, i)) out.push_back(i);
  return out;
}

Natural integer_root(const Natural& n, unsigned e) {
  if (e == 0) throw std::invalid_argument("integer_root: zero exponent");
  if (n < 2 || e == 1) return n;
  Natural lo = 0;
  Natural hi = Natural(1) << (boost::multiprecision::msb(n) / e + 1);
  while (lo < hi) {
    Natural mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, e) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

namespace {

struct PrimeTable {
  std::mutex mutex;
  std::vector<std::uint64_t> primes;
  std::uint64_t sieved_to = 1;

  void extend_to(std::uint64_t limit) {
    if (limit <= sieved_to) return;
    limit = std::max<std::uint64_t>(limit, 2 * sieved_to);
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
      if (!composite[i])
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    primes.clear();
    for (std::uint64_t i = 2; i <= limit; ++i)
      if (!composite[i]) primes.push_back(i);
    sieved_to = limit;
  }
};

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

}  // namespace

std::uint64_t nth_prime(std::size_t k) {
  auto& table = prime_table();
  std::lock_guard lock(table.mutex);
  while (table.primes.size() <= k) table.extend_to(std::max<std::uint64_t>(64, table.sieved_to * 2));
  return table.primes[k];
}

std::int64_t prime_index(std::uint64_t p) {
  auto& table = prime_table();
  std::lock_guard lock(table.mutex);
  table.extend_to(std::max<std::uint64_t>(p, 64));
  auto it = std::lower_bound(table.primes.begin(), table.primes.end(), p);
  if (it == table.primes.end() || *it != p) return -1;
  return it - table.primes.begin();
}

}  // namespace gml
