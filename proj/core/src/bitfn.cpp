#include "ekchains/bitfn.hpp"

#include <algorithm>
#include <numeric>

namespace ekc {

namespace {

// Position of block index x on the orbit of f, which is a copy of ℤ.
std::int64_t orbit_pos(std::uint64_t x) {
  auto s = static_cast<std::int64_t>(x);
  return (x % 2 == 0) ? s / 2 : -(s + 1) / 2;
}

std::uint64_t from_orbit_pos(std::int64_t t) {
  return t >= 0 ? static_cast<std::uint64_t>(2 * t) : static_cast<std::uint64_t>(-2 * t - 1);
}

} // namespace

std::uint64_t f_map(std::uint64_t x) { return from_orbit_pos(orbit_pos(x) + 1); }
std::uint64_t f_inv(std::uint64_t x) { return from_orbit_pos(orbit_pos(x) - 1); }
std::uint64_t f_pow(std::uint64_t x, std::int64_t m) { return from_orbit_pos(orbit_pos(x) + m); }

BitFn BitFn::make(std::vector<bool> prefix, std::vector<bool> block) {
  if (block.empty())
    throw std::invalid_argument("BitFn block must be non-empty");

  const std::size_t p = block.size();
  std::size_t d = p;
  for (std::size_t cand = 1; cand < p; ++cand) {
    if (p % cand != 0)
      continue;
    bool ok = true;
    for (std::size_t i = cand; i < p && ok; ++i)
      ok = block[i] == block[i - cand];
    if (ok) {
      d = cand;
      break;
    }
  }
  block.resize(d);

  // Fold trailing prefix bits into the periodic part.
  while (!prefix.empty() && prefix.back() == block.back()) {
    prefix.pop_back();
    std::rotate(block.rbegin(), block.rbegin() + 1, block.rend());
  }

  BitFn out;
  out.prefix_ = std::move(prefix);
  out.block_ = std::move(block);
  return out;
}

BitFn BitFn::tabulate(const std::function<bool(std::uint64_t)>& fn, std::size_t stable_from,
                      std::size_t period) {
  if (period == 0)
    throw std::invalid_argument("BitFn::tabulate: period must be positive");
  std::vector<bool> prefix(stable_from), block(period);
  for (std::size_t x = 0; x < stable_from; ++x)
    prefix[x] = fn(x);
  for (std::size_t i = 0; i < period; ++i)
    block[i] = fn(stable_from + i);
  for (std::size_t i = 0; i < period; ++i)
    if (fn(stable_from + period + i) != block[i])
      throw std::logic_error("BitFn::tabulate: sampled function is not periodic past " +
                             std::to_string(stable_from));
  return make(std::move(prefix), std::move(block));
}

BitFn BitFn::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("BitFn text needs a '|' between prefix and block");
  auto bits = [](std::string_view s) {
    std::vector<bool> v;
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument(std::string("BitFn text: unexpected character '") + c + "'");
      v.push_back(c == '1');
    }
    return v;
  };
  auto block = bits(text.substr(bar + 1));
  if (block.empty())
    throw std::invalid_argument("BitFn text: empty periodic block");
  return make(bits(text.substr(0, bar)), std::move(block));
}

bool BitFn::operator()(std::uint64_t x) const {
  if (x < prefix_.size())
    return prefix_[x];
  return block_[(x - prefix_.size()) % block_.size()];
}

std::string BitFn::str() const {
  std::string s;
  for (bool b : prefix_)
    s += b ? '1' : '0';
  s += '|';
  for (bool b : block_)
    s += b ? '1' : '0';
  return s;
}

std::size_t agreement_bound(const BitFn& a, const BitFn& b) {
  return std::max(a.prefix().size(), b.prefix().size()) + std::lcm(a.period(), b.period());
}

bool operator<(const BitFn& a, const BitFn& b) {
  const std::size_t n = agreement_bound(a, b);
  for (std::size_t x = 0; x < n; ++x)
    if (a(x) != b(x))
      return b(x);
  return false;
}

BitFn operator^(const BitFn& a, const BitFn& b) {
  return BitFn::tabulate([&](std::uint64_t x) { return a(x) != b(x); },
                         std::max(a.prefix().size(), b.prefix().size()),
                         std::lcm(a.period(), b.period()));
}

BitFn delta(const BitFn& j) {
  // For x >= |prefix| + 2 both x and f(x) lie in the periodic part; f keeps
  // parity, so the period may double to stay even.
  return BitFn::tabulate([&](std::uint64_t x) { return j(x) != j(f_map(x)); },
                         j.prefix().size() + 2, std::lcm(j.period(), std::size_t{2}));
}

BitFn compose_shift(const BitFn& j, std::int64_t m) {
  if (m == 0)
    return j;
  const auto shift = static_cast<std::size_t>(m < 0 ? -m : m);
  return BitFn::tabulate([&](std::uint64_t x) { return j(f_pow(x, m)); },
                         j.prefix().size() + 2 * shift + 2,
                         std::lcm(j.period(), std::size_t{2}));
}

} // namespace ekc
