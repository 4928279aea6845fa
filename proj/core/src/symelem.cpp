#include "ekchains/symelem.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ekc {

BlockPerm BlockPerm::from_map(std::map<std::uint64_t, std::uint64_t> moves) {
  std::set<std::uint64_t> images;
  for (auto it = moves.begin(); it != moves.end();) {
    if (it->first == it->second) {
      it = moves.erase(it);
      continue;
    }
    images.insert(it->second);
    ++it;
  }
  for (auto y : images)
    if (!moves.contains(y))
      throw std::invalid_argument("BlockPerm: map is not a bijection on its support");
  if (images.size() != moves.size())
    throw std::invalid_argument("BlockPerm: map is not injective");
  BlockPerm p;
  p.moves_ = std::move(moves);
  return p;
}

BlockPerm BlockPerm::from_cycles(const std::vector<std::vector<std::uint64_t>>& cycles) {
  BlockPerm out;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (std::size_t i = 0; i < it->size(); ++i)
      if (!m.emplace((*it)[i], (*it)[(i + 1) % it->size()]).second)
        throw std::invalid_argument("BlockPerm: repeated index in cycle");
    out = compose(from_map(std::move(m)), out);
  }
  return out;
}

BlockPerm BlockPerm::swap(std::uint64_t a, std::uint64_t b) {
  if (a == b)
    return {};
  return from_map({{a, b}, {b, a}});
}

std::uint64_t BlockPerm::operator()(std::uint64_t x) const {
  auto it = moves_.find(x);
  return it == moves_.end() ? x : it->second;
}

std::uint64_t BlockPerm::extent() const noexcept {
  return moves_.empty() ? 0 : moves_.rbegin()->first + 1;
}

BlockPerm BlockPerm::inverse() const {
  BlockPerm p;
  for (auto [x, y] : moves_)
    p.moves_.emplace(y, x);
  return p;
}

BlockPerm BlockPerm::conjugated_by_shift(std::int64_t m) const {
  std::map<std::uint64_t, std::uint64_t> out;
  for (auto [x, y] : moves_)
    out.emplace(f_pow(x, m), f_pow(y, m));
  return from_map(std::move(out));
}

std::string BlockPerm::str() const {
  if (moves_.empty())
    return "()";
  std::ostringstream os;
  std::set<std::uint64_t> seen;
  for (auto [start, unused] : moves_) {
    if (seen.contains(start))
      continue;
    os << '(';
    std::uint64_t x = start;
    bool first = true;
    do {
      os << (first ? "" : " ") << x;
      first = false;
      seen.insert(x);
      x = (*this)(x);
    } while (x != start);
    os << ')';
  }
  return os.str();
}

BlockPerm compose(const BlockPerm& a, const BlockPerm& b) {
  std::map<std::uint64_t, std::uint64_t> out;
  auto visit = [&](std::uint64_t x) {
    auto y = a(b(x));
    if (y != x)
      out.emplace(x, y);
  };
  for (auto [x, unused] : b.moves())
    visit(x);
  for (auto [x, unused] : a.moves())
    visit(x);
  return BlockPerm::from_map(std::move(out));
}

BitFn relabel(const BitFn& j, const BlockPerm& sigma) {
  if (sigma.is_identity())
    return j;
  BlockPerm inv = sigma.inverse();
  auto from = std::max<std::size_t>(j.prefix().size(), sigma.extent());
  return BitFn::tabulate([&](std::uint64_t x) { return j(inv(x)); }, from, j.period());
}

std::string SymElem::str() const {
  return "B(" + bits.str() + ") P(" + blocks.str() + ") F^" + std::to_string(shift);
}

SymElem sym_mul(const SymElem& a, const SymElem& b) {
  // P(σ)F^m B(c) = B(c ∘ f^-m ∘ σ^-1) P(σ) F^m and F^m P(τ) = P(f^m τ f^-m) F^m.
  BitFn moved = relabel(compose_shift(b.bits, -a.shift), a.blocks);
  BlockPerm tau = b.blocks.conjugated_by_shift(a.shift);
  return SymElem{a.bits ^ moved, compose(a.blocks, tau), a.shift + b.shift};
}

SymElem sym_inv(const SymElem& a) {
  // (B P F^m)^-1 = F^-m P^-1 B
  SymElem out = sym_mul(SymElem::f_power(-a.shift), SymElem::from_blocks(a.blocks.inverse()));
  return sym_mul(out, SymElem::from_bits(a.bits));
}

SymElem sym_commutator(const SymElem& a, const SymElem& b) {
  return sym_mul(sym_inv(a), sym_mul(sym_inv(b), sym_mul(a, b)));
}

std::uint64_t sym_apply(const SymElem& a, std::uint64_t x) {
  std::uint64_t block = f_pow(x / 2, a.shift);
  std::uint64_t side = x % 2;
  block = a.blocks(block);
  if (a.bits(block))
    side ^= 1;
  return 2 * block + side;
}

std::optional<Permutation> finite_permutation(const SymElem& a) {
  if (a.shift != 0 || !a.bits.has_finite_support())
    return std::nullopt;
  std::uint64_t blocks = std::max<std::uint64_t>(a.bits.prefix().size(), a.blocks.extent());
  std::size_t degree = static_cast<std::size_t>(std::max<std::uint64_t>(2 * blocks, 1));
  std::vector<Point> images(degree);
  for (std::size_t x = 0; x < degree; ++x)
    images[x] = static_cast<Point>(sym_apply(a, x));
  return Permutation::from_images(std::move(images));
}

} // namespace ekc
