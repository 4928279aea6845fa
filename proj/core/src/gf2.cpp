#include "ekchains/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace ekc {

bool BitVector::any() const noexcept {
  for (auto w : words_)
    if (w)
      return true;
  return false;
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= size_)
    return size_;
  std::size_t wi = from / 64;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
  for (;;) {
    if (w) {
      std::size_t i = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      return i < size_ ? i : size_;
    }
    if (++wi == words_.size())
      return size_;
    w = words_[wi];
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_)
    throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] ^= other.words_[i];
  return *this;
}

void Gf2System::add_equation(std::span<const std::size_t> vars, bool rhs) {
  BitVector row(unknowns_);
  for (std::size_t v : vars) {
    if (v >= unknowns_)
      throw std::out_of_range("Gf2System: variable index out of range");
    row.flip(v);
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

std::optional<Gf2Solution> Gf2System::solve() const {
  BitVector b(rows_.size());
  for (std::size_t i = 0; i < rhs_.size(); ++i)
    b.set(i, rhs_[i]);
  return solve_many(std::span<const BitVector>(&b, 1)).front();
}

std::vector<std::optional<Gf2Solution>> Gf2System::solve_many(
    std::span<const BitVector> rhs) const {
  const std::size_t n = unknowns_;
  const std::size_t m = rows_.size();
  const std::size_t r = rhs.size();
  for (const auto& b : rhs)
    if (b.size() != m)
      throw std::invalid_argument("Gf2System: right-hand side length mismatch");

  // Augmented rows [A | b_0 ... b_{r-1}].
  std::vector<BitVector> aug(m, BitVector(n + r));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = rows_[i].find_next(0); j < n; j = rows_[i].find_next(j + 1))
      aug[i].set(j);
    for (std::size_t c = 0; c < r; ++c)
      if (rhs[c].get(i))
        aug[i].set(n + c);
  }

  // Reduced row echelon form over the first n columns.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && !aug[p].get(col))
      ++p;
    if (p == m)
      continue;
    std::swap(aug[p], aug[row]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != row && aug[i].get(col))
        aug[i] ^= aug[row];
    pivot_col.push_back(col);
    ++row;
  }
  const std::size_t rank = row;

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col)
    is_pivot[c] = true;

  std::vector<BitVector> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t i = 0; i < rank; ++i)
      if (aug[i].get(f))
        v.set(pivot_col[i]);
    kernel.push_back(std::move(v));
  }

  std::vector<std::optional<Gf2Solution>> out;
  out.reserve(r);
  for (std::size_t c = 0; c < r; ++c) {
    bool consistent = true;
    for (std::size_t i = rank; i < m && consistent; ++i)
      if (aug[i].get(n + c))
        consistent = false;
    if (!consistent) {
      out.emplace_back(std::nullopt);
      continue;
    }
    BitVector x(n);
    for (std::size_t i = 0; i < rank; ++i)
      if (aug[i].get(n + c))
        x.set(pivot_col[i]);
    out.emplace_back(Gf2Solution{std::move(x), kernel});
  }
  return out;
}

std::size_t gf2_rank(std::vector<BitVector> vectors) {
  std::size_t rank = 0;
  if (vectors.empty())
    return 0;
  const std::size_t n = vectors.front().size();
  for (std::size_t col = 0; col < n && rank < vectors.size(); ++col) {
    std::size_t p = rank;
    while (p < vectors.size() && !vectors[p].get(col))
      ++p;
    if (p == vectors.size())
      continue;
    std::swap(vectors[p], vectors[rank]);
    for (std::size_t i = rank + 1; i < vectors.size(); ++i)
      if (vectors[i].get(col))
        vectors[i] ^= vectors[rank];
    ++rank;
  }
  return rank;
}

} // namespace ekc
