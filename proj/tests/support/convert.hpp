#pragma once

#include <random>

#include <ekchains/finite_group.hpp>

#include "naive_oracle.hpp"

namespace testsupport {

inline oracle::Perm to_oracle(const ekc::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline oracle::Set to_oracle(const ekc::Subgroup& s) {
  oracle::Set out;
  for (const auto& p : s.permutations())
    out.insert(to_oracle(p));
  return out;
}

inline ekc::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<ekc::Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<ekc::Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return ekc::Permutation::from_images(std::move(img));
}

} // namespace testsupport
