#pragma once

#include <cstdint>
#include <vector>

namespace legendrian::gf2 {

// Rank over Z/2 of vectors given as sorted, duplicate-free index lists.
inline int rank(const std::vector<std::vector<int>>& vectors, int dim) {
  const std::size_t words = (static_cast<std::size_t>(dim) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& v : vectors) {
    std::vector<std::uint64_t> r(words, 0);
    for (int k : v) r[k / 64] ^= std::uint64_t{1} << (k % 64);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int bit = 0; bit < dim && rank < static_cast<int>(rows.size()); ++bit) {
    const std::size_t w = bit / 64;
    const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && (rows[i][w] & mask))
        for (std::size_t x = 0; x < words; ++x) rows[i][x] ^= rows[rank][x];
    ++rank;
  }
  return rank;
}

}  // namespace legendrian::gf2
