#pragma once

#include <cstdint>

#include "core/encode.hpp"

namespace adlin {

/// Generators build a solved puzzle first and derive the published clues
/// from it, so every output is satisfiable by construction. The witness is
/// that solution, listed in the matching encoder's variable order, and all
/// randomness comes from the seed (raw mt19937_64 draws, so outputs are
/// byte-stable across platforms).

struct GeneratedKakuro {
  KakuroGrid grid;
  std::vector<Value> witness;
};

/// Random board with walled border, repaired until every run spans 2..9
/// cells and the empty cells form one connected region covering at least
/// 30% of the interior. Weighted boards draw cell weights from 1..9.
GeneratedKakuro gen_kakuro(std::size_t rows, std::size_t cols,
                           std::uint64_t seed, bool weighted);

struct GeneratedCrypto {
  CryptoPuzzle puzzle;
  std::vector<Value> witness;
};

/// Twenty words of length 4..9 with targets evaluated under a hidden
/// permutation of 1..26.
GeneratedCrypto gen_crypto(std::uint64_t seed);

struct GeneratedWqg {
  WqgPuzzle puzzle;
  std::vector<Value> witness;
};

/// Random latin square (cyclic square scrambled by row/column/symbol
/// permutations), weights from 1..100, k = the smallest weighted row sum,
/// then all but round(fill_ratio * n^2) cells are blanked.
GeneratedWqg gen_wqg(std::size_t n, double fill_ratio, std::uint64_t seed);

struct GeneratedMagic {
  std::size_t order = 0;
  std::vector<MagicGiven> givens;
  std::vector<Value> witness;
};

/// Magic square of odd order (Siamese construction) with `count` randomly
/// chosen cells revealed as givens.
GeneratedMagic gen_magic(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace adlin
