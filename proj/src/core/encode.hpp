#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/problem.hpp"

namespace adlin {

/// Rectangular kakuro board. Wall cells may carry a clue for the run of
/// empty cells to their right and/or below; empty cells carry the weight
/// used as their coefficient in the run sums (1 for the classic puzzle).
struct KakuroCell {
  bool wall = true;
  std::optional<Value> right_clue;
  std::optional<Value> down_clue;
  std::int64_t weight = 1;
};

struct KakuroGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool weighted = false;
  std::vector<KakuroCell> cells;  // row-major

  KakuroCell& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
  const KakuroCell& at(std::size_t r, std::size_t c) const {
    return cells[r * cols + c];
  }
};

/// One variable with domain 1..9 per empty cell (named c<row>_<col>,
/// row-major). Every run gets an equality over its weighted cells plus,
/// for runs of two or more cells, pairwise distinctness. Malformed boards
/// (uncovered cells, clues without cells, runs longer than 9) are rejected
/// with the offending position in the message.
ProblemInstance encode_kakuro(const KakuroGrid& g);

/// Word-sum puzzle over a hidden letter permutation.
struct CryptoPuzzle {
  std::vector<std::pair<std::string, std::int64_t>> words;
};

/// Variables a..z with domain 1..26 and one global alldifferent; each word
/// contributes an equality whose coefficients are the letter multiplicities.
ProblemInstance encode_crypto(const CryptoPuzzle& p);

struct MagicGiven {
  std::size_t row = 0;
  std::size_t col = 0;
  Value value = 0;
};

/// n*n variables (named m<row>_<col>) with domain 1..n^2, one global
/// alldifferent, and 2n+2 equalities (rows, columns, both diagonals) with
/// right-hand side n*(n^2+1)/2. Givens become singleton domains.
ProblemInstance encode_magic(std::size_t n, const std::vector<MagicGiven>& givens);

/// Weighted quasigroup completion: fill an n*n latin square so that the
/// smallest weighted row sum does not exceed k.
struct WqgPuzzle {
  std::size_t n = 0;
  std::vector<std::int64_t> weights;        // row-major, positive
  std::vector<std::optional<Value>> givens;  // row-major, 1..n where present
  Value k = 0;
};

/// Cell variables x<row>_<col> (domain 1..n, row-major) come first, then one
/// y<row> per row linked by sum(w*x) - y = 0; rows and columns are pairwise
/// distinct and at least one y<row> must stay at or below k.
ProblemInstance encode_wqg(const WqgPuzzle& p);

}  // namespace adlin
