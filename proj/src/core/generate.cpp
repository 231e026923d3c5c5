#include "core/generate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace adlin {

namespace {

std::uint64_t draw(std::mt19937_64& g, std::uint64_t n) { return g() % n; }

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& g) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[draw(g, i)]);
}

// Maximal empty segments of one row/column as (start cell index, length).
struct Segment {
  std::size_t r, c, len;
};

std::vector<Segment> segments(const KakuroGrid& g, bool horizontal) {
  std::vector<Segment> out;
  std::size_t outer = horizontal ? g.rows : g.cols;
  std::size_t inner = horizontal ? g.cols : g.rows;
  for (std::size_t o = 0; o < outer; ++o) {
    std::size_t run = 0;
    for (std::size_t i = 0; i <= inner; ++i) {
      bool wall = i == inner ||
                  (horizontal ? g.at(o, i).wall : g.at(i, o).wall);
      if (!wall) {
        ++run;
        continue;
      }
      if (run > 0) {
        std::size_t start = i - run;
        out.push_back(horizontal ? Segment{o, start, run}
                                 : Segment{start, o, run});
      }
      run = 0;
    }
  }
  return out;
}

// Walls lone cells and splits overlong segments until every segment spans
// 2..9 cells. Each pass adds at least one wall, so this terminates.
void repair(KakuroGrid& g, std::mt19937_64& rng) {
  for (;;) {
    bool changed = false;
    for (bool horizontal : {true, false}) {
      for (const Segment& s : segments(g, horizontal)) {
        if (s.len == 1) {
          g.at(s.r, s.c).wall = true;
          changed = true;
        } else if (s.len > 9) {
          // keep at least two cells on each side of the new wall
          std::size_t off = 2 + draw(rng, s.len - 4);
          if (horizontal)
            g.at(s.r, s.c + off).wall = true;
          else
            g.at(s.r + off, s.c).wall = true;
          changed = true;
        }
      }
      if (changed) break;  // segment lists are stale now
    }
    if (!changed) return;
  }
}

// Keeps only the largest 4-connected region of empty cells.
void keep_largest_region(KakuroGrid& g) {
  const std::size_t total = g.rows * g.cols;
  std::vector<int> comp(total, -1);
  int ncomp = 0;
  std::size_t best_size = 0;
  int best = -1;
  for (std::size_t start = 0; start < total; ++start) {
    if (g.cells[start].wall || comp[start] != -1) continue;
    std::size_t size = 0;
    std::deque<std::size_t> queue{start};
    comp[start] = ncomp;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      ++size;
      std::size_t r = cur / g.cols, c = cur % g.cols;
      auto visit = [&](std::size_t rr, std::size_t cc) {
        std::size_t idx = rr * g.cols + cc;
        if (!g.cells[idx].wall && comp[idx] == -1) {
          comp[idx] = ncomp;
          queue.push_back(idx);
        }
      };
      if (r > 0) visit(r - 1, c);
      if (r + 1 < g.rows) visit(r + 1, c);
      if (c > 0) visit(r, c - 1);
      if (c + 1 < g.cols) visit(r, c + 1);
    }
    if (size > best_size) {
      best_size = size;
      best = ncomp;
    }
    ++ncomp;
  }
  for (std::size_t i = 0; i < total; ++i)
    if (!g.cells[i].wall && comp[i] != best) g.cells[i].wall = true;
}

// Assigns values 1..9 to empty cells so that both runs through every cell
// stay duplicate-free, by randomized backtracking. Returns row-major values
// for empty cells, or empty on failure within the node budget.
std::vector<Value> fill_values(const KakuroGrid& g, std::mt19937_64& rng) {
  const std::size_t total = g.rows * g.cols;
  std::vector<int> hrun(total, -1), vrun(total, -1);
  int nruns = 0;
  for (bool horizontal : {true, false}) {
    std::vector<int>& run = horizontal ? hrun : vrun;
    for (const Segment& s : segments(g, horizontal)) {
      for (std::size_t i = 0; i < s.len; ++i) {
        std::size_t idx = horizontal ? s.r * g.cols + (s.c + i)
                                     : (s.r + i) * g.cols + s.c;
        run[idx] = nruns;
      }
      ++nruns;
    }
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < total; ++i)
    if (!g.cells[i].wall) order.push_back(i);

  std::vector<unsigned> used(static_cast<std::size_t>(nruns), 0);
  std::vector<Value> value(total, 0);
  std::size_t budget = 200'000;

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    if (budget == 0) return false;
    --budget;
    std::size_t cell = order[i];
    unsigned taken = used[hrun[cell]] | used[vrun[cell]];
    Value cands[9];
    std::size_t ncands = 0;
    for (Value v = 1; v <= 9; ++v)
      if (!(taken & (1u << v))) cands[ncands++] = v;
    for (std::size_t j = ncands; j > 1; --j)
      std::swap(cands[j - 1], cands[draw(rng, j)]);
    for (std::size_t j = 0; j < ncands; ++j) {
      Value v = cands[j];
      used[hrun[cell]] |= 1u << v;
      used[vrun[cell]] |= 1u << v;
      value[cell] = v;
      if (self(self, i + 1)) return true;
      used[hrun[cell]] &= ~(1u << v);
      used[vrun[cell]] &= ~(1u << v);
    }
    return false;
  };
  if (!rec(rec, 0)) return {};

  std::vector<Value> out;
  for (std::size_t i : order) out.push_back(value[i]);
  return out;
}

}  // namespace

GeneratedKakuro gen_kakuro(std::size_t rows, std::size_t cols,
                           std::uint64_t seed, bool weighted) {
  if (rows < 3 || cols < 3 || rows > 256 || cols > 256)
    throw std::invalid_argument("gen_kakuro: board side must be in 3..256");
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < 200; ++attempt) {
    KakuroGrid g;
    g.rows = rows;
    g.cols = cols;
    g.weighted = weighted;
    g.cells.assign(rows * cols, KakuroCell{});
    for (std::size_t r = 1; r < rows; ++r)
      for (std::size_t c = 1; c < cols; ++c)
        g.at(r, c).wall = draw(rng, 100) < 18;

    repair(g, rng);
    keep_largest_region(g);
    // repair only adds walls, and dropping whole regions cannot break the
    // kept one, so all runs still span 2..9 here
    std::size_t empties = 0;
    for (const KakuroCell& cell : g.cells)
      if (!cell.wall) ++empties;
    if (empties * 10 < (rows - 1) * (cols - 1) * 3 || empties < 2) continue;

    std::vector<Value> values = fill_values(g, rng);
    if (values.empty()) continue;

    std::size_t vi = 0;
    std::vector<Value> cell_value(rows * cols, 0);
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      if (g.cells[i].wall) continue;
      if (weighted) g.cells[i].weight = 1 + static_cast<std::int64_t>(draw(rng, 9));
      cell_value[i] = values[vi++];
    }
    for (bool horizontal : {true, false})
      for (const Segment& s : segments(g, horizontal)) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < s.len; ++i) {
          std::size_t idx = horizontal ? s.r * g.cols + (s.c + i)
                                       : (s.r + i) * g.cols + s.c;
          sum += g.cells[idx].weight * cell_value[idx];
        }
        // the clue sits on the wall cell just before the segment
        if (horizontal)
          g.at(s.r, s.c - 1).right_clue = sum;
        else
          g.at(s.r - 1, s.c).down_clue = sum;
      }
    return {std::move(g), std::move(values)};
  }
  throw std::runtime_error("gen_kakuro: no valid board within retry budget");
}

GeneratedCrypto gen_crypto(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Value> perm(26);
  std::iota(perm.begin(), perm.end(), 1);
  shuffle_vec(perm, rng);

  GeneratedCrypto out;
  for (int w = 0; w < 20; ++w) {
    std::size_t len = 4 + draw(rng, 6);
    std::string word;
    std::int64_t target = 0;
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t letter = draw(rng, 26);
      word.push_back(static_cast<char>('a' + letter));
      target += perm[letter];
    }
    out.puzzle.words.emplace_back(std::move(word), target);
  }
  out.witness = std::move(perm);
  return out;
}

GeneratedWqg gen_wqg(std::size_t n, double fill_ratio, std::uint64_t seed) {
  if (n < 2 || n > 100) throw std::invalid_argument("gen_wqg: order must be in 2..100");
  if (fill_ratio < 0.0 || fill_ratio > 1.0)
    throw std::invalid_argument("gen_wqg: fill ratio must be in [0, 1]");
  std::mt19937_64 rng(seed);

  std::vector<std::size_t> rowp(n), colp(n);
  std::vector<Value> symp(n);
  std::iota(rowp.begin(), rowp.end(), 0);
  std::iota(colp.begin(), colp.end(), 0);
  std::iota(symp.begin(), symp.end(), 1);
  shuffle_vec(rowp, rng);
  shuffle_vec(colp, rng);
  shuffle_vec(symp, rng);

  GeneratedWqg out;
  WqgPuzzle& p = out.puzzle;
  p.n = n;
  std::vector<Value> square(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      square[r * n + c] = symp[(rowp[r] + colp[c]) % n];

  p.weights.resize(n * n);
  for (std::int64_t& w : p.weights) w = 1 + static_cast<std::int64_t>(draw(rng, 100));

  p.k = std::numeric_limits<Value>::max();
  std::vector<Value> ysums(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      ysums[r] += p.weights[r * n + c] * square[r * n + c];
    p.k = std::min(p.k, ysums[r]);
  }

  std::vector<std::size_t> cells(n * n);
  std::iota(cells.begin(), cells.end(), 0);
  shuffle_vec(cells, rng);
  std::size_t filled = static_cast<std::size_t>(
      std::llround(fill_ratio * static_cast<double>(n * n)));
  p.givens.assign(n * n, std::nullopt);
  for (std::size_t i = 0; i < filled && i < cells.size(); ++i)
    p.givens[cells[i]] = square[cells[i]];

  out.witness = std::move(square);
  out.witness.insert(out.witness.end(), ysums.begin(), ysums.end());
  return out;
}

GeneratedMagic gen_magic(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("gen_magic: order must be odd and at least 3");
  if (count > n * n)
    throw std::invalid_argument("gen_magic: more givens than cells");
  std::mt19937_64 rng(seed);

  std::vector<Value> square(n * n, 0);
  std::size_t r = 0, c = n / 2;
  for (Value v = 1; v <= static_cast<Value>(n * n); ++v) {
    square[r * n + c] = v;
    std::size_t nr = (r + n - 1) % n, nc = (c + 1) % n;
    if (square[nr * n + nc] != 0) {
      r = (r + 1) % n;
    } else {
      r = nr;
      c = nc;
    }
  }

  std::vector<std::size_t> cells(n * n);
  std::iota(cells.begin(), cells.end(), 0);
  shuffle_vec(cells, rng);

  GeneratedMagic out;
  out.order = n;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t cell = cells[i];
    out.givens.push_back({cell / n, cell % n, square[cell]});
  }
  out.witness = std::move(square);
  return out;
}

}  // namespace adlin
