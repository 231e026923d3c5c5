#include "core/encode.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace adlin {

namespace {

[[noreturn]] void bad_grid(std::size_t r, std::size_t c, const std::string& what) {
  throw std::invalid_argument("kakuro: row " + std::to_string(r) + ", col " +
                              std::to_string(c) + ": " + what);
}

struct Run {
  Value clue = 0;
  std::vector<VariableId> vars;
  std::vector<std::int64_t> weights;
};

}  // namespace

ProblemInstance encode_kakuro(const KakuroGrid& g) {
  if (g.rows == 0 || g.cols == 0)
    throw std::invalid_argument("kakuro: empty board");
  if (g.cells.size() != g.rows * g.cols)
    throw std::invalid_argument("kakuro: cell count does not match dimensions");

  ProblemInstance p;
  std::vector<VariableId> cell_var(g.cells.size(), 0);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) {
      const KakuroCell& cell = g.at(r, c);
      if (cell.wall) continue;
      if (cell.weight < 1) bad_grid(r, c, "non-positive weight");
      cell_var[r * g.cols + c] = static_cast<VariableId>(p.vars.size());
      p.vars.push_back({"c" + std::to_string(r) + "_" + std::to_string(c),
                        FiniteDomain::interval(1, 9)});
    }

  // walk one direction of runs; dr/dc select rows or columns
  auto collect = [&](bool horizontal) {
    std::vector<Run> runs;
    std::vector<bool> covered(g.cells.size(), false);
    std::size_t dr = horizontal ? 0 : 1, dc = horizontal ? 1 : 0;
    for (std::size_t r = 0; r < g.rows; ++r)
      for (std::size_t c = 0; c < g.cols; ++c) {
        const KakuroCell& cell = g.at(r, c);
        if (!cell.wall) continue;
        const std::optional<Value>& clue = horizontal ? cell.right_clue : cell.down_clue;
        if (!clue) continue;
        Run run;
        run.clue = *clue;
        std::size_t rr = r + dr, cc = c + dc;
        while (rr < g.rows && cc < g.cols && !g.at(rr, cc).wall) {
          run.vars.push_back(cell_var[rr * g.cols + cc]);
          run.weights.push_back(g.at(rr, cc).weight);
          covered[rr * g.cols + cc] = true;
          rr += dr;
          cc += dc;
        }
        if (run.vars.empty()) bad_grid(r, c, "clue without cells");
        if (run.vars.size() > 9) bad_grid(r, c, "run longer than 9 cells");
        runs.push_back(std::move(run));
      }
    for (std::size_t r = 0; r < g.rows; ++r)
      for (std::size_t c = 0; c < g.cols; ++c)
        if (!g.at(r, c).wall && !covered[r * g.cols + c])
          bad_grid(r, c, horizontal ? "cell without a horizontal clue"
                                    : "cell without a vertical clue");
    return runs;
  };

  for (bool horizontal : {true, false})
    for (Run& run : collect(horizontal)) {
      if (run.vars.size() >= 2) p.constraints.push_back(AlldiffRecord{run.vars});
      p.constraints.push_back(
          normalize_linear(run.weights, run.vars, Rel::eq, run.clue));
    }

  p.meta["family"] = g.weighted ? "gen-kakuro" : "kakuro";
  p.meta["rows"] = std::to_string(g.rows);
  p.meta["cols"] = std::to_string(g.cols);
  return p;
}

ProblemInstance encode_crypto(const CryptoPuzzle& puzzle) {
  if (puzzle.words.empty())
    throw std::invalid_argument("crypto: empty word list");
  ProblemInstance p;
  AlldiffRecord all;
  for (char l = 'a'; l <= 'z'; ++l) {
    all.vars.push_back(static_cast<VariableId>(p.vars.size()));
    p.vars.push_back({std::string(1, l), FiniteDomain::interval(1, 26)});
  }
  p.constraints.push_back(std::move(all));
  for (const auto& [word, target] : puzzle.words) {
    if (word.empty()) throw std::invalid_argument("crypto: empty word");
    std::int64_t counts[26] = {};
    for (char l : word) {
      if (l < 'a' || l > 'z')
        throw std::invalid_argument("crypto: word '" + word +
                                    "' has a letter outside a..z");
      ++counts[l - 'a'];
    }
    std::vector<std::int64_t> coeffs;
    std::vector<VariableId> vars;
    for (int l = 0; l < 26; ++l)
      if (counts[l] > 0) {
        coeffs.push_back(counts[l]);
        vars.push_back(static_cast<VariableId>(l));
      }
    p.constraints.push_back(normalize_linear(coeffs, vars, Rel::eq, target));
  }
  p.meta["family"] = "crypto";
  p.meta["words"] = std::to_string(puzzle.words.size());
  return p;
}

ProblemInstance encode_magic(std::size_t n, const std::vector<MagicGiven>& givens) {
  if (n < 3) throw std::invalid_argument("magic: order must be at least 3");
  const Value n2 = static_cast<Value>(n) * static_cast<Value>(n);
  const std::int64_t rhs = static_cast<std::int64_t>(n) * (n2 + 1) / 2;

  std::map<std::pair<std::size_t, std::size_t>, Value> fixed;
  std::set<Value> used;
  for (const MagicGiven& gv : givens) {
    if (gv.row >= n || gv.col >= n)
      throw std::invalid_argument("magic: given outside the board");
    if (gv.value < 1 || gv.value > n2)
      throw std::invalid_argument("magic: given value out of range");
    if (!fixed.emplace(std::make_pair(gv.row, gv.col), gv.value).second)
      throw std::invalid_argument("magic: duplicate given position");
    if (!used.insert(gv.value).second)
      throw std::invalid_argument("magic: duplicate given value");
  }

  ProblemInstance p;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      auto it = fixed.find({r, c});
      FiniteDomain d = it == fixed.end() ? FiniteDomain::interval(1, n2)
                                         : FiniteDomain::interval(it->second, it->second);
      p.vars.push_back({"m" + std::to_string(r) + "_" + std::to_string(c),
                        std::move(d)});
    }

  AlldiffRecord all;
  for (VariableId v = 0; v < static_cast<VariableId>(n * n); ++v)
    all.vars.push_back(v);
  p.constraints.push_back(std::move(all));

  auto line = [&](auto&& cell_of) {
    std::vector<std::int64_t> coeffs(n, 1);
    std::vector<VariableId> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(cell_of(i));
    p.constraints.push_back(normalize_linear(coeffs, vars, Rel::eq, rhs));
  };
  for (std::size_t r = 0; r < n; ++r)
    line([&](std::size_t i) { return static_cast<VariableId>(r * n + i); });
  for (std::size_t c = 0; c < n; ++c)
    line([&](std::size_t i) { return static_cast<VariableId>(i * n + c); });
  line([&](std::size_t i) { return static_cast<VariableId>(i * n + i); });
  line([&](std::size_t i) { return static_cast<VariableId>(i * n + (n - 1 - i)); });

  p.meta["family"] = "magic";
  p.meta["order"] = std::to_string(n);
  p.meta["givens"] = std::to_string(givens.size());
  return p;
}

ProblemInstance encode_wqg(const WqgPuzzle& puzzle) {
  const std::size_t n = puzzle.n;
  if (n < 2) throw std::invalid_argument("wqg: order must be at least 2");
  if (puzzle.weights.size() != n * n)
    throw std::invalid_argument("wqg: weight count does not match the board");
  if (puzzle.givens.size() != n * n)
    throw std::invalid_argument("wqg: given count does not match the board");
  for (std::int64_t w : puzzle.weights)
    if (w < 1) throw std::invalid_argument("wqg: weights must be positive");

  ProblemInstance p;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::optional<Value>& gv = puzzle.givens[r * n + c];
      if (gv && (*gv < 1 || *gv > static_cast<Value>(n)))
        throw std::invalid_argument("wqg: given value out of range");
      FiniteDomain d = gv ? FiniteDomain::interval(*gv, *gv)
                          : FiniteDomain::interval(1, static_cast<Value>(n));
      p.vars.push_back({"x" + std::to_string(r) + "_" + std::to_string(c),
                        std::move(d)});
    }
  std::vector<VariableId> yvar(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t wsum = 0;
    for (std::size_t c = 0; c < n; ++c) wsum += puzzle.weights[r * n + c];
    yvar[r] = static_cast<VariableId>(p.vars.size());
    p.vars.push_back({"y" + std::to_string(r),
                      FiniteDomain::interval(wsum, wsum * static_cast<Value>(n))});
  }

  for (std::size_t r = 0; r < n; ++r) {
    AlldiffRecord row;
    for (std::size_t c = 0; c < n; ++c)
      row.vars.push_back(static_cast<VariableId>(r * n + c));
    p.constraints.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < n; ++c) {
    AlldiffRecord col;
    for (std::size_t r = 0; r < n; ++r)
      col.vars.push_back(static_cast<VariableId>(r * n + c));
    p.constraints.push_back(std::move(col));
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::int64_t> coeffs;
    std::vector<VariableId> vars;
    for (std::size_t c = 0; c < n; ++c) {
      coeffs.push_back(puzzle.weights[r * n + c]);
      vars.push_back(static_cast<VariableId>(r * n + c));
    }
    coeffs.push_back(-1);
    vars.push_back(yvar[r]);
    p.constraints.push_back(normalize_linear(coeffs, vars, Rel::eq, 0));
  }
  BoundOrRecord clause;
  for (std::size_t r = 0; r < n; ++r) clause.disjuncts.push_back({yvar[r], puzzle.k});
  p.constraints.push_back(std::move(clause));

  p.meta["family"] = "wqg";
  p.meta["n"] = std::to_string(n);
  p.meta["k"] = std::to_string(puzzle.k);
  return p;
}

}  // namespace adlin
