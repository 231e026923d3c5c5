#include "core/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace adlin {

namespace {

void spend(std::uint64_t& visited, const OracleBudget& b) {
  if (++visited > b.max_tuples) throw OracleBudgetError("oracle tuple budget exceeded");
}

}  // namespace

std::int64_t brute_min_distinct(const std::vector<std::int64_t>& coeffs,
                                const std::vector<Value>& mins,
                                const OracleBudget& budget) {
  const std::size_t n = coeffs.size();
  if (n == 0 || mins.size() != n) throw OracleBudgetError("brute_min_distinct: bad input");
  if (n > budget.max_vars) throw OracleBudgetError("brute_min_distinct: too many variables");
  for (std::int64_t a : coeffs)
    if (a <= 0) throw OracleBudgetError("brute_min_distinct: coefficients must be positive");

  Value lo = *std::min_element(mins.begin(), mins.end());
  Value hi = *std::max_element(mins.begin(), mins.end()) + static_cast<Value>(n) - 1;

  // Assign variables in ascending-minimum order; remaining terms valued at
  // their own minima give a floor on any completion.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (mins[a] != mins[b]) return mins[a] < mins[b];
    return a < b;
  });
  std::vector<std::int64_t> rest_floor(n + 1, 0);
  for (std::size_t i = n; i-- > 0;)
    rest_floor[i] = rest_floor[i + 1] + coeffs[order[i]] * mins[order[i]];

  std::vector<char> used(static_cast<std::size_t>(hi - lo + 1), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint64_t visited = 0;

  auto rec = [&](auto&& self, std::size_t i, std::int64_t partial) -> void {
    if (i == n) {
      best = std::min(best, partial);
      return;
    }
    if (best != std::numeric_limits<std::int64_t>::max() &&
        partial + rest_floor[i] >= best)
      return;
    std::size_t v = order[i];
    for (Value d = mins[v]; d <= hi; ++d) {
      if (used[static_cast<std::size_t>(d - lo)]) continue;
      spend(visited, budget);
      used[static_cast<std::size_t>(d - lo)] = 1;
      self(self, i + 1, partial + coeffs[v] * d);
      used[static_cast<std::size_t>(d - lo)] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

std::vector<std::vector<Value>> brute_solutions(const ProblemInstance& p,
                                                const OracleBudget& budget) {
  const std::size_t n = p.vars.size();
  if (n > budget.max_vars) throw OracleBudgetError("brute_solutions: too many variables");
  std::uint64_t tuples = 1;
  std::vector<std::vector<Value>> domains(n);
  for (std::size_t i = 0; i < n; ++i) {
    domains[i] = p.vars[i].domain.values();
    if (domains[i].size() > budget.max_domain_size)
      throw OracleBudgetError("brute_solutions: domain too large");
    tuples *= domains[i].empty() ? 1 : domains[i].size();
    if (tuples > budget.max_tuples)
      throw OracleBudgetError("brute_solutions: tuple budget exceeded");
    if (domains[i].empty()) return {};
  }

  std::vector<std::vector<Value>> out;
  std::vector<Value> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (satisfies(p, cur)) out.push_back(cur);
      return;
    }
    for (Value v : domains[i]) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<Value>> brute_regin(const AlldiffConstraint& c,
                                            const DomainStore& s,
                                            const OracleBudget& budget) {
  const std::size_t n = c.vars.size();
  if (n > budget.max_vars) throw OracleBudgetError("brute_regin: too many variables");
  std::uint64_t tuples = 1;
  std::vector<std::vector<Value>> domains(n);
  for (std::size_t i = 0; i < n; ++i) {
    domains[i] = s.domain(c.vars[i]).values();
    if (domains[i].size() > budget.max_domain_size)
      throw OracleBudgetError("brute_regin: domain too large");
    tuples *= domains[i].empty() ? 1 : domains[i].size();
    if (tuples > budget.max_tuples)
      throw OracleBudgetError("brute_regin: tuple budget exceeded");
  }

  std::vector<std::set<Value>> support(n);
  std::vector<Value> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      for (std::size_t k = 0; k < n; ++k) support[k].insert(cur[k]);
      return;
    }
    for (Value v : domains[i]) {
      bool clash = false;
      for (std::size_t k = 0; k < i; ++k)
        if (cur[k] == v) {
          clash = true;
          break;
        }
      if (clash) continue;
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);

  std::vector<std::vector<Value>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(support[i].begin(), support[i].end());
  return out;
}

}  // namespace adlin
