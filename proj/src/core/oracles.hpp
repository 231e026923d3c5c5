#pragma once

#include <stdexcept>
#include <vector>

#include "core/alldiff.hpp"
#include "core/problem.hpp"

namespace adlin {

/// Hard caps on the exhaustive reference computations. Exceeding a cap is a
/// test-configuration error, not an "unknown" answer.
struct OracleBudget {
  std::size_t max_vars = 8;
  std::size_t max_domain_size = 12;
  std::uint64_t max_tuples = 10'000'000;
};

struct OracleBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact minimum of sum(coeffs[i] * d[i]) over pairwise-distinct d[i] >= mins[i],
/// searching values in [min mins, max mins + n - 1] (larger values can always
/// be swapped down to an unused value in that window without increasing any
/// term, so the window is sufficient). Pre: coeffs positive, n >= 1.
/// Enumeration carries a sound partial-sum floor: branches whose fixed part
/// plus the sum of remaining minima cannot beat the incumbent are cut, which
/// never changes the returned minimum. Visited nodes are metered against
/// budget.max_tuples.
std::int64_t brute_min_distinct(const std::vector<std::int64_t>& coeffs,
                                const std::vector<Value>& mins,
                                const OracleBudget& budget = {});

/// All solutions of the instance by direct enumeration of the domain product,
/// in lexicographic variable-value order.
std::vector<std::vector<Value>> brute_solutions(const ProblemInstance& p,
                                                const OracleBudget& budget = {});

/// For each variable of the constraint, the values that appear in at least
/// one pairwise-distinct assignment drawn from the current domains. Empty
/// support sets mean the constraint is inconsistent.
std::vector<std::vector<Value>> brute_regin(const AlldiffConstraint& c,
                                            const DomainStore& s,
                                            const OracleBudget& budget = {});

}  // namespace adlin
