#pragma once

#include <functional>
#include <optional>

#include "core/propagate.hpp"

namespace adlin {

enum class VarOrder { lex, min_domain };

struct SolverConfig {
  FilterMode filter = FilterMode::improved;
  VarOrder var_order = VarOrder::lex;
  std::optional<std::uint64_t> node_limit;    // cap on decisions
  std::optional<std::uint64_t> time_limit_ms;
};

enum class SolveStatus { sat, unsat, limit };

struct SolveResult {
  SolveStatus status = SolveStatus::unsat;
  std::vector<Value> assignment;  // aligned with p.vars; filled when sat
  SearchStats stats;
};

/// Depth-first search with chronological backtracking: variables are picked
/// by var_order, values tried in ascending order (each trial is one
/// decision), domains restored from the trail on failure (each abandoned
/// trial is one conflict). Solutions are re-checked by direct evaluation
/// before being returned.
SolveResult solve(const ProblemInstance& p, const SolverConfig& cfg);

/// Same search, but every solution is handed to `sink` and the search keeps
/// going; status sat means at least one solution was found. With the lex
/// order, solutions arrive in ascending lexicographic order.
SolveResult solve_all(const ProblemInstance& p, const SolverConfig& cfg,
                      const std::function<void(const std::vector<Value>&)>& sink);

/// Domains after the root propagation fixpoint, or nullopt when the root is
/// already inconsistent.
std::optional<std::vector<FiniteDomain>> propagate_root(const ProblemInstance& p,
                                                        FilterMode mode);

}  // namespace adlin
