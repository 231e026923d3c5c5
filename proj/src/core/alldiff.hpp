#pragma once

#include <optional>
#include <vector>

#include "core/domain.hpp"

namespace adlin {

struct AlldiffConstraint {
  std::vector<VariableId> vars;
};

/// Hyper-arc consistency for one alldifferent via maximum bipartite matching
/// over the value graph. The matching found by the last call is cached and
/// repaired incrementally, so the filter is cheap along a search branch and
/// stays correct after rollbacks (stale matches are simply dropped).
class AlldiffFilter {
 public:
  explicit AlldiffFilter(AlldiffConstraint c);

  const AlldiffConstraint& constraint() const { return c_; }

  /// True iff a matching saturating all variables exists.
  bool check_consistency(const DomainStore& s);

  struct Removal {
    VariableId var;
    Value value;
  };

  /// Values supported by no saturating matching, or nullopt when the
  /// constraint is inconsistent. Applying the removals never empties a
  /// domain: each variable keeps at least its matched value.
  std::optional<std::vector<Removal>> prune(const DomainStore& s);

 private:
  struct Graph;
  bool repair_matching(Graph& g);

  AlldiffConstraint c_;
  std::vector<Value> matched_;  // per variable slot; kUnmatched when free
};

/// One-shot forms building a fresh filter (test convenience).
bool check_consistency(const AlldiffConstraint& c, const DomainStore& s);
std::optional<std::vector<AlldiffFilter::Removal>> regin_prune(
    const AlldiffConstraint& c, const DomainStore& s);

}  // namespace adlin
