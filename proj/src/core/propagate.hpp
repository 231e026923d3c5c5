#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "core/alldiff.hpp"
#include "core/linear.hpp"
#include "core/problem.hpp"

namespace adlin {

enum class FilterMode { standard, improved };

/// Counters reported by a solve run. The bounds_* fields compare the two
/// filter strengths per emitted bound while the improved filter is active;
/// improvement_total accumulates how much tighter the improved bounds were.
struct SearchStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t bounds_computed = 0;
  std::uint64_t bounds_improved = 0;
  std::int64_t improvement_total = 0;
};

enum class PropagateResult { stable, changed, conflict };

/// One constraint's filtering step. The engine re-runs a propagator whenever
/// a watched variable's domain changes, until every propagator is stable.
class Propagator {
 public:
  virtual ~Propagator() = default;

  virtual const std::vector<VariableId>& watches() const = 0;

  /// Cheap propagators (tier 0) drain before expensive ones (tier 1).
  virtual int tier() const = 0;

  virtual PropagateResult propagate(DomainStore& s) = 0;
};

/// One inequality face. Equalities register two of these (a <= face and a
/// >= face) sharing one partition set. In improved mode the standard bounds
/// are computed alongside to feed the improvement statistics.
class LinearPropagator final : public Propagator {
 public:
  LinearPropagator(NormalizedLinear c, FilterMode mode, SearchStats* stats);

  const std::vector<VariableId>& watches() const override { return watches_; }
  int tier() const override { return 0; }
  PropagateResult propagate(DomainStore& s) override;

 private:
  NormalizedLinear c_;
  FilterMode mode_;
  SearchStats* stats_;
  std::vector<VariableId> watches_;
};

/// Hyper-arc consistency for one alldifferent; keeps the incremental
/// matching cache across calls and rollbacks.
class AlldiffPropagator final : public Propagator {
 public:
  explicit AlldiffPropagator(AlldiffConstraint c);

  const std::vector<VariableId>& watches() const override {
    return filter_.constraint().vars;
  }
  int tier() const override { return 1; }
  PropagateResult propagate(DomainStore& s) override;

 private:
  AlldiffFilter filter_;
};

/// At least one `var <= bound` must hold: dead disjuncts (min > bound) drop
/// out, a single survivor is enforced, none surviving is a conflict.
class BoundOrPropagator final : public Propagator {
 public:
  explicit BoundOrPropagator(BoundOrRecord r);

  const std::vector<VariableId>& watches() const override { return watches_; }
  int tier() const override { return 0; }
  PropagateResult propagate(DomainStore& s) override;

 private:
  BoundOrRecord r_;
  std::vector<VariableId> watches_;
};

/// Instantiates the propagators for every constraint in declaration order.
/// Linear partitions are derived from all alldifferent records of the
/// instance; strict inequalities are normalized to their inclusive faces.
std::vector<std::unique_ptr<Propagator>> build_propagators(
    const ProblemInstance& p, FilterMode mode, SearchStats* stats);

}  // namespace adlin
