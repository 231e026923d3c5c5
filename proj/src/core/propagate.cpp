#include "core/propagate.hpp"

#include <algorithm>

namespace adlin {

LinearPropagator::LinearPropagator(NormalizedLinear c, FilterMode mode,
                                   SearchStats* stats)
    : c_(std::move(c)), mode_(mode), stats_(stats) {
  for (const Term& t : c_.expr.terms) watches_.push_back(t.var);
}

PropagateResult LinearPropagator::propagate(DomainStore& s) {
  BoundsResult r = mode_ == FilterMode::improved
                       ? calculate_bounds_improved_gen(c_, s)
                       : calculate_bounds_standard(c_, s);
  if (stats_) {
    if (mode_ == FilterMode::improved) {
      BoundsResult base = calculate_bounds_standard(c_, s);
      if (r.consistent && base.consistent) {
        for (std::size_t i = 0; i < r.bounds.size(); ++i) {
          ++stats_->bounds_computed;
          std::int64_t gain = r.bounds[i].is_upper
                                  ? base.bounds[i].bound - r.bounds[i].bound
                                  : r.bounds[i].bound - base.bounds[i].bound;
          if (gain > 0) {
            ++stats_->bounds_improved;
            stats_->improvement_total += gain;
          }
        }
      }
    } else if (r.consistent) {
      stats_->bounds_computed += r.bounds.size();
    }
  }
  if (!r.consistent) return PropagateResult::conflict;

  bool changed = false;
  for (const BoundRequest& b : r.bounds) {
    ChangeReport rep = b.is_upper ? s.tighten_upper(b.var, b.bound)
                                  : s.tighten_lower(b.var, b.bound);
    if (rep == ChangeReport::emptied) return PropagateResult::conflict;
    changed |= rep == ChangeReport::tightened;
  }
  return changed ? PropagateResult::changed : PropagateResult::stable;
}

AlldiffPropagator::AlldiffPropagator(AlldiffConstraint c)
    : filter_(std::move(c)) {}

PropagateResult AlldiffPropagator::propagate(DomainStore& s) {
  auto removals = filter_.prune(s);
  if (!removals) return PropagateResult::conflict;
  bool changed = false;
  for (const AlldiffFilter::Removal& r : *removals) {
    ChangeReport rep = s.remove_value(r.var, r.value);
    if (rep == ChangeReport::emptied) return PropagateResult::conflict;
    changed |= rep == ChangeReport::tightened;
  }
  return changed ? PropagateResult::changed : PropagateResult::stable;
}

BoundOrPropagator::BoundOrPropagator(BoundOrRecord r) : r_(std::move(r)) {
  for (const auto& d : r_.disjuncts) watches_.push_back(d.var);
  std::sort(watches_.begin(), watches_.end());
  watches_.erase(std::unique(watches_.begin(), watches_.end()), watches_.end());
}

PropagateResult BoundOrPropagator::propagate(DomainStore& s) {
  std::size_t alive = 0;
  const BoundOrRecord::Disjunct* survivor = nullptr;
  for (const auto& d : r_.disjuncts) {
    if (s.domain(d.var).min() <= d.bound) {
      ++alive;
      survivor = &d;
    }
  }
  if (alive == 0) return PropagateResult::conflict;
  if (alive > 1) return PropagateResult::stable;
  ChangeReport rep = s.tighten_upper(survivor->var, survivor->bound);
  if (rep == ChangeReport::emptied) return PropagateResult::conflict;
  return rep == ChangeReport::tightened ? PropagateResult::changed
                                        : PropagateResult::stable;
}

std::vector<std::unique_ptr<Propagator>> build_propagators(
    const ProblemInstance& p, FilterMode mode, SearchStats* stats) {
  std::vector<AlldiffConstraint> ads;
  for (const Constraint& c : p.constraints)
    if (const auto* ad = std::get_if<AlldiffRecord>(&c))
      ads.push_back({ad->vars});

  std::vector<std::unique_ptr<Propagator>> out;
  for (const Constraint& c : p.constraints) {
    if (const auto* ad = std::get_if<AlldiffRecord>(&c)) {
      out.push_back(std::make_unique<AlldiffPropagator>(AlldiffConstraint{ad->vars}));
    } else if (const auto* lin = std::get_if<LinearRecord>(&c)) {
      std::vector<Term> raw;
      for (std::size_t i = 0; i < lin->vars.size(); ++i)
        raw.push_back({lin->coeffs[i], lin->vars[i]});
      NormalizedLinear face;
      face.expr = LinearExpression::make(std::move(raw));
      face.partitions =
          std::make_shared<PartitionSet>(find_partitions(face.expr, ads));
      auto add_face = [&](bool is_le, std::int64_t rhs) {
        NormalizedLinear f = face;
        f.is_le = is_le;
        f.rhs = rhs;
        out.push_back(std::make_unique<LinearPropagator>(std::move(f), mode, stats));
      };
      switch (lin->rel) {
        case Rel::le: add_face(true, lin->rhs); break;
        case Rel::lt: add_face(true, lin->rhs - 1); break;
        case Rel::ge: add_face(false, lin->rhs); break;
        case Rel::gt: add_face(false, lin->rhs + 1); break;
        case Rel::eq:
          add_face(true, lin->rhs);
          add_face(false, lin->rhs);
          break;
      }
    } else if (const auto* bo = std::get_if<BoundOrRecord>(&c)) {
      out.push_back(std::make_unique<BoundOrPropagator>(*bo));
    }
  }
  return out;
}

}  // namespace adlin
