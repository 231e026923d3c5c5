#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "core/alldiff.hpp"
#include "core/domain.hpp"

namespace adlin {

struct Term {
  std::int64_t coeff = 0;
  VariableId var = 0;
};

/// Term list kept sorted by variable id, one term per variable, no zero
/// coefficients. make() normalizes an arbitrary raw list into that shape.
struct LinearExpression {
  std::vector<Term> terms;

  static LinearExpression make(std::vector<Term> raw);
};

/// One block of a sign/alldifferent split of an expression: all terms share a
/// coefficient sign, and either the block is covered by one alldifferent
/// (at least two terms) or it is a singleton.
struct PartitionGroup {
  bool positive = true;
  std::vector<std::uint32_t> terms;  // indices into LinearExpression::terms
  std::optional<std::uint32_t> alldiff;  // declaration index of the cover
};

struct PartitionSet {
  std::vector<PartitionGroup> groups;
};

/// Splits V(e) by coefficient sign, then repeatedly extracts the largest
/// remaining intersection with any alldifferent while it has >= 2 variables
/// (ties: earliest declared alldifferent). Leftovers become singletons.
PartitionSet find_partitions(const LinearExpression& e,
                             std::span<const AlldiffConstraint> alldiffs);

/// One face of a linear constraint: e <= rhs or e >= rhs. The partition set
/// is computed once per constraint at load time and shared by both faces of
/// an equality.
struct NormalizedLinear {
  LinearExpression expr;
  bool is_le = true;
  std::int64_t rhs = 0;
  std::shared_ptr<const PartitionSet> partitions;
};

/// Sum of per-term minima (maxima), each term on its own.
std::int64_t standard_min(const LinearExpression& e, const DomainStore& s);
std::int64_t standard_max(const LinearExpression& e, const DomainStore& s);

struct BoundRequest {
  VariableId var = 0;
  bool is_upper = true;
  Value bound = 0;
};

/// Output of a filtering pass. Pure data: applying the bounds to the store
/// is the caller's job. bounds comes in term order, one entry per term.
/// corrections (term order as well) is filled by the improved paths; the
/// minimum of the expression with term i elided is the face value minus
/// corrections[i].
struct BoundsResult {
  bool consistent = true;
  std::vector<BoundRequest> bounds;
  std::vector<std::int64_t> corrections;
};

BoundsResult calculate_bounds_standard(const NormalizedLinear& c, const DomainStore& s);

/// Minimum of e over assignments that are pairwise distinct and within the
/// variables' lower bounds, plus the witness needed to derive per-variable
/// corrections. Pre: every coefficient positive.
struct ImprovedMinResult {
  std::int64_t value = 0;
  struct Entry {
    std::uint32_t term = 0;  // index into the input span
    VariableId var = 0;
    Value value = 0;
  };
  std::vector<Entry> matching;  // in sweep order, values strictly monotone
  // Next candidate position at each extraction; when set, always a later
  // position in `matching`.
  std::vector<std::optional<std::uint32_t>> next_index;
};

ImprovedMinResult calculate_improved_minimum(std::span<const Term> terms,
                                             const DomainStore& s);

/// Mirror sweep over upper bounds: maximum over pairwise distinct values.
ImprovedMinResult calculate_improved_maximum(std::span<const Term> terms,
                                             const DomainStore& s);

/// Correction c[j] per sweep position: value of the sweep minus c[j] is the
/// same sweep run on the expression with that position's term elided.
std::vector<std::int64_t> sweep_corrections(std::span<const Term> terms,
                                            const ImprovedMinResult& r);

/// Upper bounds for `terms . vars <= budget` under the distinctness premise,
/// derived from one minimum sweep. Pre: positive coefficients, r was
/// computed from `terms`. bounds/corrections are in input term order.
BoundsResult corrections_and_bounds(std::span<const Term> terms,
                                    const ImprovedMinResult& r,
                                    std::int64_t budget);

/// Full filtering pass exploiting the partition set: per-group sweeps give
/// the face value, per-group budgets give each variable's bound. Handles
/// both faces and both coefficient signs. Pre: c.partitions is set.
BoundsResult calculate_bounds_improved_gen(const NormalizedLinear& c,
                                           const DomainStore& s);

}  // namespace adlin
