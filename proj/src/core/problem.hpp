#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "core/domain.hpp"

namespace adlin {

struct VarDecl {
  std::string name;
  FiniteDomain domain;

  bool operator==(const VarDecl&) const = default;
};

struct AlldiffRecord {
  std::vector<VariableId> vars;

  bool operator==(const AlldiffRecord&) const = default;
};

struct LinearRecord {
  std::vector<std::int64_t> coeffs;  // parallel to vars, merged and var-sorted
  std::vector<VariableId> vars;
  Rel rel = Rel::le;
  std::int64_t rhs = 0;

  bool operator==(const LinearRecord&) const = default;
};

/// Disjunction of upper bounds: at least one var <= bound must hold.
struct BoundOrRecord {
  struct Disjunct {
    VariableId var;
    std::int64_t bound;

    bool operator==(const Disjunct&) const = default;
  };
  std::vector<Disjunct> disjuncts;

  bool operator==(const BoundOrRecord&) const = default;
};

using Constraint = std::variant<AlldiffRecord, LinearRecord, BoundOrRecord>;

/// A whole constraint problem, declaration order preserved. This is the
/// parse/serialize unit; solvers and oracles are built from it.
struct ProblemInstance {
  std::vector<VarDecl> vars;
  std::vector<Constraint> constraints;
  std::map<std::string, std::string> meta;  // family, seed, size, ...

  /// Index lookup by name; returns false when absent.
  bool find_var(const std::string& name, VariableId& out) const;

  bool operator==(const ProblemInstance&) const = default;
};

/// Structural checks: unique well-formed names, non-empty domains, values and
/// coefficients within |v| <= 2^31, indices in range, matching coeff/var
/// lengths, no duplicate variables inside an alldifferent. Throws
/// std::invalid_argument with a descriptive message on the first violation.
void validate(const ProblemInstance& p);

/// Direct evaluation of every constraint under a full assignment
/// (assignment[i] is the value of variable i; domains are also honored).
bool satisfies(const ProblemInstance& p, const std::vector<Value>& assignment);

/// Normalizes a linear record into merged sorted terms (used by parsing and
/// encoders; exposed for tests).
LinearRecord normalize_linear(std::vector<std::int64_t> coeffs,
                              std::vector<VariableId> vars, Rel rel,
                              std::int64_t rhs);

}  // namespace adlin
