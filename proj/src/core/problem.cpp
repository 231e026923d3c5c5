#include "core/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "core/linear.hpp"

namespace adlin {

bool ProblemInstance::find_var(const std::string& name, VariableId& out) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) {
      out = static_cast<VariableId>(i);
      return true;
    }
  }
  return false;
}

namespace {

constexpr std::int64_t kMagnitudeCap = std::int64_t{1} << 31;

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

LinearRecord normalize_linear(std::vector<std::int64_t> coeffs,
                              std::vector<VariableId> vars, Rel rel,
                              std::int64_t rhs) {
  if (coeffs.size() != vars.size()) fail("linear: coefficient/variable count mismatch");
  std::vector<Term> raw(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) raw[i] = {coeffs[i], vars[i]};
  LinearExpression e = LinearExpression::make(std::move(raw));
  LinearRecord r;
  r.rel = rel;
  r.rhs = rhs;
  for (const Term& t : e.terms) {
    r.coeffs.push_back(t.coeff);
    r.vars.push_back(t.var);
  }
  return r;
}

void validate(const ProblemInstance& p) {
  std::set<std::string> names;
  for (const VarDecl& v : p.vars) {
    if (!valid_name(v.name)) fail("bad variable name '" + v.name + "'");
    if (!names.insert(v.name).second) fail("duplicate variable '" + v.name + "'");
    if (v.domain.empty()) fail("empty domain for '" + v.name + "'");
    if (v.domain.min() < -kMagnitudeCap || v.domain.max() > kMagnitudeCap)
      fail("domain of '" + v.name + "' exceeds the value magnitude cap");
  }
  auto check_var = [&](VariableId v, const char* where) {
    if (v >= p.vars.size()) fail(std::string(where) + ": variable index out of range");
  };
  for (const Constraint& c : p.constraints) {
    if (const auto* ad = std::get_if<AlldiffRecord>(&c)) {
      if (ad->vars.empty()) fail("alldifferent: no variables");
      std::set<VariableId> seen;
      for (VariableId v : ad->vars) {
        check_var(v, "alldifferent");
        if (!seen.insert(v).second)
          fail("alldifferent: variable '" + p.vars[v].name + "' repeated");
      }
    } else if (const auto* lin = std::get_if<LinearRecord>(&c)) {
      if (lin->vars.empty()) fail("linear: no terms left after merging");
      if (lin->coeffs.size() != lin->vars.size())
        fail("linear: coefficient/variable count mismatch");
      for (std::size_t i = 0; i < lin->vars.size(); ++i) {
        check_var(lin->vars[i], "linear");
        if (lin->coeffs[i] < -kMagnitudeCap || lin->coeffs[i] > kMagnitudeCap)
          fail("linear: coefficient magnitude too large");
        if (i > 0 && lin->vars[i - 1] >= lin->vars[i])
          fail("linear: terms must be merged and variable-sorted");
        if (lin->coeffs[i] == 0) fail("linear: zero coefficient left unmerged");
      }
    } else if (const auto* bo = std::get_if<BoundOrRecord>(&c)) {
      if (bo->disjuncts.empty()) fail("bound_or: no disjuncts");
      for (const auto& d : bo->disjuncts) check_var(d.var, "bound_or");
    }
  }
}

bool satisfies(const ProblemInstance& p, const std::vector<Value>& assignment) {
  if (assignment.size() != p.vars.size()) return false;
  for (std::size_t i = 0; i < p.vars.size(); ++i)
    if (!p.vars[i].domain.contains(assignment[i])) return false;

  for (const Constraint& c : p.constraints) {
    if (const auto* ad = std::get_if<AlldiffRecord>(&c)) {
      std::set<Value> seen;
      for (VariableId v : ad->vars)
        if (!seen.insert(assignment[v]).second) return false;
    } else if (const auto* lin = std::get_if<LinearRecord>(&c)) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < lin->vars.size(); ++i)
        acc += lin->coeffs[i] * assignment[lin->vars[i]];
      bool ok = false;
      switch (lin->rel) {
        case Rel::le: ok = acc <= lin->rhs; break;
        case Rel::ge: ok = acc >= lin->rhs; break;
        case Rel::eq: ok = acc == lin->rhs; break;
        case Rel::lt: ok = acc < lin->rhs; break;
        case Rel::gt: ok = acc > lin->rhs; break;
      }
      if (!ok) return false;
    } else if (const auto* bo = std::get_if<BoundOrRecord>(&c)) {
      bool any = false;
      for (const auto& d : bo->disjuncts)
        if (assignment[d.var] <= d.bound) {
          any = true;
          break;
        }
      if (!any) return false;
    }
  }
  return true;
}

}  // namespace adlin
