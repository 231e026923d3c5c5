#include "core/linear.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_set>

namespace adlin {

LinearExpression LinearExpression::make(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  LinearExpression e;
  for (const Term& t : raw) {
    if (!e.terms.empty() && e.terms.back().var == t.var) {
      e.terms.back().coeff += t.coeff;
    } else {
      e.terms.push_back(t);
    }
  }
  std::erase_if(e.terms, [](const Term& t) { return t.coeff == 0; });
  return e;
}

PartitionSet find_partitions(const LinearExpression& e,
                             std::span<const AlldiffConstraint> alldiffs) {
  std::vector<std::unordered_set<VariableId>> members(alldiffs.size());
  for (std::size_t i = 0; i < alldiffs.size(); ++i)
    members[i].insert(alldiffs[i].vars.begin(), alldiffs[i].vars.end());

  PartitionSet out;
  auto extract = [&](std::vector<std::uint32_t> remaining, bool positive) {
    for (;;) {
      std::optional<std::uint32_t> best_ad;
      std::vector<std::uint32_t> best;
      for (std::uint32_t a = 0; a < alldiffs.size(); ++a) {
        std::vector<std::uint32_t> inter;
        for (std::uint32_t t : remaining)
          if (members[a].count(e.terms[t].var)) inter.push_back(t);
        if (inter.size() >= 2 && inter.size() > best.size()) {
          best = std::move(inter);
          best_ad = a;
        }
      }
      if (!best_ad) break;
      std::erase_if(remaining, [&](std::uint32_t t) {
        return std::find(best.begin(), best.end(), t) != best.end();
      });
      out.groups.push_back({positive, std::move(best), best_ad});
    }
    for (std::uint32_t t : remaining)
      out.groups.push_back({positive, {t}, std::nullopt});
  };

  std::vector<std::uint32_t> pos, neg;
  for (std::uint32_t t = 0; t < e.terms.size(); ++t)
    (e.terms[t].coeff > 0 ? pos : neg).push_back(t);
  extract(std::move(pos), true);
  extract(std::move(neg), false);
  return out;
}

std::int64_t standard_min(const LinearExpression& e, const DomainStore& s) {
  std::int64_t acc = 0;
  for (const Term& t : e.terms) {
    const FiniteDomain& d = s.domain(t.var);
    acc += t.coeff * (t.coeff > 0 ? d.min() : d.max());
  }
  return acc;
}

std::int64_t standard_max(const LinearExpression& e, const DomainStore& s) {
  std::int64_t acc = 0;
  for (const Term& t : e.terms) {
    const FiniteDomain& d = s.domain(t.var);
    acc += t.coeff * (t.coeff > 0 ? d.max() : d.min());
  }
  return acc;
}

BoundsResult calculate_bounds_standard(const NormalizedLinear& c, const DomainStore& s) {
  BoundsResult out;
  const auto& terms = c.expr.terms;
  if (c.is_le) {
    std::int64_t lo = standard_min(c.expr, s);
    if (lo > c.rhs) {
      out.consistent = false;
      return out;
    }
    out.bounds.reserve(terms.size());
    for (const Term& t : terms) {
      const FiniteDomain& d = s.domain(t.var);
      std::int64_t elided = lo - t.coeff * (t.coeff > 0 ? d.min() : d.max());
      std::int64_t num = c.rhs - elided;
      if (t.coeff > 0) {
        out.bounds.push_back({t.var, true, floor_div(num, t.coeff)});
      } else {
        out.bounds.push_back({t.var, false, ceil_div(num, t.coeff)});
      }
    }
  } else {
    std::int64_t hi = standard_max(c.expr, s);
    if (hi < c.rhs) {
      out.consistent = false;
      return out;
    }
    out.bounds.reserve(terms.size());
    for (const Term& t : terms) {
      const FiniteDomain& d = s.domain(t.var);
      std::int64_t elided = hi - t.coeff * (t.coeff > 0 ? d.max() : d.min());
      std::int64_t num = c.rhs - elided;
      if (t.coeff > 0) {
        out.bounds.push_back({t.var, false, ceil_div(num, t.coeff)});
      } else {
        out.bounds.push_back({t.var, true, floor_div(num, t.coeff)});
      }
    }
  }
  return out;
}

namespace {

// Max-heap of candidate terms: largest coefficient first, earliest term on
// ties.
struct CandLess {
  bool operator()(const std::pair<std::int64_t, std::uint32_t>& a,
                  const std::pair<std::int64_t, std::uint32_t>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  }
};

using CandHeap = std::priority_queue<std::pair<std::int64_t, std::uint32_t>,
                                     std::vector<std::pair<std::int64_t, std::uint32_t>>,
                                     CandLess>;

ImprovedMinResult sweep(std::span<const Term> terms, const DomainStore& s, bool minimize) {
  ImprovedMinResult r;
  const std::size_t n = terms.size();
  if (n == 0) return r;
  r.matching.reserve(n);
  r.next_index.assign(n, std::nullopt);

  std::vector<Value> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    assert(terms[i].coeff > 0);
    const FiniteDomain& d = s.domain(terms[i].var);
    bound[i] = minimize ? d.min() : d.max();
  }

  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (bound[a] != bound[b]) return minimize ? bound[a] < bound[b] : bound[a] > bound[b];
    return a < b;
  });

  CandHeap heap;
  std::vector<std::optional<std::uint32_t>> next_term(n);
  std::vector<std::uint32_t> pos_of_term(n, 0);
  std::size_t added = 0;
  Value d = minimize ? bound[order[0]] - 1 : bound[order[0]] + 1;

  for (std::size_t j = 0; j < n; ++j) {
    // With fewer candidates added than extracted, the heap is empty and the
    // j-th variable in sorted order is exactly the next admissible one.
    if (minimize) {
      d = std::max(d + 1, bound[order[j]]);
      while (added < n && bound[order[added]] <= d) {
        heap.push({terms[order[added]].coeff, order[added]});
        ++added;
      }
    } else {
      d = std::min(d - 1, bound[order[j]]);
      while (added < n && bound[order[added]] >= d) {
        heap.push({terms[order[added]].coeff, order[added]});
        ++added;
      }
    }
    auto [coeff, t] = heap.top();
    heap.pop();
    r.matching.push_back({t, terms[t].var, d});
    r.value += coeff * d;
    if (!heap.empty()) next_term[j] = heap.top().second;
    pos_of_term[t] = static_cast<std::uint32_t>(j);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (next_term[j]) r.next_index[j] = pos_of_term[*next_term[j]];
  return r;
}

}  // namespace

ImprovedMinResult calculate_improved_minimum(std::span<const Term> terms,
                                             const DomainStore& s) {
  return sweep(terms, s, true);
}

ImprovedMinResult calculate_improved_maximum(std::span<const Term> terms,
                                             const DomainStore& s) {
  return sweep(terms, s, false);
}

std::vector<std::int64_t> sweep_corrections(std::span<const Term> terms,
                                            const ImprovedMinResult& r) {
  const std::size_t n = r.matching.size();
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t jj = n; jj-- > 0;) {
    const auto& m = r.matching[jj];
    std::int64_t a = terms[m.term].coeff;
    if (!r.next_index[jj]) {
      c[jj] = a * m.value;
    } else {
      std::uint32_t k = *r.next_index[jj];
      std::int64_t ak = terms[r.matching[k].term].coeff;
      c[jj] = (a - ak) * m.value + c[k];
    }
  }
  return c;
}

BoundsResult corrections_and_bounds(std::span<const Term> terms,
                                    const ImprovedMinResult& r,
                                    std::int64_t budget) {
  BoundsResult out;
  out.consistent = r.value <= budget;
  out.bounds.resize(terms.size());
  out.corrections.assign(terms.size(), 0);
  std::vector<std::int64_t> c = sweep_corrections(terms, r);
  for (std::size_t j = 0; j < r.matching.size(); ++j) {
    std::uint32_t t = r.matching[j].term;
    std::int64_t elided = r.value - c[j];
    out.corrections[t] = c[j];
    out.bounds[t] = {terms[t].var, true, floor_div(budget - elided, terms[t].coeff)};
  }
  return out;
}

BoundsResult calculate_bounds_improved_gen(const NormalizedLinear& c, const DomainStore& s) {
  assert(c.partitions && "partitions must be attached at load time");
  const PartitionSet& parts = *c.partitions;
  const auto& terms = c.expr.terms;

  struct GroupRun {
    std::vector<Term> gathered;  // negative groups hold |a| here
    ImprovedMinResult sweep;
    std::int64_t value = 0;  // face value of the group
  };
  std::vector<GroupRun> runs(parts.groups.size());

  std::int64_t total = 0;
  for (std::size_t g = 0; g < parts.groups.size(); ++g) {
    const PartitionGroup& grp = parts.groups[g];
    GroupRun& run = runs[g];
    run.gathered.reserve(grp.terms.size());
    for (std::uint32_t t : grp.terms) {
      Term term = terms[t];
      if (!grp.positive) term.coeff = -term.coeff;
      run.gathered.push_back(term);
    }
    bool want_min = c.is_le == grp.positive;  // face on |e^k|
    run.sweep = want_min ? calculate_improved_minimum(run.gathered, s)
                         : calculate_improved_maximum(run.gathered, s);
    run.value = grp.positive ? run.sweep.value : -run.sweep.value;
    total += run.value;
  }

  BoundsResult out;
  if (c.is_le ? total > c.rhs : total < c.rhs) {
    out.consistent = false;
    return out;
  }
  out.bounds.resize(terms.size());
  out.corrections.assign(terms.size(), 0);

  for (std::size_t g = 0; g < parts.groups.size(); ++g) {
    const PartitionGroup& grp = parts.groups[g];
    GroupRun& run = runs[g];
    std::int64_t budget = c.rhs - (total - run.value);
    std::vector<std::int64_t> corr = sweep_corrections(run.gathered, run.sweep);
    for (std::size_t j = 0; j < run.sweep.matching.size(); ++j) {
      std::uint32_t local = run.sweep.matching[j].term;
      std::uint32_t t = grp.terms[local];
      std::int64_t a = terms[t].coeff;
      std::int64_t elided = grp.positive ? run.value - corr[j] : run.value + corr[j];
      std::int64_t num = budget - elided;
      bool upper = c.is_le == (a > 0);
      out.bounds[t] = {terms[t].var, upper,
                       upper ? floor_div(num, a) : ceil_div(num, a)};
      out.corrections[t] = grp.positive ? corr[j] : -corr[j];
    }
  }
  return out;
}

}  // namespace adlin
