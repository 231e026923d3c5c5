#include "core/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

namespace adlin {

namespace {

using Clock = std::chrono::steady_clock;

struct Engine {
  const ProblemInstance& p;
  const SolverConfig& cfg;
  DomainStore store;
  SearchStats stats;
  std::vector<std::unique_ptr<Propagator>> props;
  std::vector<std::vector<std::uint32_t>> watchers;  // per variable
  std::deque<std::uint32_t> cheap, costly;
  std::vector<char> queued;
  std::optional<Clock::time_point> deadline;

  const std::function<void(const std::vector<Value>&)>* sink = nullptr;
  bool stop_at_first = true;
  std::uint64_t found = 0;
  std::vector<Value> first_solution;

  Engine(const ProblemInstance& problem, const SolverConfig& config)
      : p(problem), cfg(config) {
    for (const VarDecl& v : p.vars) store.add_variable(v.domain);
    props = build_propagators(p, cfg.filter, &stats);
    watchers.resize(p.vars.size());
    for (std::uint32_t i = 0; i < props.size(); ++i)
      for (VariableId v : props[i]->watches()) watchers[v].push_back(i);
    queued.assign(props.size(), 0);
    if (cfg.time_limit_ms)
      deadline = Clock::now() + std::chrono::milliseconds(*cfg.time_limit_ms);
  }

  void enqueue(std::uint32_t pid) {
    if (queued[pid]) return;
    queued[pid] = 1;
    (props[pid]->tier() == 0 ? cheap : costly).push_back(pid);
  }

  void clear_queue() {
    cheap.clear();
    costly.clear();
    std::fill(queued.begin(), queued.end(), 0);
  }

  // Runs propagators until stable; on conflict the queue is discarded.
  bool fixpoint() {
    while (!cheap.empty() || !costly.empty()) {
      std::deque<std::uint32_t>& q = cheap.empty() ? costly : cheap;
      std::uint32_t pid = q.front();
      q.pop_front();
      queued[pid] = 0;
      std::size_t before = store.trail_size();
      PropagateResult r = props[pid]->propagate(store);
      if (r == PropagateResult::conflict) {
        clear_queue();
        return false;
      }
      for (std::size_t t = before; t < store.trail_size(); ++t)
        for (std::uint32_t w : watchers[store.trail_var(t)]) enqueue(w);
    }
    return true;
  }

  // Smallest undecided variable per the configured order; nullopt when all
  // domains are singletons.
  std::optional<VariableId> pick() const {
    std::optional<VariableId> best;
    std::size_t best_size = 0;
    for (VariableId v = 0; v < static_cast<VariableId>(p.vars.size()); ++v) {
      std::size_t size = store.domain(v).size();
      if (size < 2) continue;
      if (cfg.var_order == VarOrder::lex) return v;
      if (!best || size < best_size) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<Value> assignment() const {
    std::vector<Value> out;
    for (VariableId v = 0; v < static_cast<VariableId>(p.vars.size()); ++v)
      out.push_back(store.domain(v).min());
    return out;
  }

  bool out_of_budget() const {
    if (cfg.node_limit && stats.decisions >= *cfg.node_limit) return true;
    if (deadline && Clock::now() >= *deadline) return true;
    return false;
  }

  enum class Walk { done, exhausted, limit };

  Walk dfs() {
    std::optional<VariableId> var = pick();
    if (!var) {
      std::vector<Value> sol = assignment();
      if (!satisfies(p, sol))
        throw std::logic_error("solver produced an assignment that fails re-evaluation");
      ++found;
      if (sink) (*sink)(sol);
      if (stop_at_first) {
        first_solution = std::move(sol);
        return Walk::done;
      }
      return Walk::exhausted;
    }

    for (Value v : store.domain(*var).values()) {
      if (out_of_budget()) return Walk::limit;
      ++stats.decisions;
      std::uint64_t found_before = found;
      Mark mark = store.checkpoint();
      ChangeReport rep = store.fix(*var, v);
      bool ok = rep != ChangeReport::emptied;
      if (ok) {
        for (std::uint32_t w : watchers[*var]) enqueue(w);
        ok = fixpoint();
      }
      if (ok) {
        Walk r = dfs();
        if (r != Walk::exhausted) {
          store.rollback(mark);
          return r;
        }
      }
      store.rollback(mark);
      if (found == found_before) ++stats.conflicts;
    }
    return Walk::exhausted;
  }

  SolveResult run() {
    SolveResult out;
    for (std::uint32_t i = 0; i < props.size(); ++i) enqueue(i);
    if (!fixpoint()) {
      out.status = SolveStatus::unsat;
      out.stats = stats;
      return out;
    }
    Walk w = dfs();
    if (w == Walk::limit)
      out.status = SolveStatus::limit;
    else if (found > 0)
      out.status = SolveStatus::sat;
    else
      out.status = SolveStatus::unsat;
    if (stop_at_first && found > 0) out.assignment = std::move(first_solution);
    out.stats = stats;
    return out;
  }
};

}  // namespace

SolveResult solve(const ProblemInstance& p, const SolverConfig& cfg) {
  Engine e(p, cfg);
  return e.run();
}

SolveResult solve_all(const ProblemInstance& p, const SolverConfig& cfg,
                      const std::function<void(const std::vector<Value>&)>& sink) {
  Engine e(p, cfg);
  e.sink = &sink;
  e.stop_at_first = false;
  return e.run();
}

std::optional<std::vector<FiniteDomain>> propagate_root(const ProblemInstance& p,
                                                        FilterMode mode) {
  SolverConfig cfg;
  cfg.filter = mode;
  Engine e(p, cfg);
  for (std::uint32_t i = 0; i < e.props.size(); ++i) e.enqueue(i);
  if (!e.fixpoint()) return std::nullopt;
  std::vector<FiniteDomain> out;
  for (VariableId v = 0; v < static_cast<VariableId>(p.vars.size()); ++v)
    out.push_back(e.store.domain(v));
  return out;
}

}  // namespace adlin
