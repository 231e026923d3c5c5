#include "core/alldiff.hpp"

#include <algorithm>
#include <limits>

namespace adlin {

namespace {
constexpr Value kUnmatched = std::numeric_limits<Value>::min();
}

/// Value graph rebuilt per call from the current domains. Value nodes are the
/// sorted union of the member values, so node ids are deterministic.
struct AlldiffFilter::Graph {
  std::vector<Value> vals;                     // sorted unique
  std::vector<std::vector<std::uint32_t>> adj; // per var, ascending value idx
  std::vector<std::int32_t> val2var;           // matched var per value, -1 free

  explicit Graph(const AlldiffConstraint& c, const DomainStore& s) {
    for (VariableId v : c.vars) s.domain(v).for_each([&](Value x) { vals.push_back(x); });
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    adj.resize(c.vars.size());
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      s.domain(c.vars[i]).for_each([&](Value x) { adj[i].push_back(index_of(x)); });
    }
    val2var.assign(vals.size(), -1);
  }

  std::uint32_t index_of(Value x) const {
    return static_cast<std::uint32_t>(
        std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
  }
};

AlldiffFilter::AlldiffFilter(AlldiffConstraint c) : c_(std::move(c)) {
  matched_.assign(c_.vars.size(), kUnmatched);
}

namespace {

bool augment(std::uint32_t var, const std::vector<std::vector<std::uint32_t>>& adj,
             std::vector<std::int32_t>& val2var, std::vector<std::uint32_t>& var_of_val_match,
             std::vector<char>& visited) {
  for (std::uint32_t v : adj[var]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (val2var[v] < 0 ||
        augment(static_cast<std::uint32_t>(val2var[v]), adj, val2var, var_of_val_match, visited)) {
      val2var[v] = static_cast<std::int32_t>(var);
      var_of_val_match[var] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

bool AlldiffFilter::repair_matching(Graph& g) {
  const std::size_t n = c_.vars.size();
  std::vector<std::uint32_t> var_match(n, 0);
  std::vector<char> has_match(n, 0);
  auto& val2var = g.val2var;

  // Re-seat still-valid cached matches.
  for (std::size_t i = 0; i < n; ++i) {
    if (matched_[i] == kUnmatched) continue;
    Value m = matched_[i];
    std::uint32_t vi = g.index_of(m);
    if (vi < g.vals.size() && g.vals[vi] == m &&
        std::binary_search(g.adj[i].begin(), g.adj[i].end(), vi) && g.val2var[vi] < 0) {
      val2var[vi] = static_cast<std::int32_t>(i);
      var_match[i] = vi;
      has_match[i] = 1;
    } else {
      matched_[i] = kUnmatched;
    }
  }

  std::vector<char> visited;
  for (std::size_t i = 0; i < n; ++i) {
    if (has_match[i]) continue;
    visited.assign(g.vals.size(), 0);
    if (!augment(static_cast<std::uint32_t>(i), g.adj, val2var, var_match, visited))
      return false;
  }
  for (std::size_t i = 0; i < n; ++i) matched_[i] = g.vals[var_match[i]];
  return true;
}

bool AlldiffFilter::check_consistency(const DomainStore& s) {
  for (VariableId v : c_.vars)
    if (s.domain(v).empty()) return false;
  Graph g(c_, s);
  return repair_matching(g);
}

namespace {

/// Orientation: matched edges var -> value, unmatched edges value -> var.
/// Directed walks then alternate unmatched/matched, so reachability from the
/// free value nodes and the strongly connected components identify exactly
/// the edges lying on some alternating path or cycle.
struct Digraph {
  std::size_t n_vars, n_vals;
  const std::vector<std::vector<std::uint32_t>>& adj;
  const std::vector<std::int32_t>& val2var;
  std::vector<std::vector<std::uint32_t>> val_succ;  // value node -> var nodes

  Digraph(std::size_t nvars, std::size_t nvals,
          const std::vector<std::vector<std::uint32_t>>& a,
          const std::vector<std::int32_t>& v2v)
      : n_vars(nvars), n_vals(nvals), adj(a), val2var(v2v) {
    val_succ.resize(n_vals);
    for (std::size_t i = 0; i < n_vars; ++i)
      for (std::uint32_t v : adj[i])
        if (val2var[v] != static_cast<std::int32_t>(i)) val_succ[v].push_back(static_cast<std::uint32_t>(i));
  }

  std::size_t node_count() const { return n_vars + n_vals; }

  // Successors of a node: var nodes have one arc to their matched value.
  template <typename F>
  void successors(std::uint32_t node, F&& f) const {
    if (node < n_vars) {
      for (std::uint32_t v : adj[node])
        if (val2var[v] == static_cast<std::int32_t>(node)) f(static_cast<std::uint32_t>(n_vars + v));
    } else {
      for (std::uint32_t i : val_succ[node - n_vars]) f(i);
    }
  }
};

std::vector<std::uint32_t> tarjan_scc(const Digraph& g) {
  const std::uint32_t kUndef = std::numeric_limits<std::uint32_t>::max();
  std::size_t n = g.node_count();
  std::vector<std::uint32_t> comp(n, kUndef), low(n, 0), disc(n, kUndef);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::uint32_t timer = 0, comps = 0;

  struct Frame {
    std::uint32_t node;
    std::vector<std::uint32_t> succ;
    std::size_t next = 0;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (disc[root] != kUndef) continue;
    call.push_back({root, {}, 0});
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    on_stack[root] = 1;
    g.successors(root, [&](std::uint32_t s) { call.back().succ.push_back(s); });

    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < f.succ.size()) {
        std::uint32_t w = f.succ[f.next++];
        if (disc[w] == kUndef) {
          call.push_back({w, {}, 0});
          disc[w] = low[w] = timer++;
          stack.push_back(w);
          on_stack[w] = 1;
          g.successors(w, [&](std::uint32_t s) { call.back().succ.push_back(s); });
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], disc[w]);
        }
      } else {
        std::uint32_t v = f.node;
        if (low[v] == disc[v]) {
          for (;;) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<std::vector<AlldiffFilter::Removal>> AlldiffFilter::prune(const DomainStore& s) {
  for (VariableId v : c_.vars)
    if (s.domain(v).empty()) return std::nullopt;
  Graph g(c_, s);
  if (!repair_matching(g)) return std::nullopt;

  const std::size_t n = c_.vars.size();
  const std::size_t m = g.vals.size();
  Digraph d(n, m, g.adj, g.val2var);

  // Value nodes reachable from free value nodes via alternating walks.
  std::vector<char> val_reached(m, 0), var_reached(n, 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < m; ++v) {
    if (g.val2var[v] < 0) {
      val_reached[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.back();
    queue.pop_back();
    for (std::uint32_t i : d.val_succ[v]) {
      if (var_reached[i]) continue;
      var_reached[i] = 1;
      // follow the matched edge of i
      for (std::uint32_t w : g.adj[i]) {
        if (g.val2var[w] == static_cast<std::int32_t>(i) && !val_reached[w]) {
          val_reached[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<std::uint32_t> comp = tarjan_scc(d);

  std::vector<Removal> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t v : g.adj[i]) {
      if (g.val2var[v] == static_cast<std::int32_t>(i)) continue;  // matched edge
      if (val_reached[v]) continue;
      if (comp[i] == comp[n + v]) continue;
      out.push_back({c_.vars[i], g.vals[v]});
    }
  }
  return out;
}

bool check_consistency(const AlldiffConstraint& c, const DomainStore& s) {
  AlldiffFilter f(c);
  return f.check_consistency(s);
}

std::optional<std::vector<AlldiffFilter::Removal>> regin_prune(const AlldiffConstraint& c,
                                                               const DomainStore& s) {
  AlldiffFilter f(c);
  return f.prune(s);
}

}  // namespace adlin
