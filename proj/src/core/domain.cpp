#include "core/domain.hpp"

#include <algorithm>
#include <atomic>

namespace adlin {

FiniteDomain FiniteDomain::of_values(std::vector<Value> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  FiniteDomain d;
  if (vals.empty()) return d;
  d.lower_ = vals.front();
  d.upper_ = vals.back();
  auto next = vals.begin();
  for (Value v = d.lower_; v <= d.upper_; ++v) {
    if (next != vals.end() && *next == v) {
      ++next;
    } else {
      d.holes_.insert(d.holes_.end(), v);
    }
  }
  return d;
}

namespace {
std::atomic<std::uint64_t> g_store_serial{1};
}

DomainStore::DomainStore() : id_(g_store_serial.fetch_add(1)) {}

VariableId DomainStore::add_variable(FiniteDomain d) {
  assert(marks_.empty() && "variables must be added before the first checkpoint");
  doms_.push_back(std::move(d));
  return static_cast<VariableId>(doms_.size() - 1);
}

ChangeReport DomainStore::make_empty(VariableId v, FiniteDomain& d) {
  Undo u;
  u.var = v;
  u.kind = UndoKind::full;
  u.a = d.lower_;
  u.b = d.upper_;
  u.holes.assign(d.holes_.begin(), d.holes_.end());
  trail_.push_back(std::move(u));
  d.lower_ = 1;
  d.upper_ = 0;
  d.holes_.clear();
  return ChangeReport::emptied;
}

ChangeReport DomainStore::tighten_upper(VariableId v, Value b) {
  assert(v < doms_.size());
  FiniteDomain& d = doms_[v];
  assert(!d.empty());
  if (b >= d.upper_) return ChangeReport::unchanged;
  if (b < d.lower_) return make_empty(v, d);

  Value nu = b;
  while (d.holes_.count(nu)) --nu;  // lower_ is a member, so this stops
  Undo u;
  u.var = v;
  u.kind = UndoKind::upper;
  u.a = d.upper_;
  auto it = d.holes_.upper_bound(nu);
  u.holes.assign(it, d.holes_.end());
  d.holes_.erase(it, d.holes_.end());
  d.upper_ = nu;
  trail_.push_back(std::move(u));
  return ChangeReport::tightened;
}

ChangeReport DomainStore::tighten_lower(VariableId v, Value b) {
  assert(v < doms_.size());
  FiniteDomain& d = doms_[v];
  assert(!d.empty());
  if (b <= d.lower_) return ChangeReport::unchanged;
  if (b > d.upper_) return make_empty(v, d);

  Value nl = b;
  while (d.holes_.count(nl)) ++nl;
  Undo u;
  u.var = v;
  u.kind = UndoKind::lower;
  u.a = d.lower_;
  auto it = d.holes_.lower_bound(nl);
  u.holes.assign(d.holes_.begin(), it);
  d.holes_.erase(d.holes_.begin(), it);
  d.lower_ = nl;
  trail_.push_back(std::move(u));
  return ChangeReport::tightened;
}

ChangeReport DomainStore::remove_value(VariableId v, Value val) {
  assert(v < doms_.size());
  FiniteDomain& d = doms_[v];
  if (!d.contains(val)) return ChangeReport::unchanged;
  if (d.lower_ == d.upper_) return make_empty(v, d);

  if (val == d.lower_) {
    Undo u;
    u.var = v;
    u.kind = UndoKind::lower;
    u.a = d.lower_;
    Value nl = val + 1;
    while (d.holes_.count(nl)) {
      u.holes.push_back(nl);
      d.holes_.erase(nl);
      ++nl;
    }
    d.lower_ = nl;
    trail_.push_back(std::move(u));
    return ChangeReport::tightened;
  }
  if (val == d.upper_) {
    Undo u;
    u.var = v;
    u.kind = UndoKind::upper;
    u.a = d.upper_;
    Value nu = val - 1;
    while (d.holes_.count(nu)) {
      u.holes.push_back(nu);
      d.holes_.erase(nu);
      --nu;
    }
    d.upper_ = nu;
    trail_.push_back(std::move(u));
    return ChangeReport::tightened;
  }

  d.holes_.insert(val);
  Undo u;
  u.var = v;
  u.kind = UndoKind::hole;
  u.a = val;
  trail_.push_back(std::move(u));
  return ChangeReport::tightened;
}

ChangeReport DomainStore::fix(VariableId v, Value val) {
  ChangeReport up = tighten_upper(v, val);
  if (up == ChangeReport::emptied) return up;
  ChangeReport lo = tighten_lower(v, val);
  if (lo == ChangeReport::emptied) return lo;
  if (up == ChangeReport::tightened || lo == ChangeReport::tightened)
    return ChangeReport::tightened;
  return ChangeReport::unchanged;
}

Mark DomainStore::checkpoint() {
  marks_.push_back(trail_.size());
  return Mark{id_, trail_.size(), marks_.size() - 1};
}

void DomainStore::rollback(const Mark& m) {
  assert(m.store == id_ && "mark belongs to a different store");
  assert(m.level < marks_.size() && marks_[m.level] == m.trail_pos &&
         "mark already popped");
  while (trail_.size() > m.trail_pos) {
    undo_one(trail_.back());
    trail_.pop_back();
  }
  marks_.resize(m.level);
}

void DomainStore::undo_one(const Undo& u) {
  FiniteDomain& d = doms_[u.var];
  switch (u.kind) {
    case UndoKind::lower:
      d.lower_ = u.a;
      d.holes_.insert(u.holes.begin(), u.holes.end());
      break;
    case UndoKind::upper:
      d.upper_ = u.a;
      d.holes_.insert(u.holes.begin(), u.holes.end());
      break;
    case UndoKind::hole:
      d.holes_.erase(u.a);
      break;
    case UndoKind::full:
      d.lower_ = u.a;
      d.upper_ = u.b;
      d.holes_.clear();
      d.holes_.insert(u.holes.begin(), u.holes.end());
      break;
  }
}

}  // namespace adlin
