#pragma once

#include <cassert>
#include <cstddef>
#include <set>
#include <vector>

#include "core/types.hpp"

namespace adlin {

enum class ChangeReport { unchanged, tightened, emptied };

/// Finite set of integers stored as a closed interval plus a set of holes
/// strictly inside it. min/max are O(1); membership is O(log holes).
/// Mutation goes through DomainStore so that every change is trailed.
class FiniteDomain {
 public:
  FiniteDomain() = default;  // empty

  static FiniteDomain interval(Value lo, Value hi) {
    FiniteDomain d;
    if (lo <= hi) {
      d.lower_ = lo;
      d.upper_ = hi;
    }
    return d;
  }

  /// Builds from an arbitrary value list (sorted and deduplicated here).
  static FiniteDomain of_values(std::vector<Value> vals);

  bool empty() const { return lower_ > upper_; }
  bool is_fixed() const { return lower_ == upper_; }

  Value min() const {
    assert(!empty());
    return lower_;
  }
  Value max() const {
    assert(!empty());
    return upper_;
  }

  std::int64_t size() const {
    return empty() ? 0 : upper_ - lower_ + 1 - static_cast<std::int64_t>(holes_.size());
  }

  bool contains(Value v) const {
    return lower_ <= v && v <= upper_ && holes_.count(v) == 0;
  }

  /// Ascending member walk. Cost is proportional to the interval width, so
  /// only call this on domains that are actually small.
  template <typename F>
  void for_each(F&& f) const {
    auto hole = holes_.begin();
    for (Value v = lower_; v <= upper_; ++v) {
      if (hole != holes_.end() && *hole == v) {
        ++hole;
        continue;
      }
      f(v);
    }
  }

  std::vector<Value> values() const {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Value v) { out.push_back(v); });
    return out;
  }

  bool operator==(const FiniteDomain& o) const {
    return lower_ == o.lower_ && upper_ == o.upper_ && holes_ == o.holes_;
  }

 private:
  friend class DomainStore;
  Value lower_ = 1;
  Value upper_ = 0;
  std::set<Value> holes_;
};

/// Position in a DomainStore trail, returned by checkpoint(). Marks are
/// LIFO: rolling back to a mark also discards every mark taken after it.
/// Passing a mark from another store is a programming error.
struct Mark {
  std::uint64_t store = 0;
  std::size_t trail_pos = 0;
  std::size_t level = 0;
};

/// Owns all variable domains plus the trail that makes mutation reversible.
/// Each mutating call appends exactly one undo record (no record when the
/// domain was left unchanged), so rollback restores domains bit-exactly.
class DomainStore {
 public:
  DomainStore();

  /// Only valid before the first checkpoint.
  VariableId add_variable(FiniteDomain d);

  std::size_t var_count() const { return doms_.size(); }
  const FiniteDomain& domain(VariableId v) const {
    assert(v < doms_.size());
    return doms_[v];
  }

  /// Removes every value > b. Pre: domain non-empty.
  ChangeReport tighten_upper(VariableId v, Value b);
  /// Removes every value < b. Pre: domain non-empty.
  ChangeReport tighten_lower(VariableId v, Value b);
  /// Removes one value if present.
  ChangeReport remove_value(VariableId v, Value val);
  /// Reduces the domain to {val}; emptied when val is not a member.
  ChangeReport fix(VariableId v, Value val);

  Mark checkpoint();
  void rollback(const Mark& m);
  std::size_t level() const { return marks_.size(); }

  std::size_t trail_size() const { return trail_.size(); }
  VariableId trail_var(std::size_t i) const { return trail_[i].var; }

 private:
  enum class UndoKind : std::uint8_t { lower, upper, hole, full };

  struct Undo {
    VariableId var = 0;
    UndoKind kind = UndoKind::hole;
    Value a = 0;  // old lower / old upper / hole value
    Value b = 0;  // old upper (full restore only)
    std::vector<Value> holes;  // holes dropped by the mutation
  };

  void undo_one(const Undo& u);
  ChangeReport make_empty(VariableId v, FiniteDomain& d);

  std::uint64_t id_;
  std::vector<FiniteDomain> doms_;
  std::vector<Undo> trail_;
  std::vector<std::size_t> marks_;
};

}  // namespace adlin
