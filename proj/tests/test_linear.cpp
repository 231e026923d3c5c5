#include <random>

#include "core/linear.hpp"
#include "core/oracles.hpp"
#include "doctest.h"

using namespace adlin;

TEST_SUITE_BEGIN("linear");

namespace {

// Six-term inequality used as the shared fixture:
//   6*x1 + 8*x2 + 7*x3 + 4*x4 + 2*x5 + 1*x6 <= 85
// with x1 in 1..10, x2 in 2..10, x3 in 1..10, x4 in 3..10, x5 in 3..15,
// x6 in 9..40.
struct SixTermFixture {
  DomainStore s;
  NormalizedLinear c;

  SixTermFixture() {
    s.add_variable(FiniteDomain::interval(1, 10));
    s.add_variable(FiniteDomain::interval(2, 10));
    s.add_variable(FiniteDomain::interval(1, 10));
    s.add_variable(FiniteDomain::interval(3, 10));
    s.add_variable(FiniteDomain::interval(3, 15));
    s.add_variable(FiniteDomain::interval(9, 40));
    c.expr = LinearExpression::make(
        {{6, 0}, {8, 1}, {7, 2}, {4, 3}, {2, 4}, {1, 5}});
    c.is_le = true;
    c.rhs = 85;
  }
};

std::vector<Value> upper_bounds(const BoundsResult& r) {
  std::vector<Value> out;
  for (const BoundRequest& b : r.bounds) {
    REQUIRE(b.is_upper);
    out.push_back(b.bound);
  }
  return out;
}

}  // namespace

TEST_CASE("floor and ceil division round toward the right infinities") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(7, -2) == -3);
  CHECK(ceil_div(-7, -2) == 4);
  CHECK(floor_div(6, 3) == 2);
  CHECK(ceil_div(6, 3) == 2);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(ceil_div(-6, 3) == -2);

  // characterization: q = floor(a/b) iff q*b <= a (b>0) / q*b >= a (b<0),
  // and q+1 fails it; ceil mirrors via negation
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 50);
  for (int i = 0; i < 5000; ++i) {
    std::int64_t a = num(rng);
    std::int64_t b = den(rng) * (rng() % 2 ? 1 : -1);
    std::int64_t f = floor_div(a, b);
    if (b > 0) {
      REQUIRE(f * b <= a);
      REQUIRE((f + 1) * b > a);
    } else {
      REQUIRE(f * b >= a);
      REQUIRE((f + 1) * b < a);
    }
    REQUIRE(ceil_div(a, b) == -floor_div(-a, b));
  }
}

TEST_CASE("expression normalization merges and sorts") {
  LinearExpression e = LinearExpression::make({{2, 3}, {5, 1}, {-2, 3}, {1, 1}, {4, 0}});
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].coeff == 4);
  CHECK(e.terms[0].var == 0);
  CHECK(e.terms[1].coeff == 6);
  CHECK(e.terms[1].var == 1);
}

TEST_CASE("standard extrema of the six-term fixture") {
  SixTermFixture f;
  CHECK(standard_min(f.c.expr, f.s) == 56);
  CHECK(standard_max(f.c.expr, f.s) == 320);
}

TEST_CASE("standard bounds of the six-term fixture") {
  SixTermFixture f;
  BoundsResult r = calculate_bounds_standard(f.c, f.s);
  REQUIRE(r.consistent);
  CHECK(upper_bounds(r) == std::vector<Value>{5, 5, 5, 10, 17, 38});
}

TEST_CASE("standard bounds, lower face") {
  DomainStore s;
  s.add_variable(FiniteDomain::interval(1, 5));
  s.add_variable(FiniteDomain::interval(1, 5));
  NormalizedLinear c;
  c.expr = LinearExpression::make({{1, 0}, {2, 1}});
  c.is_le = false;
  c.rhs = 12;
  BoundsResult r = calculate_bounds_standard(c, s);
  REQUIRE(r.consistent);
  REQUIRE(r.bounds.size() == 2);
  CHECK(!r.bounds[0].is_upper);
  CHECK(r.bounds[0].bound == 2);
  CHECK(!r.bounds[1].is_upper);
  CHECK(r.bounds[1].bound == 4);
}

TEST_CASE("standard bounds with a negative coefficient") {
  DomainStore s;
  s.add_variable(FiniteDomain::interval(0, 4));
  s.add_variable(FiniteDomain::interval(0, 3));
  NormalizedLinear c;
  c.expr = LinearExpression::make({{2, 0}, {-3, 1}});
  c.is_le = true;
  c.rhs = -8;
  BoundsResult r = calculate_bounds_standard(c, s);
  REQUIRE(r.consistent);
  CHECK(r.bounds[0].is_upper);
  CHECK(r.bounds[0].bound == 0);
  CHECK(!r.bounds[1].is_upper);
  CHECK(r.bounds[1].bound == 3);
}

TEST_CASE("standard inconsistency") {
  DomainStore s;
  s.add_variable(FiniteDomain::interval(1, 3));
  s.add_variable(FiniteDomain::interval(1, 3));
  NormalizedLinear c;
  c.expr = LinearExpression::make({{1, 0}, {1, 1}});
  c.rhs = 1;
  CHECK(!calculate_bounds_standard(c, s).consistent);
}

TEST_CASE("improved minimum of the six-term fixture") {
  SixTermFixture f;
  ImprovedMinResult r = calculate_improved_minimum(f.c.expr.terms, f.s);
  CHECK(r.value == 76);
  REQUIRE(r.matching.size() == 6);
  // sweep assigns x3=1, x2=2, x1=3, x4=4, x5=5, x6=9
  std::vector<VariableId> vars;
  std::vector<Value> vals;
  for (const auto& m : r.matching) {
    vars.push_back(m.var);
    vals.push_back(m.value);
  }
  CHECK(vars == std::vector<VariableId>{2, 1, 0, 3, 4, 5});
  CHECK(vals == std::vector<Value>{1, 2, 3, 4, 5, 9});
  using Opt = std::optional<std::uint32_t>;
  CHECK(r.next_index == std::vector<Opt>{2u, 2u, 3u, 4u, Opt{}, Opt{}});
}

TEST_CASE("improved minimum with uniform coefficients breaks ties by term") {
  DomainStore s;
  for (int i = 0; i < 3; ++i) s.add_variable(FiniteDomain::interval(1, 9));
  LinearExpression e = LinearExpression::make({{1, 0}, {1, 1}, {1, 2}});
  ImprovedMinResult r = calculate_improved_minimum(e.terms, s);
  CHECK(r.value == 6);
  CHECK(r.matching[0].var == 0);
  CHECK(r.matching[0].value == 1);
  CHECK(r.matching[1].var == 1);
  CHECK(r.matching[1].value == 2);
  CHECK(r.matching[2].var == 2);
  CHECK(r.matching[2].value == 3);
  using Opt = std::optional<std::uint32_t>;
  CHECK(r.next_index == std::vector<Opt>{1u, 2u, Opt{}});
}

TEST_CASE("improved minimum trivial shapes") {
  DomainStore s;
  s.add_variable(FiniteDomain::interval(3, 7));
  LinearExpression e = LinearExpression::make({{2, 0}});
  ImprovedMinResult r = calculate_improved_minimum(e.terms, s);
  CHECK(r.value == 6);
  REQUIRE(r.matching.size() == 1);
  CHECK(r.matching[0].value == 3);
  CHECK(!r.next_index[0].has_value());

  ImprovedMinResult empty = calculate_improved_minimum({}, s);
  CHECK(empty.value == 0);
  CHECK(empty.matching.empty());
}

TEST_CASE("improved maximum mirrors the sweep") {
  DomainStore s;
  s.add_variable(FiniteDomain::interval(1, 5));
  s.add_variable(FiniteDomain::interval(1, 5));
  LinearExpression e = LinearExpression::make({{1, 0}, {1, 1}});
  ImprovedMinResult r = calculate_improved_maximum(e.terms, s);
  CHECK(r.value == 9);
  CHECK(r.matching[0].var == 0);
  CHECK(r.matching[0].value == 5);
  CHECK(r.matching[1].var == 1);
  CHECK(r.matching[1].value == 4);

  DomainStore s2;
  s2.add_variable(FiniteDomain::interval(1, 5));
  LinearExpression e2 = LinearExpression::make({{2, 0}});
  CHECK(calculate_improved_maximum(e2.terms, s2).value == 10);
}

TEST_CASE("corrections and bounds of the six-term fixture") {
  SixTermFixture f;
  ImprovedMinResult r = calculate_improved_minimum(f.c.expr.terms, f.s);
  BoundsResult b = corrections_and_bounds(f.c.expr.terms, r, 85);
  REQUIRE(b.consistent);
  CHECK(b.corrections == std::vector<std::int64_t>{24, 28, 25, 18, 10, 9});
  // minimum with each term elided: value - correction
  std::vector<std::int64_t> elided;
  for (std::int64_t c : b.corrections) elided.push_back(r.value - c);
  CHECK(elided == std::vector<std::int64_t>{52, 48, 51, 58, 66, 67});
  CHECK(upper_bounds(b) == std::vector<Value>{5, 4, 4, 6, 9, 18});
}

TEST_CASE("partition extraction golden cases") {
  DomainStore s;
  for (int i = 0; i < 7; ++i) s.add_variable(FiniteDomain::interval(1, 10));

  SUBCASE("two disjoint covers plus a leftover singleton") {
    LinearExpression e = LinearExpression::make(
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    std::vector<AlldiffConstraint> ads = {{{0, 1, 2}}, {{4, 5, 6}}};
    PartitionSet p = find_partitions(e, ads);
    REQUIRE(p.groups.size() == 3);
    CHECK(p.groups[0].terms == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(p.groups[0].alldiff == 0u);
    CHECK(p.groups[1].terms == std::vector<std::uint32_t>{4, 5, 6});
    CHECK(p.groups[1].alldiff == 1u);
    CHECK(p.groups[2].terms == std::vector<std::uint32_t>{3});
    CHECK(!p.groups[2].alldiff.has_value());
  }

  SUBCASE("sign split with a negative singleton") {
    LinearExpression e = LinearExpression::make({{6, 0}, {8, 1}, {-7, 2}});
    std::vector<AlldiffConstraint> ads = {{{0, 1}}};
    PartitionSet p = find_partitions(e, ads);
    REQUIRE(p.groups.size() == 2);
    CHECK(p.groups[0].positive);
    CHECK(p.groups[0].terms == std::vector<std::uint32_t>{0, 1});
    CHECK(!p.groups[1].positive);
    CHECK(p.groups[1].terms == std::vector<std::uint32_t>{2});
  }

  SUBCASE("overlapping covers: earliest declared wins the tie") {
    LinearExpression e = LinearExpression::make({{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    std::vector<AlldiffConstraint> ads = {{{0, 1, 2}}, {{1, 2, 3}}};
    PartitionSet p = find_partitions(e, ads);
    REQUIRE(p.groups.size() == 2);
    CHECK(p.groups[0].terms == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(p.groups[0].alldiff == 0u);
    CHECK(p.groups[1].terms == std::vector<std::uint32_t>{3});
  }
}

TEST_CASE("general filtering splits budgets across groups") {
  // x1+..+x7 <= 15, alldifferent(x1,x2,x3), alldifferent(x5,x6,x7),
  // all domains 1..10: x4 <= 3 and every covered variable <= 5.
  DomainStore s;
  for (int i = 0; i < 7; ++i) s.add_variable(FiniteDomain::interval(1, 10));
  NormalizedLinear c;
  c.expr = LinearExpression::make(
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
  c.is_le = true;
  c.rhs = 15;
  std::vector<AlldiffConstraint> ads = {{{0, 1, 2}}, {{4, 5, 6}}};
  c.partitions = std::make_shared<PartitionSet>(find_partitions(c.expr, ads));

  BoundsResult r = calculate_bounds_improved_gen(c, s);
  REQUIRE(r.consistent);
  CHECK(upper_bounds(r) == std::vector<Value>{5, 5, 5, 3, 5, 5, 5});
}

namespace {

struct RandomPositiveCase {
  DomainStore s;
  LinearExpression e;
  std::vector<std::int64_t> coeffs;
  std::vector<Value> mins;
};

RandomPositiveCase make_positive_case(std::mt19937_64& rng, int max_vars = 8) {
  RandomPositiveCase c;
  std::uniform_int_distribution<int> nd(1, max_vars);
  int n = nd(rng);
  std::uniform_int_distribution<std::int64_t> coeff(1, 9);
  std::uniform_int_distribution<Value> base(-15, 15), off(0, 11), width(0, 8);
  Value b = base(rng);
  std::vector<Term> raw;
  for (int i = 0; i < n; ++i) {
    Value lo = b + off(rng);
    c.s.add_variable(FiniteDomain::interval(lo, lo + width(rng)));
    std::int64_t a = coeff(rng);
    raw.push_back({a, static_cast<VariableId>(i)});
    c.coeffs.push_back(a);
    c.mins.push_back(lo);
  }
  c.e = LinearExpression::make(std::move(raw));
  return c;
}

}  // namespace

TEST_CASE("improved minimum equals the exhaustive distinct minimum") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    RandomPositiveCase c = make_positive_case(rng);
    ImprovedMinResult r = calculate_improved_minimum(c.e.terms, c.s);
    REQUIRE(r.value == brute_min_distinct(c.coeffs, c.mins));
    REQUIRE(r.value >= standard_min(c.e, c.s));
    // structural invariants of the sweep
    for (std::size_t j = 0; j + 1 < r.matching.size(); ++j)
      REQUIRE(r.matching[j].value < r.matching[j + 1].value);
    for (std::size_t j = 0; j < r.next_index.size(); ++j)
      if (r.next_index[j]) REQUIRE(*r.next_index[j] > j);
  }
}

TEST_CASE("improved maximum equals the exhaustive distinct maximum") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 300; ++i) {
    RandomPositiveCase c = make_positive_case(rng);
    ImprovedMinResult r = calculate_improved_maximum(c.e.terms, c.s);
    std::vector<Value> neg_maxes;
    for (const Term& t : c.e.terms) neg_maxes.push_back(-c.s.domain(t.var).max());
    REQUIRE(r.value == -brute_min_distinct(c.coeffs, neg_maxes));
  }
}

TEST_CASE("corrections equal fresh sweeps on the elided expression") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 200; ++i) {
    RandomPositiveCase c = make_positive_case(rng);
    if (c.e.terms.size() < 2) continue;
    ImprovedMinResult r = calculate_improved_minimum(c.e.terms, c.s);
    std::vector<std::int64_t> corr = sweep_corrections(c.e.terms, r);
    for (std::size_t j = 0; j < r.matching.size(); ++j) {
      std::vector<Term> elided;
      for (std::size_t t = 0; t < c.e.terms.size(); ++t)
        if (t != r.matching[j].term) elided.push_back(c.e.terms[t]);
      ImprovedMinResult fresh = calculate_improved_minimum(elided, c.s);
      REQUIRE(r.value - corr[j] == fresh.value);
    }
  }
}

TEST_CASE("max-side corrections equal fresh sweeps on the elided expression") {
  std::mt19937_64 rng(104);
  for (int i = 0; i < 200; ++i) {
    RandomPositiveCase c = make_positive_case(rng);
    if (c.e.terms.size() < 2) continue;
    ImprovedMinResult r = calculate_improved_maximum(c.e.terms, c.s);
    std::vector<std::int64_t> corr = sweep_corrections(c.e.terms, r);
    for (std::size_t j = 0; j < r.matching.size(); ++j) {
      std::vector<Term> elided;
      for (std::size_t t = 0; t < c.e.terms.size(); ++t)
        if (t != r.matching[j].term) elided.push_back(c.e.terms[t]);
      ImprovedMinResult fresh = calculate_improved_maximum(elided, c.s);
      REQUIRE(r.value - corr[j] == fresh.value);
    }
  }
}

namespace {

struct MixedCase {
  DomainStore s;
  NormalizedLinear c;
  std::vector<AlldiffConstraint> ads;
};

MixedCase make_mixed_case(std::mt19937_64& rng, bool is_le) {
  MixedCase m;
  std::uniform_int_distribution<int> nd(1, 6);
  int n = nd(rng);
  std::uniform_int_distribution<std::int64_t> coeff(1, 5);
  std::uniform_int_distribution<Value> base(-6, 6), width(0, 7);
  std::vector<Term> raw;
  for (int i = 0; i < n; ++i) {
    Value lo = base(rng);
    m.s.add_variable(FiniteDomain::interval(lo, lo + width(rng)));
    std::int64_t a = coeff(rng) * (rng() % 2 ? 1 : -1);
    raw.push_back({a, static_cast<VariableId>(i)});
  }
  m.c.expr = LinearExpression::make(std::move(raw));
  m.c.is_le = is_le;
  // rhs near the feasible band so the filter actually bites
  std::int64_t lo = standard_min(m.c.expr, m.s), hi = standard_max(m.c.expr, m.s);
  m.c.rhs = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 3)) - 1;
  int nads = static_cast<int>(rng() % 3);
  for (int a = 0; a < nads; ++a) {
    AlldiffConstraint ad;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) ad.vars.push_back(static_cast<VariableId>(v));
    if (ad.vars.size() >= 2) m.ads.push_back(ad);
  }
  m.c.partitions = std::make_shared<PartitionSet>(find_partitions(m.c.expr, m.ads));
  return m;
}

}  // namespace

TEST_CASE("general filtering matches budgets derived from the oracle") {
  // For every face and sign mix, each emitted bound must equal
  // floor/ceil((rhs - sum of other groups' face values - elided own-group
  // value) / a), with all face values taken from the exhaustive oracle.
  std::mt19937_64 rng(105);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    bool is_le = i % 2 == 0;
    MixedCase m = make_mixed_case(rng, is_le);
    const auto& terms = m.c.expr.terms;
    if (terms.empty()) continue;

    const PartitionSet& parts = *m.c.partitions;
    auto face_value = [&](const std::vector<Term>& g, bool positive) -> std::int64_t {
      if (g.empty()) return 0;
      std::vector<std::int64_t> a;
      std::vector<Value> b;
      bool want_min_abs = is_le == positive;
      for (const Term& t : g) {
        a.push_back(t.coeff > 0 ? t.coeff : -t.coeff);
        b.push_back(want_min_abs ? m.s.domain(t.var).min()
                                 : -m.s.domain(t.var).max());
      }
      std::int64_t v = brute_min_distinct(a, b);
      if (!want_min_abs) v = -v;     // it was a maximum of |g|
      return positive ? v : -v;      // negative groups negate once more
    };

    std::vector<std::vector<Term>> gathered(parts.groups.size());
    std::vector<std::int64_t> value(parts.groups.size());
    std::int64_t total = 0;
    for (std::size_t g = 0; g < parts.groups.size(); ++g) {
      for (std::uint32_t t : parts.groups[g].terms) gathered[g].push_back(terms[t]);
      value[g] = face_value(gathered[g], parts.groups[g].positive);
      total += value[g];
    }

    BoundsResult got = calculate_bounds_improved_gen(m.c, m.s);
    bool feasible = is_le ? total <= m.c.rhs : total >= m.c.rhs;
    REQUIRE(got.consistent == feasible);
    if (!feasible) continue;

    for (std::size_t g = 0; g < parts.groups.size(); ++g) {
      std::int64_t budget = m.c.rhs - (total - value[g]);
      for (std::size_t k = 0; k < parts.groups[g].terms.size(); ++k) {
        std::uint32_t t = parts.groups[g].terms[k];
        std::vector<Term> rest;
        for (std::size_t k2 = 0; k2 < gathered[g].size(); ++k2)
          if (k2 != k) rest.push_back(gathered[g][k2]);
        std::int64_t elided = face_value(rest, parts.groups[g].positive);
        std::int64_t a = terms[t].coeff;
        std::int64_t num = budget - elided;
        bool upper = is_le == (a > 0);
        Value want = upper ? floor_div(num, a) : ceil_div(num, a);
        REQUIRE(got.bounds[t].is_upper == upper);
        REQUIRE(got.bounds[t].bound == want);
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("general filtering degenerates to the standard filter without covers") {
  std::mt19937_64 rng(106);
  for (int i = 0; i < 300; ++i) {
    MixedCase m = make_mixed_case(rng, i % 2 == 0);
    if (m.c.expr.terms.empty()) continue;
    m.ads.clear();
    m.c.partitions = std::make_shared<PartitionSet>(find_partitions(m.c.expr, m.ads));
    BoundsResult gen = calculate_bounds_improved_gen(m.c, m.s);
    BoundsResult std_ = calculate_bounds_standard(m.c, m.s);
    REQUIRE(gen.consistent == std_.consistent);
    if (!gen.consistent) continue;
    REQUIRE(gen.bounds.size() == std_.bounds.size());
    for (std::size_t k = 0; k < gen.bounds.size(); ++k) {
      REQUIRE(gen.bounds[k].is_upper == std_.bounds[k].is_upper);
      REQUIRE(gen.bounds[k].bound == std_.bounds[k].bound);
    }
  }
}

TEST_CASE("general filtering dominates the standard filter") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 400; ++i) {
    MixedCase m = make_mixed_case(rng, i % 2 == 0);
    if (m.c.expr.terms.empty()) continue;
    BoundsResult gen = calculate_bounds_improved_gen(m.c, m.s);
    BoundsResult std_ = calculate_bounds_standard(m.c, m.s);
    if (!std_.consistent) continue;  // the improved face value can only rise
    if (!gen.consistent) continue;   // strictly stronger: accepted
    for (std::size_t k = 0; k < gen.bounds.size(); ++k) {
      REQUIRE(gen.bounds[k].is_upper == std_.bounds[k].is_upper);
      if (gen.bounds[k].is_upper)
        REQUIRE(gen.bounds[k].bound <= std_.bounds[k].bound);
      else
        REQUIRE(gen.bounds[k].bound >= std_.bounds[k].bound);
    }
  }
}

TEST_SUITE_END();
