#include <cstdio>
#include <string>

#include "adlin.h"
#include "doctest.h"

TEST_SUITE_BEGIN("capi");

namespace {

const char* kTriple =
    "var x 1 9\n"
    "var y 1 9\n"
    "var z 1 9\n"
    "alldifferent x y z\n"
    "linear 1 x 1 y 1 z = 6\n";

adlin_problem* must_parse(const char* text) {
  adlin_problem* p = nullptr;
  REQUIRE(adlin_parse_string(text, &p) == ADLIN_OK);
  REQUIRE(p != nullptr);
  return p;
}

}  // namespace

TEST_CASE("version and default options") {
  CHECK(std::string(adlin_version()) == ADLIN_VERSION_STRING);

  adlin_options o;
  adlin_options_init(&o);
  CHECK(o.filter == ADLIN_FILTER_IMPROVED);
  CHECK(o.var_order == ADLIN_ORDER_LEX);
  CHECK(o.node_limit == 0);
  CHECK(o.time_limit_ms == 0);

  adlin_gen_options g;
  adlin_gen_options_init(&g);
  CHECK(g.size == 8);
  CHECK(g.seed == 1);
  CHECK(g.fill == doctest::Approx(0.5));
}

TEST_CASE("parse, inspect, solve, read the solution") {
  adlin_problem* p = must_parse(kTriple);
  CHECK(adlin_var_count(p) == 3);
  CHECK(std::string(adlin_var_name(p, 0)) == "x");
  CHECK(std::string(adlin_var_name(p, 2)) == "z");
  CHECK(adlin_var_name(p, 3) == nullptr);
  CHECK(adlin_meta(p, "family") == nullptr);

  adlin_result* r = nullptr;
  REQUIRE(adlin_solve(p, nullptr, &r) == ADLIN_OK);
  CHECK(adlin_result_status(r) == ADLIN_SAT);
  REQUIRE(adlin_result_value_count(r) == 3);
  int64_t v[3] = {};
  for (size_t i = 0; i < 3; ++i) CHECK(adlin_result_value(r, i, &v[i]) == ADLIN_OK);
  CHECK(v[0] + v[1] + v[2] == 6);
  CHECK(v[0] != v[1]);
  CHECK(v[1] != v[2]);
  CHECK(v[0] != v[2]);

  adlin_stats s;
  adlin_result_stats(r, &s);
  CHECK(s.decisions >= s.conflicts);
  CHECK(s.bounds_computed > 0);
  CHECK(s.bounds_improved <= s.bounds_computed);

  int64_t dummy;
  CHECK(adlin_result_value(r, 3, &dummy) == ADLIN_EINVAL);

  adlin_result_free(r);
  adlin_problem_free(p);
}

TEST_CASE("unsat and limit statuses") {
  adlin_problem* p = must_parse(
      "var x 1 2\nvar y 1 2\nalldifferent x y\nlinear 1 x 1 y = 5\n");
  adlin_result* r = nullptr;
  REQUIRE(adlin_solve(p, nullptr, &r) == ADLIN_OK);
  CHECK(adlin_result_status(r) == ADLIN_UNSAT);
  CHECK(adlin_result_value_count(r) == 0);
  adlin_result_free(r);
  adlin_problem_free(p);

  p = must_parse(kTriple);
  adlin_options o;
  adlin_options_init(&o);
  o.node_limit = 1;
  REQUIRE(adlin_solve(p, &o, &r) == ADLIN_OK);
  CHECK(adlin_result_status(r) == ADLIN_LIMIT);
  adlin_result_free(r);
  adlin_problem_free(p);
}

TEST_CASE("errors are reported with codes and messages") {
  adlin_problem* p = nullptr;
  CHECK(adlin_parse_string("var x 2 1\n", &p) == ADLIN_EPARSE);
  CHECK(std::string(adlin_last_error()).size() > 0);
  CHECK(adlin_parse_string(nullptr, &p) == ADLIN_EINVAL);
  CHECK(adlin_parse_file("/nonexistent/nothing.inst", &p) == ADLIN_EIO);

  p = must_parse(kTriple);
  adlin_options o;
  adlin_options_init(&o);
  o.filter = 42;
  adlin_result* r = nullptr;
  CHECK(adlin_solve(p, &o, &r) == ADLIN_EINVAL);
  CHECK(adlin_generate("sudoku", nullptr, &p) == ADLIN_EINVAL);
  adlin_problem_free(p);
}

TEST_CASE("native kakuro and crypto formats parse") {
  const char* board =
      "kakuro 2 4\n"
      "# #1/- #2/- #3/-\n"
      "#-/6 . . .\n";
  adlin_problem* p = nullptr;
  REQUIRE(adlin_parse_kakuro(board, &p) == ADLIN_OK);
  CHECK(adlin_var_count(p) == 3);
  CHECK(std::string(adlin_meta(p, "family")) == "kakuro");
  adlin_result* r = nullptr;
  REQUIRE(adlin_solve(p, nullptr, &r) == ADLIN_OK);
  CHECK(adlin_result_status(r) == ADLIN_SAT);
  adlin_result_free(r);
  adlin_problem_free(p);

  const char* words = "crypto\nab 3\nba 3\n";
  REQUIRE(adlin_parse_crypto(words, &p) == ADLIN_OK);
  CHECK(adlin_var_count(p) == 26);
  adlin_problem_free(p);

  CHECK(adlin_parse_kakuro("kakuro 1 1\n", &p) == ADLIN_EPARSE);
}

TEST_CASE("generation is deterministic and round-trips") {
  adlin_gen_options g;
  adlin_gen_options_init(&g);
  g.size = 8;
  g.seed = 7;

  for (const char* family : {"kakuro", "gen-kakuro", "crypto", "wqg", "magic"}) {
    adlin_gen_options local = g;
    if (std::string(family) == "magic") {
      local.size = 5;
      local.givens = 3;
    }
    if (std::string(family) == "wqg") local.size = 5;

    adlin_problem* a = nullptr;
    adlin_problem* b = nullptr;
    REQUIRE(adlin_generate(family, &local, &a) == ADLIN_OK);
    REQUIRE(adlin_generate(family, &local, &b) == ADLIN_OK);

    char* ta = nullptr;
    char* tb = nullptr;
    REQUIRE(adlin_serialize(a, &ta) == ADLIN_OK);
    REQUIRE(adlin_serialize(b, &tb) == ADLIN_OK);
    CHECK(std::string(ta) == std::string(tb));
    CHECK(std::string(adlin_meta(a, "seed")) == "7");

    adlin_problem* back = nullptr;
    REQUIRE(adlin_parse_string(ta, &back) == ADLIN_OK);
    CHECK(adlin_var_count(back) == adlin_var_count(a));

    adlin_string_free(ta);
    adlin_string_free(tb);
    adlin_problem_free(a);
    adlin_problem_free(b);
    adlin_problem_free(back);
  }
}

TEST_CASE("verification cross-checks the solver") {
  adlin_problem* p = must_parse(kTriple);
  int agree = -1;
  REQUIRE(adlin_verify(p, nullptr, &agree) == ADLIN_OK);
  CHECK(agree == 1);
  adlin_problem_free(p);

  p = must_parse("var x 1 2\nvar y 1 2\nalldifferent x y\nlinear 1 x 1 y = 5\n");
  REQUIRE(adlin_verify(p, nullptr, &agree) == ADLIN_OK);
  CHECK(agree == 1);
  adlin_problem_free(p);

  // 26 crypto letters blow the enumeration budget.
  adlin_gen_options g;
  adlin_gen_options_init(&g);
  CHECK(adlin_generate("crypto", &g, &p) == ADLIN_OK);
  CHECK(adlin_verify(p, nullptr, &agree) == ADLIN_EBUDGET);
  adlin_problem_free(p);
}

TEST_SUITE_END();
