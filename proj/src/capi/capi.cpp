#include "adlin.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>

#include "core/generate.hpp"
#include "core/io.hpp"
#include "core/oracles.hpp"
#include "core/search.hpp"

struct adlin_problem {
  adlin::ProblemInstance p;
};

struct adlin_result {
  adlin::SolveResult r;
};

namespace {

thread_local std::string t_error;

int fail(int code, std::string msg) {
  t_error = std::move(msg);
  return code;
}

// Runs `body` (which returns an ADLIN_* code) under the shared exception
// mapping, so every entry point reports errors the same way.
template <class F>
int guarded(F&& body) {
  try {
    int code = body();
    if (code == ADLIN_OK) t_error.clear();
    return code;
  } catch (const adlin::ParseError& e) {
    return fail(ADLIN_EPARSE, e.what());
  } catch (const adlin::OracleBudgetError& e) {
    return fail(ADLIN_EBUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ADLIN_EPARSE, e.what());
  } catch (const std::exception& e) {
    return fail(ADLIN_EINTERNAL, e.what());
  }
}

int wrap(adlin::ProblemInstance p, adlin_problem** out) {
  *out = new adlin_problem{std::move(p)};
  return ADLIN_OK;
}

}  // namespace

extern "C" {

const char* adlin_version(void) { return ADLIN_VERSION_STRING; }

const char* adlin_last_error(void) { return t_error.c_str(); }

int adlin_parse_string(const char* text, adlin_problem** out) {
  if (!text || !out) return fail(ADLIN_EINVAL, "null argument");
  return guarded([&] { return wrap(adlin::parse_instance_string(text), out); });
}

int adlin_parse_kakuro(const char* text, adlin_problem** out) {
  if (!text || !out) return fail(ADLIN_EINVAL, "null argument");
  return guarded([&] {
    std::istringstream in(text);
    return wrap(adlin::encode_kakuro(adlin::parse_kakuro_grid(in)), out);
  });
}

int adlin_parse_crypto(const char* text, adlin_problem** out) {
  if (!text || !out) return fail(ADLIN_EINVAL, "null argument");
  return guarded([&] {
    std::istringstream in(text);
    return wrap(adlin::encode_crypto(adlin::parse_crypto_words(in)), out);
  });
}

int adlin_parse_file(const char* path, adlin_problem** out) {
  if (!path || !out) return fail(ADLIN_EINVAL, "null argument");
  return guarded([&]() -> int {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(ADLIN_EIO, std::string("cannot read ") + path);
    std::ostringstream text;
    text << in.rdbuf();
    std::string s = text.str();
    std::string_view name(path);
    if (name.ends_with(".kakuro")) return adlin_parse_kakuro(s.c_str(), out);
    if (name.ends_with(".crypto")) return adlin_parse_crypto(s.c_str(), out);
    return adlin_parse_string(s.c_str(), out);
  });
}

void adlin_problem_free(adlin_problem* p) { delete p; }

size_t adlin_var_count(const adlin_problem* p) {
  return p ? p->p.vars.size() : 0;
}

const char* adlin_var_name(const adlin_problem* p, size_t i) {
  if (!p || i >= p->p.vars.size()) return nullptr;
  return p->p.vars[i].name.c_str();
}

const char* adlin_meta(const adlin_problem* p, const char* key) {
  if (!p || !key) return nullptr;
  auto it = p->p.meta.find(key);
  return it == p->p.meta.end() ? nullptr : it->second.c_str();
}

int adlin_serialize(const adlin_problem* p, char** out) {
  if (!p || !out) return fail(ADLIN_EINVAL, "null argument");
  return guarded([&]() -> int {
    std::string text = adlin::serialize_instance(p->p);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) return fail(ADLIN_EINTERNAL, "out of memory");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return ADLIN_OK;
  });
}

void adlin_string_free(char* s) { std::free(s); }

void adlin_options_init(adlin_options* o) {
  if (!o) return;
  o->filter = ADLIN_FILTER_IMPROVED;
  o->var_order = ADLIN_ORDER_LEX;
  o->node_limit = 0;
  o->time_limit_ms = 0;
}

namespace {

int to_config(const adlin_options* opts, adlin::SolverConfig& cfg) {
  adlin_options defaults;
  adlin_options_init(&defaults);
  if (!opts) opts = &defaults;
  switch (opts->filter) {
    case ADLIN_FILTER_STANDARD: cfg.filter = adlin::FilterMode::standard; break;
    case ADLIN_FILTER_IMPROVED: cfg.filter = adlin::FilterMode::improved; break;
    default: return fail(ADLIN_EINVAL, "bad filter value");
  }
  switch (opts->var_order) {
    case ADLIN_ORDER_LEX: cfg.var_order = adlin::VarOrder::lex; break;
    case ADLIN_ORDER_MIN_DOMAIN: cfg.var_order = adlin::VarOrder::min_domain; break;
    default: return fail(ADLIN_EINVAL, "bad var_order value");
  }
  if (opts->node_limit) cfg.node_limit = opts->node_limit;
  if (opts->time_limit_ms) cfg.time_limit_ms = opts->time_limit_ms;
  return ADLIN_OK;
}

}  // namespace

int adlin_solve(const adlin_problem* p, const adlin_options* opts,
                adlin_result** out) {
  if (!p || !out) return fail(ADLIN_EINVAL, "null argument");
  adlin::SolverConfig cfg;
  if (int code = to_config(opts, cfg); code != ADLIN_OK) return code;
  return guarded([&] {
    *out = new adlin_result{adlin::solve(p->p, cfg)};
    return ADLIN_OK;
  });
}

int adlin_result_status(const adlin_result* r) {
  if (!r) return ADLIN_UNSAT;
  switch (r->r.status) {
    case adlin::SolveStatus::sat: return ADLIN_SAT;
    case adlin::SolveStatus::unsat: return ADLIN_UNSAT;
    case adlin::SolveStatus::limit: return ADLIN_LIMIT;
  }
  return ADLIN_UNSAT;
}

size_t adlin_result_value_count(const adlin_result* r) {
  return r ? r->r.assignment.size() : 0;
}

int adlin_result_value(const adlin_result* r, size_t i, int64_t* out) {
  if (!r || !out || i >= r->r.assignment.size())
    return fail(ADLIN_EINVAL, "value index out of range");
  *out = r->r.assignment[i];
  return ADLIN_OK;
}

void adlin_result_stats(const adlin_result* r, adlin_stats* out) {
  if (!r || !out) return;
  const adlin::SearchStats& s = r->r.stats;
  out->decisions = s.decisions;
  out->conflicts = s.conflicts;
  out->bounds_computed = s.bounds_computed;
  out->bounds_improved = s.bounds_improved;
  out->improvement_total = s.improvement_total;
}

void adlin_result_free(adlin_result* r) { delete r; }

void adlin_gen_options_init(adlin_gen_options* o) {
  if (!o) return;
  o->size = 8;
  o->seed = 1;
  o->fill = 0.5;
  o->givens = 0;
  o->weighted = 0;
}

int adlin_generate(const char* family, const adlin_gen_options* opts,
                   adlin_problem** out) {
  if (!family || !out) return fail(ADLIN_EINVAL, "null argument");
  adlin_gen_options defaults;
  adlin_gen_options_init(&defaults);
  if (!opts) opts = &defaults;
  const std::string f(family);
  return guarded([&]() -> int {
    adlin::ProblemInstance p;
    std::size_t size = static_cast<std::size_t>(opts->size);
    if (f == "kakuro" || f == "gen-kakuro") {
      bool weighted = f == "gen-kakuro" || opts->weighted != 0;
      p = adlin::encode_kakuro(
          adlin::gen_kakuro(size, size, opts->seed, weighted).grid);
    } else if (f == "crypto") {
      p = adlin::encode_crypto(adlin::gen_crypto(opts->seed).puzzle);
    } else if (f == "wqg") {
      p = adlin::encode_wqg(adlin::gen_wqg(size, opts->fill, opts->seed).puzzle);
    } else if (f == "magic") {
      adlin::GeneratedMagic m =
          adlin::gen_magic(size, static_cast<std::size_t>(opts->givens), opts->seed);
      p = adlin::encode_magic(m.order, m.givens);
    } else {
      return fail(ADLIN_EINVAL, "unknown family: " + f);
    }
    p.meta["seed"] = std::to_string(opts->seed);
    return wrap(std::move(p), out);
  });
}

int adlin_verify(const adlin_problem* p, const adlin_options* opts,
                 int* out_agree) {
  if (!p || !out_agree) return fail(ADLIN_EINVAL, "null argument");
  adlin::SolverConfig cfg;
  if (int code = to_config(opts, cfg); code != ADLIN_OK) return code;
  return guarded([&]() -> int {
    std::vector<std::vector<adlin::Value>> all = adlin::brute_solutions(p->p);
    adlin::SolveResult r = adlin::solve(p->p, cfg);
    if (r.status == adlin::SolveStatus::limit)
      return fail(ADLIN_EINVAL, "solve hit a limit; verification inconclusive");
    bool sat = r.status == adlin::SolveStatus::sat;
    bool agree = sat == !all.empty();
    if (agree && sat)
      agree = std::find(all.begin(), all.end(), r.assignment) != all.end();
    *out_agree = agree ? 1 : 0;
    return ADLIN_OK;
  });
}

}  // extern "C"
