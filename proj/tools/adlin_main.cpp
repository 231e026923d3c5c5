// Command-line front end: solve single instances, generate benchmark
// families, compare both filter strengths over a directory, and cross-check
// small instances against exhaustive enumeration. Talks to the solver
// exclusively through the public C API.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "adlin.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitSat = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnsat = 20;
constexpr int kExitLimit = 30;

// One solve run in reporting form. Wall time is the only field exempt from
// the byte-identical-output guarantee.
struct RunReport {
  std::string instance;
  std::string family = "-";
  std::string filter;
  std::string result;  // sat | unsat | limit | error
  std::int64_t wall_ms = 0;
  adlin_stats stats{};
  std::string error;
};

std::string percent_improved(const adlin_stats& s) {
  if (s.bounds_computed == 0) return "0.00";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f",
                100.0 * static_cast<double>(s.bounds_improved) /
                    static_cast<double>(s.bounds_computed));
  return buf;
}

std::string avg_improvement(const adlin_stats& s) {
  if (s.bounds_improved == 0) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f",
                static_cast<double>(s.improvement_total) /
                    static_cast<double>(s.bounds_improved));
  return buf;
}

const char* status_name(int status) {
  switch (status) {
    case ADLIN_SAT: return "sat";
    case ADLIN_UNSAT: return "unsat";
    case ADLIN_LIMIT: return "limit";
  }
  return "error";
}

const char* kCsvHeader =
    "instance,family,filter,result,wall_time_ms,decisions,conflicts,"
    "bounds_computed,bounds_improved,bounds_improved_percent,avg_improvement";

void print_csv_row(const RunReport& r) {
  std::cout << r.instance << ',' << r.family << ',' << r.filter << ','
            << r.result << ',' << r.wall_ms << ',' << r.stats.decisions << ','
            << r.stats.conflicts << ',' << r.stats.bounds_computed << ','
            << r.stats.bounds_improved << ',' << percent_improved(r.stats)
            << ',' << avg_improvement(r.stats) << '\n';
}

void print_text_report(const RunReport& r) {
  std::cout << "instance " << r.instance << '\n'
            << "family " << r.family << '\n'
            << "filter " << r.filter << '\n'
            << "result " << r.result << '\n'
            << "wall_time_ms " << r.wall_ms << '\n'
            << "decisions " << r.stats.decisions << '\n'
            << "conflicts " << r.stats.conflicts << '\n'
            << "bounds_computed " << r.stats.bounds_computed << '\n'
            << "bounds_improved " << r.stats.bounds_improved << '\n'
            << "bounds_improved_percent " << percent_improved(r.stats) << '\n'
            << "avg_improvement " << avg_improvement(r.stats) << '\n';
}

RunReport run_one(const adlin_problem* p, const std::string& id,
                  const adlin_options& opts, adlin_result** out_result) {
  RunReport rep;
  rep.instance = id;
  if (const char* fam = adlin_meta(p, "family")) rep.family = fam;
  rep.filter = opts.filter == ADLIN_FILTER_STANDARD ? "standard" : "improved";

  auto t0 = std::chrono::steady_clock::now();
  adlin_result* r = nullptr;
  int code = adlin_solve(p, &opts, &r);
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (code != ADLIN_OK) {
    rep.result = "error";
    rep.error = adlin_last_error();
    return rep;
  }
  rep.result = status_name(adlin_result_status(r));
  adlin_result_stats(r, &rep.stats);
  if (out_result)
    *out_result = r;
  else
    adlin_result_free(r);
  return rep;
}

struct CommonFlags {
  std::string filter = "improved";
  std::string var_order = "lex";
  std::uint64_t node_limit = 0;
  std::uint64_t time_limit_ms = 0;

  adlin_options to_options() const {
    adlin_options o;
    adlin_options_init(&o);
    o.filter = filter == "standard" ? ADLIN_FILTER_STANDARD : ADLIN_FILTER_IMPROVED;
    o.var_order = var_order == "min-domain" ? ADLIN_ORDER_MIN_DOMAIN : ADLIN_ORDER_LEX;
    o.node_limit = node_limit;
    o.time_limit_ms = time_limit_ms;
    return o;
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--filter", f.filter, "Linear filter strength")
      ->check(CLI::IsMember({"standard", "improved"}));
  cmd->add_option("--var-order", f.var_order, "Branching variable order")
      ->check(CLI::IsMember({"lex", "min-domain"}));
  cmd->add_option("--node-limit", f.node_limit, "Max decisions (0 = unlimited)");
  cmd->add_option("--time-limit-ms", f.time_limit_ms,
                  "Wall-clock budget in ms (0 = unlimited)");
}

int cmd_solve(const std::string& path, const CommonFlags& flags,
              const std::string& output) {
  adlin_problem* p = nullptr;
  if (adlin_parse_file(path.c_str(), &p) != ADLIN_OK) {
    std::cerr << "error: " << adlin_last_error() << '\n';
    return kExitUsage;
  }
  adlin_options opts = flags.to_options();
  adlin_result* r = nullptr;
  RunReport rep = run_one(p, fs::path(path).stem().string(), opts, &r);
  if (rep.result == "error") {
    std::cerr << "error: " << rep.error << '\n';
    adlin_problem_free(p);
    return kExitUsage;
  }

  if (output == "csv") {
    std::cout << kCsvHeader << '\n';
    print_csv_row(rep);
  } else {
    print_text_report(rep);
    if (adlin_result_status(r) == ADLIN_SAT) {
      std::cout << "solution\n";
      for (size_t i = 0; i < adlin_result_value_count(r); ++i) {
        int64_t v = 0;
        adlin_result_value(r, i, &v);
        std::cout << adlin_var_name(p, i) << " = " << v << '\n';
      }
    }
  }

  int status = adlin_result_status(r);
  adlin_result_free(r);
  adlin_problem_free(p);
  switch (status) {
    case ADLIN_SAT: return kExitSat;
    case ADLIN_UNSAT: return kExitUnsat;
    default: return kExitLimit;
  }
}

int cmd_compare(const std::string& dir, const CommonFlags& flags,
                unsigned jobs, const std::string& output) {
  std::error_code ec;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".inst" || ext == ".kakuro" || ext == ".crypto")
      files.push_back(entry.path());
  }
  if (ec) {
    std::cerr << "error: cannot read directory " << dir << '\n';
    return kExitUsage;
  }
  std::sort(files.begin(), files.end());

  // The dominance comparison is only exact under one fixed branching
  // order, so compare pins lex/ascending and varies just the filter.
  std::vector<RunReport> rows(files.size() * 2);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < files.size();
         i = next.fetch_add(1)) {
      adlin_problem* p = nullptr;
      std::string id = files[i].stem().string();
      if (adlin_parse_file(files[i].string().c_str(), &p) != ADLIN_OK) {
        for (int m = 0; m < 2; ++m) {
          rows[2 * i + m].instance = id;
          rows[2 * i + m].filter = m == 0 ? "standard" : "improved";
          rows[2 * i + m].result = "error";
          rows[2 * i + m].error = adlin_last_error();
        }
        continue;
      }
      for (int m = 0; m < 2; ++m) {
        CommonFlags f = flags;
        f.filter = m == 0 ? "standard" : "improved";
        f.var_order = "lex";
        rows[2 * i + m] = run_one(p, id, f.to_options(), nullptr);
      }
      adlin_problem_free(p);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  bool csv = output != "text";
  if (csv) std::cout << kCsvHeader << '\n';
  for (const RunReport& r : rows) {
    if (csv) {
      print_csv_row(r);
    } else {
      print_text_report(r);
      std::cout << '\n';
    }
  }

  // Aggregate per filter over the instances that ran cleanly: decisions,
  // conflicts and wall time become per-instance means; the bounds columns
  // stay totals so the percent and average columns are the overall ratios.
  for (int m = 0; m < 2; ++m) {
    RunReport agg;
    agg.instance = "aggregate";
    agg.filter = m == 0 ? "standard" : "improved";
    std::uint64_t n = 0;
    std::int64_t wall = 0;
    for (std::size_t i = m; i < rows.size(); i += 2) {
      const RunReport& r = rows[i];
      if (r.result == "error") continue;
      ++n;
      wall += r.wall_ms;
      agg.stats.decisions += r.stats.decisions;
      agg.stats.conflicts += r.stats.conflicts;
      agg.stats.bounds_computed += r.stats.bounds_computed;
      agg.stats.bounds_improved += r.stats.bounds_improved;
      agg.stats.improvement_total += r.stats.improvement_total;
    }
    agg.result = "mean";
    if (n > 0) {
      agg.stats.decisions /= n;
      agg.stats.conflicts /= n;
      agg.wall_ms = wall / static_cast<std::int64_t>(n);
    }
    if (csv) {
      print_csv_row(agg);
    } else {
      print_text_report(agg);
      if (m == 0) std::cout << '\n';
    }
  }
  return 0;
}

int cmd_gen(const std::string& family, std::uint64_t size, unsigned count,
            std::uint64_t seed, double fill, std::uint64_t givens,
            const std::string& out_dir) {
  for (unsigned k = 0; k < count; ++k) {
    adlin_gen_options g;
    adlin_gen_options_init(&g);
    g.size = size;
    g.seed = seed + k;
    g.fill = fill;
    g.givens = givens;

    adlin_problem* p = nullptr;
    if (adlin_generate(family.c_str(), &g, &p) != ADLIN_OK) {
      std::cerr << "error: " << adlin_last_error() << '\n';
      return kExitUsage;
    }
    char* text = nullptr;
    if (adlin_serialize(p, &text) != ADLIN_OK) {
      std::cerr << "error: " << adlin_last_error() << '\n';
      adlin_problem_free(p);
      return kExitUsage;
    }

    fs::path name = fs::path(out_dir) / (family + "-" + std::to_string(size) +
                                         "-" + std::to_string(seed) + "-" +
                                         std::to_string(k) + ".inst");
    std::ofstream out(name);
    if (!out) {
      std::cerr << "error: cannot write " << name.string() << '\n';
      adlin_string_free(text);
      adlin_problem_free(p);
      return kExitUsage;
    }
    out << text;
    adlin_string_free(text);
    adlin_problem_free(p);
    std::cout << name.string() << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& path, const CommonFlags& flags) {
  adlin_problem* p = nullptr;
  if (adlin_parse_file(path.c_str(), &p) != ADLIN_OK) {
    std::cerr << "error: " << adlin_last_error() << '\n';
    return kExitUsage;
  }
  adlin_options opts = flags.to_options();
  int agree = 0;
  int code = adlin_verify(p, &opts, &agree);
  adlin_problem_free(p);
  if (code != ADLIN_OK) {
    std::cerr << "error: " << adlin_last_error() << '\n';
    return kExitUsage;
  }
  std::cout << (agree ? "agree" : "disagree") << '\n';
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-domain solver for linear constraints mixed with "
               "alldifferent (version " ADLIN_VERSION_STRING ")"};
  app.require_subcommand(1);

  std::string path, dir, family, output = "text", out_dir = ".";
  CommonFlags solve_flags, compare_flags, verify_flags;
  std::uint64_t size = 8, seed = 1, givens = 0;
  unsigned count = 1, jobs = 1;
  double fill = 0.5;

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("path", path, "Instance (.inst/.kakuro/.crypto)")->required();
  add_common_flags(solve, solve_flags);
  solve->add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI::App* compare = app.add_subcommand(
      "compare", "Run both filters over a directory of instances");
  compare->add_option("dir", dir, "Directory of instances")->required();
  add_common_flags(compare, compare_flags);
  compare->add_option("--jobs", jobs, "Worker threads");
  compare->add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI::App* gen = app.add_subcommand("gen", "Write generated instance files");
  gen->add_option("family", family,
                  "kakuro | gen-kakuro | crypto | wqg | magic")
      ->required();
  gen->add_option("--size", size, "Side length / order");
  gen->add_option("--count", count, "Number of instances");
  gen->add_option("--seed", seed, "Base seed (file k uses seed+k)");
  gen->add_option("--fill", fill, "wqg: target fill ratio");
  gen->add_option("--givens", givens, "magic: revealed cells");
  gen->add_option("--out", out_dir, "Output directory");

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check one small instance against enumeration");
  verify->add_option("path", path, "Instance file")->required();
  add_common_flags(verify, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (solve->parsed()) return cmd_solve(path, solve_flags, output);
  if (compare->parsed()) return cmd_compare(dir, compare_flags, jobs, output);
  if (gen->parsed())
    return cmd_gen(family, size, count, seed, fill, givens, out_dir);
  if (verify->parsed()) return cmd_verify(path, verify_flags);
  return kExitUsage;
}
