#include "core/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace adlin {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// `comments`: a '#' starts a comment running to the end of the line (off for
// kakuro boards, whose wall tokens begin with '#')
std::vector<std::string> tokenize(const std::string& line, bool comments = true) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || (comments && line[i] == '#')) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           !(comments && line[i] == '#'))
      ++i;
    out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, "expected integer, got '" + tok + "'");
  return v;
}

bool parse_rel(const std::string& tok, Rel& out) {
  if (tok == "<=") out = Rel::le;
  else if (tok == ">=") out = Rel::ge;
  else if (tok == "=") out = Rel::eq;
  else if (tok == "<") out = Rel::lt;
  else if (tok == ">") out = Rel::gt;
  else return false;
  return true;
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::le: return "<=";
    case Rel::ge: return ">=";
    case Rel::eq: return "=";
    case Rel::lt: return "<";
    case Rel::gt: return ">";
  }
  return "?";
}

}  // namespace

ProblemInstance parse_instance(std::istream& in) {
  ProblemInstance p;
  std::unordered_map<std::string, VariableId> ids;
  auto lookup = [&](const std::string& name, std::size_t line) {
    auto it = ids.find(name);
    if (it == ids.end()) fail(line, "unknown variable '" + name + "'");
    return it->second;
  };
  auto declare = [&](const std::string& name, FiniteDomain d, std::size_t line) {
    if (ids.count(name)) fail(line, "duplicate variable '" + name + "'");
    ids.emplace(name, static_cast<VariableId>(p.vars.size()));
    p.vars.push_back({name, std::move(d)});
  };

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];

    if (kind == "meta") {
      if (tok.size() != 3) fail(lineno, "meta needs a key and a value");
      p.meta[tok[1]] = tok[2];
    } else if (kind == "var") {
      if (tok.size() != 4) fail(lineno, "var needs a name and two bounds");
      Value lo = parse_int(tok[2], lineno), hi = parse_int(tok[3], lineno);
      if (lo > hi) fail(lineno, "empty interval for '" + tok[1] + "'");
      declare(tok[1], FiniteDomain::interval(lo, hi), lineno);
    } else if (kind == "varset") {
      if (tok.size() < 3) fail(lineno, "varset needs a name and at least one value");
      std::vector<Value> vals;
      for (std::size_t i = 2; i < tok.size(); ++i)
        vals.push_back(parse_int(tok[i], lineno));
      declare(tok[1], FiniteDomain::of_values(vals), lineno);
    } else if (kind == "alldifferent") {
      if (tok.size() < 2) fail(lineno, "alldifferent needs variables");
      AlldiffRecord r;
      for (std::size_t i = 1; i < tok.size(); ++i)
        r.vars.push_back(lookup(tok[i], lineno));
      p.constraints.push_back(std::move(r));
    } else if (kind == "linear") {
      if (tok.size() < 5 || tok.size() % 2 == 0)
        fail(lineno, "linear needs coeff/var pairs, a relation and a right side");
      std::vector<std::int64_t> coeffs;
      std::vector<VariableId> vars;
      std::size_t i = 1;
      Rel rel = Rel::le;
      while (i + 2 < tok.size()) {
        coeffs.push_back(parse_int(tok[i], lineno));
        vars.push_back(lookup(tok[i + 1], lineno));
        i += 2;
      }
      if (!parse_rel(tok[i], rel)) fail(lineno, "unknown relation '" + tok[i] + "'");
      std::int64_t rhs = parse_int(tok[i + 1], lineno);
      if (coeffs.empty()) fail(lineno, "linear needs at least one term");
      p.constraints.push_back(normalize_linear(coeffs, vars, rel, rhs));
    } else if (kind == "bound_or") {
      if (tok.size() < 4 || (tok.size() - 1) % 3 != 0)
        fail(lineno, "bound_or needs <var> <= <k> triples");
      BoundOrRecord r;
      for (std::size_t i = 1; i < tok.size(); i += 3) {
        if (tok[i + 1] != "<=") fail(lineno, "bound_or supports only <=");
        r.disjuncts.push_back(
            {lookup(tok[i], lineno), parse_int(tok[i + 2], lineno)});
      }
      p.constraints.push_back(std::move(r));
    } else {
      fail(lineno, "unknown record '" + kind + "'");
    }
  }

  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return p;
}

ProblemInstance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const ProblemInstance& p) {
  std::ostringstream out;
  for (const auto& [k, v] : p.meta) out << "meta " << k << ' ' << v << '\n';
  for (const VarDecl& v : p.vars) {
    const FiniteDomain& d = v.domain;
    if (d.size() == static_cast<std::size_t>(d.max() - d.min() + 1)) {
      out << "var " << v.name << ' ' << d.min() << ' ' << d.max() << '\n';
    } else {
      out << "varset " << v.name;
      for (Value val : d.values()) out << ' ' << val;
      out << '\n';
    }
  }
  for (const Constraint& c : p.constraints) {
    if (const auto* ad = std::get_if<AlldiffRecord>(&c)) {
      out << "alldifferent";
      for (VariableId v : ad->vars) out << ' ' << p.vars[v].name;
      out << '\n';
    } else if (const auto* lin = std::get_if<LinearRecord>(&c)) {
      out << "linear";
      for (std::size_t i = 0; i < lin->vars.size(); ++i)
        out << ' ' << lin->coeffs[i] << ' ' << p.vars[lin->vars[i]].name;
      out << ' ' << rel_text(lin->rel) << ' ' << lin->rhs << '\n';
    } else if (const auto* bo = std::get_if<BoundOrRecord>(&c)) {
      out << "bound_or";
      for (const auto& dj : bo->disjuncts)
        out << ' ' << p.vars[dj.var].name << " <= " << dj.bound;
      out << '\n';
    }
  }
  return out.str();
}

KakuroGrid parse_kakuro_grid(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    header = tokenize(raw, /*comments=*/false);
    if (!header.empty()) break;
  }
  if (header.empty() || header[0] != "kakuro")
    fail(lineno == 0 ? 1 : lineno, "expected 'kakuro <rows> <cols>' header");
  if (header.size() != 3 && !(header.size() == 4 && header[3] == "weighted"))
    fail(lineno, "expected 'kakuro <rows> <cols> [weighted]'");
  std::int64_t rows = parse_int(header[1], lineno);
  std::int64_t cols = parse_int(header[2], lineno);
  if (rows < 1 || cols < 1) fail(lineno, "board sides must be positive");

  KakuroGrid g;
  g.rows = static_cast<std::size_t>(rows);
  g.cols = static_cast<std::size_t>(cols);
  g.weighted = header.size() == 4;
  g.cells.assign(g.rows * g.cols, KakuroCell{});

  std::size_t cell = 0;
  while (cell < g.cells.size() && std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    for (const std::string& tok : tokenize(raw, /*comments=*/false)) {
      if (cell >= g.cells.size()) fail(lineno, "more cells than the header declares");
      KakuroCell& kc = g.cells[cell++];
      if (tok[0] == '#') {
        kc.wall = true;
        if (tok.size() > 1) {
          std::size_t slash = tok.find('/');
          if (slash == std::string::npos)
            fail(lineno, "wall clues must look like #<down>/<right>");
          std::string down = tok.substr(1, slash - 1);
          std::string right = tok.substr(slash + 1);
          if (down != "-") kc.down_clue = parse_int(down, lineno);
          if (right != "-") kc.right_clue = parse_int(right, lineno);
        }
      } else if (tok[0] == '.') {
        kc.wall = false;
        if (tok.size() > 1) kc.weight = parse_int(tok.substr(1), lineno);
        if (kc.weight < 1) fail(lineno, "cell weight must be positive");
      } else {
        fail(lineno, "unknown cell token '" + tok + "'");
      }
    }
  }
  if (cell != g.cells.size()) fail(lineno + 1, "fewer cells than the header declares");
  return g;
}

std::string serialize_kakuro_grid(const KakuroGrid& g) {
  std::ostringstream out;
  out << "kakuro " << g.rows << ' ' << g.cols << (g.weighted ? " weighted" : "")
      << '\n';
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.cols; ++c) {
      if (c > 0) out << ' ';
      const KakuroCell& kc = g.at(r, c);
      if (kc.wall) {
        out << '#';
        if (kc.down_clue || kc.right_clue) {
          if (kc.down_clue) out << *kc.down_clue;
          else out << '-';
          out << '/';
          if (kc.right_clue) out << *kc.right_clue;
          else out << '-';
        }
      } else {
        out << '.';
        if (g.weighted || kc.weight != 1) out << kc.weight;
      }
    }
    out << '\n';
  }
  return out.str();
}

CryptoPuzzle parse_crypto_words(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool seen_header = false;
  CryptoPuzzle p;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;
    if (!seen_header) {
      if (tok.size() != 1 || tok[0] != "crypto")
        fail(lineno, "expected 'crypto' header");
      seen_header = true;
      continue;
    }
    if (tok.size() != 2) fail(lineno, "expected '<word> <target>'");
    p.words.emplace_back(tok[0], parse_int(tok[1], lineno));
  }
  if (!seen_header) fail(lineno == 0 ? 1 : lineno, "expected 'crypto' header");
  if (p.words.empty()) fail(lineno, "word list is empty");
  return p;
}

std::string serialize_crypto_words(const CryptoPuzzle& p) {
  std::ostringstream out;
  out << "crypto\n";
  for (const auto& [word, target] : p.words)
    out << word << ' ' << target << '\n';
  return out.str();
}

}  // namespace adlin
