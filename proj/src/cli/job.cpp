#include "cisupport/cli/job.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "cisupport/exactalg/ideal.hpp"
#include "cisupport/exactalg/poly_text.hpp"

namespace cisupport {

const std::vector<std::string> kCommandNames{"resolve", "betti", "operators", "variety", "member", "restrict", "realize", "check"};

JobParseError::JobParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Item {
  std::string text;
  int column;  // 1-based
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits on top-level commas; `column` is the column of text[0].
std::vector<Item> split_list(const std::string& text, int column) {
  std::vector<Item> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  auto push = [&](std::size_t end) {
    std::string piece = text.substr(start, end - start);
    std::size_t lead = piece.find_first_not_of(" \t");
    if (lead == std::string::npos) lead = piece.size();
    out.push_back({trim(piece), column + static_cast<int>(start + lead)});
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      push(i);
      start = i + 1;
    }
  }
  push(text.size());
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

long long parse_int(const Item& it, int line, const char* what) {
  long long v = 0;
  const char* b = it.text.data();
  const char* e = b + it.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (it.text.empty() || ec != std::errc() || ptr != e) throw JobParseError(line, it.column, std::string("expected an integer ") + what);
  return v;
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  for (const auto& it : split_list(text, 1)) out.push_back(parse_int(it, 0, what));
  return out;
}

Poly parse_located(const PolyRing& R, const Item& it, int line) {
  if (it.text.empty()) throw JobParseError(line, it.column, "empty polynomial");
  try {
    return parse_poly(R, it.text);
  } catch (const PolyParseError& e) {
    throw JobParseError(line, it.column + e.column() - 1, e.what());
  } catch (const std::exception& e) {
    throw JobParseError(line, it.column, e.what());
  }
}

SubspaceSpec parse_subspace(const std::string& s) {
  // RxC:entries
  auto colon = s.find(':');
  auto x = s.find('x');
  if (colon == std::string::npos || x == std::string::npos || x > colon)
    throw std::invalid_argument("subspace must look like RxC:e11,e12,...");
  SubspaceSpec out;
  out.rows = std::stoi(s.substr(0, x));
  out.cols = std::stoi(s.substr(x + 1, colon - x - 1));
  out.entries = parse_int_list(s.substr(colon + 1), "in the subspace matrix");
  if (out.rows <= 0 || out.cols <= 0 || static_cast<int>(out.entries.size()) != out.rows * out.cols)
    throw std::invalid_argument("subspace matrix has " + std::to_string(out.entries.size()) + " entries, expected rows*cols");
  return out;
}

std::vector<std::string> split_cone(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (!trim(part).empty()) out.push_back(trim(part));
  if (out.empty()) throw std::invalid_argument("cone needs at least one polynomial");
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

void CommandSpec::merge(const CommandSpec& o) {
  if (!o.name.empty()) name = o.name;
  if (o.length) length = o.length;
  if (o.window) window = o.window;
  if (o.degree_bound) degree_bound = o.degree_bound;
  if (o.point) point = o.point;
  if (o.subspace) subspace = o.subspace;
  if (o.cone) cone = o.cone;
  if (o.seed) seed = o.seed;
  if (o.module) module = o.module;
  if (o.with) with = o.with;
  allow_unstable = allow_unstable || o.allow_unstable;
}

std::vector<std::string> tokenize_command(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote");
  if (any) out.push_back(cur);
  return out;
}

CommandSpec parse_command(const std::vector<std::string>& tokens, bool need_name) {
  CommandSpec c;
  std::size_t first = 0;
  if (!tokens.empty() && tokens[0].rfind("--", 0) != 0) {
    c.name = tokens[0];
    first = 1;
  }
  if (need_name && c.name.empty()) throw std::invalid_argument("missing command name");
  if (!c.name.empty() && std::find(kCommandNames.begin(), kCommandNames.end(), c.name) == kCommandNames.end())
    throw std::invalid_argument("unknown command '" + c.name + "'");

  CLI::App app{"command"};
  std::string point, subspace, cone;
  app.add_option("--length", c.length);
  app.add_option("--window", c.window);
  app.add_option("--degree-bound", c.degree_bound);
  auto* pt = app.add_option("--point", point);
  auto* ss = app.add_option("--subspace", subspace);
  auto* cn = app.add_option("--cone", cone);
  app.add_option("--seed", c.seed);
  app.add_option("--module", c.module);
  app.add_option("--with", c.with);
  app.add_flag("--allow-unstable", c.allow_unstable);
  std::vector<std::string> args(tokens.rbegin(), tokens.rend() - static_cast<std::ptrdiff_t>(first));
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  if (pt->count()) c.point = parse_int_list(point, "in the point");
  if (ss->count()) c.subspace = parse_subspace(subspace);
  if (cn->count()) c.cone = split_cone(cone);
  for (int* v : {c.length ? &*c.length : nullptr, c.window ? &*c.window : nullptr})
    if (v && *v < 0) throw std::invalid_argument("lengths and windows must be nonnegative");
  return c;
}

std::string render_command(const CommandSpec& c) {
  std::string s = c.name;
  auto add = [&](const std::string& t) { s += (s.empty() ? "" : " ") + t; };
  if (c.module) add("--module " + *c.module);
  if (c.with) add("--with " + *c.with);
  if (c.length) add("--length " + std::to_string(*c.length));
  if (c.window) add("--window " + std::to_string(*c.window));
  if (c.degree_bound) add("--degree-bound " + std::to_string(*c.degree_bound));
  if (c.point) {
    std::vector<std::string> v;
    for (auto a : *c.point) v.push_back(std::to_string(a));
    add("--point " + join(v, ","));
  }
  if (c.subspace) {
    std::vector<std::string> v;
    for (auto a : c.subspace->entries) v.push_back(std::to_string(a));
    add("--subspace " + std::to_string(c.subspace->rows) + "x" + std::to_string(c.subspace->cols) + ":" + join(v, ","));
  }
  if (c.cone) add("--cone \"" + join(*c.cone, ";") + "\"");
  if (c.seed) add("--seed " + std::to_string(*c.seed));
  if (c.allow_unstable) add("--allow-unstable");
  return s;
}

JobSpec parse_input(const std::string& text) {
  JobSpec job;
  enum class Sec { None, Field, Ring, Module, Command } sec = Sec::None;
  bool seen_field = false, seen_ring = false;
  int relations_line = 0, relations_col = 0, command_line = 0, command_col = 0;
  std::vector<Item> relation_items;
  struct ColumnSource {
    int line;
    std::vector<Item> items;
  };
  std::vector<std::vector<ColumnSource>> column_sources;
  std::vector<int> module_lines;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto lead = line.find_first_not_of(" \t");
    if (lead == std::string::npos) continue;
    const int col0 = static_cast<int>(lead) + 1;
    std::string body = trim(line);

    std::string head = body.substr(0, body.find_first_of(" \t"));
    if (head == "field" || head == "ring" || head == "module" || head == "command") {
      std::string rest = trim(body.substr(head.size()));
      if (head == "module") {
        if (!is_identifier(rest)) throw JobParseError(lineno, col0 + 7, "module section needs a name");
        for (const auto& m : job.modules)
          if (m.name == rest) throw JobParseError(lineno, col0 + 7, "duplicate module '" + rest + "'");
        job.modules.push_back(ModuleSpec{rest, false, {}, {}});
        column_sources.emplace_back();
        module_lines.push_back(lineno);
        sec = Sec::Module;
        continue;
      }
      if (!rest.empty()) throw JobParseError(lineno, col0 + static_cast<int>(head.size()) + 1, "unexpected text after section name");
      if (head == "field") {
        if (seen_field) throw JobParseError(lineno, col0, "duplicate field section");
        seen_field = true;
        sec = Sec::Field;
      } else if (head == "ring") {
        if (seen_ring) throw JobParseError(lineno, col0, "duplicate ring section");
        seen_ring = true;
        sec = Sec::Ring;
      } else {
        if (job.command) throw JobParseError(lineno, col0, "duplicate command section");
        job.command = CommandSpec{};
        sec = Sec::Command;
      }
      continue;
    }

    if (sec == Sec::None) throw JobParseError(lineno, col0, "expected a section header (field, ring, module <name>, command)");
    if (sec == Sec::Command) {
      if (!job.command->name.empty()) throw JobParseError(lineno, col0, "command section holds a single command line");
      try {
        *job.command = parse_command(tokenize_command(body));
      } catch (const std::exception& e) {
        throw JobParseError(lineno, col0, e.what());
      }
      command_line = lineno;
      command_col = col0;
      continue;
    }
    if (sec == Sec::Module && body == "residue") {
      auto& m = job.modules.back();
      if (!m.generators.empty() || !m.columns.empty()) throw JobParseError(lineno, col0, "residue cannot be combined with generators");
      m.residue = true;
      continue;
    }

    auto eq = body.find('=');
    if (eq == std::string::npos) throw JobParseError(lineno, col0, "expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    std::string value = body.substr(eq + 1);
    const int vcol = col0 + static_cast<int>(eq) + 1;
    auto items = split_list(value, vcol);

    if (sec == Sec::Field) {
      if (key != "p") throw JobParseError(lineno, col0, "unknown field key '" + key + "'");
      if (items.size() != 1) throw JobParseError(lineno, vcol, "expected one prime");
      long long p = parse_int(items[0], lineno, "for p");
      if (p < 2 || p > 32749 || !is_prime(static_cast<std::uint32_t>(p)))
        throw JobParseError(lineno, items[0].column, "p must be a prime below 32750");
      job.p = static_cast<std::uint32_t>(p);
    } else if (sec == Sec::Ring) {
      if (key == "vars") {
        for (const auto& it : items) {
          if (!is_identifier(it.text)) throw JobParseError(lineno, it.column, "invalid variable name '" + it.text + "'");
          if (std::find(job.vars.begin(), job.vars.end(), it.text) != job.vars.end())
            throw JobParseError(lineno, it.column, "duplicate variable '" + it.text + "'");
          job.vars.push_back(it.text);
        }
        if (job.vars.empty() || static_cast<int>(job.vars.size()) > kMaxVars)
          throw JobParseError(lineno, vcol, "between 1 and " + std::to_string(kMaxVars) + " variables required");
      } else if (key == "weights") {
        for (const auto& it : items) {
          long long w = parse_int(it, lineno, "weight");
          if (w < 1) throw JobParseError(lineno, it.column, "weights must be positive");
          job.weights.push_back(static_cast<int>(w));
        }
      } else if (key == "relations") {
        relation_items = items;
        relations_line = lineno;
        relations_col = vcol;
      } else {
        throw JobParseError(lineno, col0, "unknown ring key '" + key + "'");
      }
    } else {
      auto& m = job.modules.back();
      if (m.residue) throw JobParseError(lineno, col0, "residue module takes no further lines");
      if (key == "generators") {
        if (!m.generators.empty()) throw JobParseError(lineno, col0, "duplicate generators line");
        for (const auto& it : items) m.generators.push_back(static_cast<int>(parse_int(it, lineno, "generator degree")));
      } else if (key == "column") {
        column_sources.back().push_back({lineno, items});
      } else {
        throw JobParseError(lineno, col0, "unknown module key '" + key + "'");
      }
    }
  }

  if (!seen_field || job.p == 0) throw JobParseError(lineno + 1, 1, "missing field section with p");
  if (!seen_ring || job.vars.empty()) throw JobParseError(lineno + 1, 1, "missing ring section with vars");
  if (!job.weights.empty() && job.weights.size() != job.vars.size())
    throw JobParseError(lineno + 1, 1, "weights must match the number of variables");
  if (std::all_of(job.weights.begin(), job.weights.end(), [](int w) { return w == 1; })) job.weights.clear();
  if (relation_items.empty()) throw JobParseError(relations_line ? relations_line : lineno + 1, relations_col ? relations_col : 1,
                                                  "ring needs at least one relation");

  auto Q = std::make_shared<PolyRing>(Field(job.p), job.vars, job.weights);
  std::vector<Poly> fs;
  for (const auto& it : relation_items) {
    Poly f = parse_located(*Q, it, relations_line);
    if (f.is_zero() || !f.is_homogeneous()) throw JobParseError(relations_line, it.column, "relation is zero or not homogeneous");
    fs.push_back(f);
    job.relations.push_back(format_poly(*Q, f));
  }
  auto rep = check_regular_sequence(*Q, fs);
  if (!rep.regular)
    throw JobParseError(relations_line, relations_col + 1, "not a regular sequence in the square of the maximal ideal: " + rep.reason);

  for (std::size_t mi = 0; mi < job.modules.size(); ++mi) {
    auto& m = job.modules[mi];
    for (const auto& src : column_sources[mi]) {
      if (src.items.size() != m.generators.size())
        throw JobParseError(src.line, src.items.empty() ? 1 : src.items.front().column,
                            "column has " + std::to_string(src.items.size()) + " entries for " + std::to_string(m.generators.size()) +
                                " generators");
      std::vector<std::string> col;
      std::optional<int> degree;
      for (std::size_t i = 0; i < src.items.size(); ++i) {
        Poly e = parse_located(*Q, src.items[i], src.line);
        if (!e.is_zero()) {
          if (!e.is_homogeneous()) throw JobParseError(src.line, src.items[i].column, "non-homogeneous entry");
          int d = e.degree() + m.generators[i];
          if (degree && *degree != d) throw JobParseError(src.line, src.items[i].column, "non-homogeneous column (degree mismatch)");
          degree = d;
        }
        col.push_back(format_poly(*Q, e));
      }
      m.columns.push_back(std::move(col));
    }
  }

  if (job.command) {
    if (job.command->name.empty()) throw JobParseError(command_line ? command_line : lineno + 1, 1, "empty command section");
    auto& c = *job.command;
    for (const auto* ref : {c.module ? &*c.module : nullptr, c.with ? &*c.with : nullptr})
      if (ref && std::none_of(job.modules.begin(), job.modules.end(), [&](const ModuleSpec& m) { return m.name == *ref; }))
        throw JobParseError(command_line, command_col, "unknown module '" + *ref + "'");
    if (c.point && static_cast<int>(c.point->size()) != static_cast<int>(fs.size()))
      throw JobParseError(command_line, command_col, "point needs " + std::to_string(fs.size()) + " coordinates");
    if (c.subspace && c.subspace->cols != static_cast<int>(fs.size()))
      throw JobParseError(command_line, command_col, "subspace matrix needs " + std::to_string(fs.size()) + " columns");
    if (c.cone) {
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= fs.size(); ++i) names.push_back("chi" + std::to_string(i));
      PolyRing X(Field(job.p), names);
      for (auto& g : *c.cone) {
        try {
          Poly h = parse_poly(X, g);
          if (!h.is_homogeneous()) throw std::invalid_argument("cone polynomial '" + g + "' is not homogeneous");
          g = format_poly(X, h);
        } catch (const std::exception& e) {
          throw JobParseError(command_line, command_col, e.what());
        }
      }
    }
  }
  return job;
}

std::string render(const JobSpec& job) {
  std::string s = "field\n  p = " + std::to_string(job.p) + "\n\nring\n  vars = " + join(job.vars, ", ") + "\n";
  if (!job.weights.empty()) {
    std::vector<std::string> w;
    for (int v : job.weights) w.push_back(std::to_string(v));
    s += "  weights = " + join(w, ", ") + "\n";
  }
  s += "  relations = " + join(job.relations, ", ") + "\n";
  for (const auto& m : job.modules) {
    s += "\nmodule " + m.name + "\n";
    if (m.residue) {
      s += "  residue\n";
      continue;
    }
    if (!m.generators.empty()) {
      std::vector<std::string> g;
      for (int d : m.generators) g.push_back(std::to_string(d));
      s += "  generators = " + join(g, ", ") + "\n";
    }
    for (const auto& c : m.columns) s += "  column = " + join(c, ", ") + "\n";
  }
  if (job.command) s += "\ncommand\n  " + render_command(*job.command) + "\n";
  return s;
}

const GradedModule& JobContext::module(const std::string& name) const {
  for (const auto& [n, m] : modules)
    if (n == name) return m;
  throw std::invalid_argument("unknown module '" + name + "'");
}

JobContext materialize(const JobSpec& job) {
  auto Q = std::make_shared<PolyRing>(Field(job.p), job.vars, job.weights);
  std::vector<Poly> fs;
  for (const auto& r : job.relations) fs.push_back(parse_poly(*Q, r));
  JobContext ctx{CIRing(Q, fs), {}};
  for (const auto& m : job.modules) {
    if (m.residue) {
      ctx.modules.emplace_back(m.name, GradedModule::residue_field(ctx.ci.ring()));
      continue;
    }
    std::vector<int> cd;
    std::vector<std::vector<Poly>> cols;
    for (const auto& c : m.columns) {
      std::vector<Poly> col;
      int deg = 0;
      bool found = false;
      for (std::size_t i = 0; i < c.size(); ++i) {
        col.push_back(parse_poly(*Q, c[i]));
        if (!found && !col.back().is_zero()) {
          deg = col.back().degree() + m.generators[i];
          found = true;
        }
      }
      if (!found) continue;  // a zero column adds no relation
      cd.push_back(deg);
      cols.push_back(std::move(col));
    }
    PolyMatrix pm(m.generators, cd);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) pm.at(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
    ctx.modules.emplace_back(m.name, GradedModule(ctx.ci.ring(), std::move(pm)));
  }
  return ctx;
}

}  // namespace cisupport
