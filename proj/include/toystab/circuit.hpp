// Copyright 2026 The toystab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOYSTAB_CIRCUIT_HPP
#define TOYSTAB_CIRCUIT_HPP

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "toystab/measurement.hpp"
#include "toystab/transform.hpp"

namespace toystab {

enum class Mode { toy, qubit };

/// Sign-and-letters literal, independent of the phase algebra.
struct ObsLiteral {
  CheckVector cv;
  bool negative = false;

  template <typename K>
  Observable<K> as() const {
    return Observable<K>(cv, negative ? K::phase_modulus / 2 : 0);
  }

  std::string text() const {
    std::string out(negative ? "-" : "+");
    for (size_t k = 0; k < cv.num_systems(); ++k) {
      out += letter_char(cv.letter(k));
    }
    return out;
  }

  bool operator==(const ObsLiteral&) const = default;
};

struct Statement {
  enum class Kind { state_decl, gate, measure, expect };

  Kind kind;
  size_t line = 0;
  std::vector<ObsLiteral> observables;  // state: 1+; measure/expect: exactly 1
  std::string gate_name;                // gate only
  std::vector<size_t> sites;            // gate only, 0-based
  std::optional<ElementaryPermutation> perm;  // gate_name == "perm"

  bool operator==(const Statement&) const = default;
};

/// Parsed circuit: header (mode + system count) plus ordered statements.
struct Program {
  Mode mode = Mode::toy;
  size_t n = 0;
  std::vector<Statement> statements;

  bool operator==(const Program&) const = default;
};

struct ParseError : Error {
  size_t line;
  size_t column;

  ParseError(size_t line_in, size_t column_in, const std::string& message)
      : Error("parse error at line " + std::to_string(line_in) + ", column " +
              std::to_string(column_in) + ": " + message),
        line(line_in),
        column(column_in) {}
};

struct RunError : Error {
  size_t statement;

  RunError(size_t statement_in, const std::string& message)
      : Error("runtime error at statement " + std::to_string(statement_in + 1) +
              ": " + message),
        statement(statement_in) {}
};

namespace detail {

struct Token {
  std::string_view text;
  size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') {
      break;
    }
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline uint64_t parse_number(const Token& tok, size_t line) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(),
                                   tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column,
                     "expected a number, got \"" + std::string(tok.text) +
                         "\"");
  }
  return value;
}

}  // namespace detail

/// Parses the line-oriented circuit source. Grammar, one statement per
/// line, `#` comments, blank lines ignored:
///
///   mode toy|qubit
///   systems N
///   state OBS+                      one or more observable literals
///   gate NAME ARGS                  NAME in {x,z,h,s,cnot,cz}, 1-based sites
///   gate perm K (CYCLES)            toy mode, single system
///   measure OBS
///   expect OBS
///
/// OBS is SIGN? LETTER{n} with SIGN in {+,-} (default +), letters I,X,Y,Z.
inline Program parse_program(std::string_view source) {
  Program program;
  bool saw_mode = false;
  bool saw_systems = false;
  size_t line_no = 0;
  size_t start = 0;
  while (start <= source.size()) {
    size_t end = source.find('\n', start);
    std::string_view line = source.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    ++line_no;
    auto tokens = detail::tokenize_line(line);
    if (end == std::string_view::npos) {
      start = source.size() + 1;
    } else {
      start = end + 1;
    }
    if (tokens.empty()) {
      continue;
    }
    std::string_view directive = tokens[0].text;

    auto expect_args = [&](size_t count, const char* what) {
      if (tokens.size() != count + 1) {
        throw ParseError(line_no, tokens[0].column,
                         std::string(what) + " expects " +
                             std::to_string(count) + " argument(s)");
      }
    };
    auto parse_obs = [&](const detail::Token& tok) {
      try {
        // Parse through the toy algebra; the literal itself is unsigned of
        // any algebra.
        ToyObservable obs = parse_observable<ToyKind>(tok.text, program.n);
        return ObsLiteral{obs.cv, obs.phase != 0};
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, tok.column, e.what());
      }
    };
    auto parse_site = [&](const detail::Token& tok) {
      uint64_t value = detail::parse_number(tok, line_no);
      if (value < 1 || value > program.n) {
        throw ParseError(line_no, tok.column,
                         "system index " + std::to_string(value) +
                             " out of range 1.." + std::to_string(program.n));
      }
      return static_cast<size_t>(value - 1);
    };
    auto require_header = [&]() {
      if (!saw_mode || !saw_systems) {
        throw ParseError(line_no, tokens[0].column,
                         "mode and systems lines must precede statements");
      }
    };

    if (directive == "mode") {
      if (saw_mode) {
        throw ParseError(line_no, tokens[0].column, "duplicate mode line");
      }
      if (saw_systems) {
        throw ParseError(line_no, tokens[0].column,
                         "mode line must precede the systems line");
      }
      expect_args(1, "mode");
      if (tokens[1].text == "toy") {
        program.mode = Mode::toy;
      } else if (tokens[1].text == "qubit") {
        program.mode = Mode::qubit;
      } else {
        throw ParseError(line_no, tokens[1].column,
                         "mode must be toy or qubit");
      }
      saw_mode = true;
    } else if (directive == "systems") {
      if (!saw_mode) {
        throw ParseError(line_no, tokens[0].column,
                         "systems line must follow the mode line");
      }
      if (saw_systems) {
        throw ParseError(line_no, tokens[0].column, "duplicate systems line");
      }
      expect_args(1, "systems");
      uint64_t n = detail::parse_number(tokens[1], line_no);
      if (n < 1 || n > 1000000) {
        throw ParseError(line_no, tokens[1].column,
                         "system count must be in 1..1000000");
      }
      program.n = static_cast<size_t>(n);
      saw_systems = true;
    } else if (directive == "state") {
      require_header();
      if (tokens.size() < 2) {
        throw ParseError(line_no, tokens[0].column,
                         "state expects at least one observable");
      }
      Statement stmt;
      stmt.kind = Statement::Kind::state_decl;
      stmt.line = line_no;
      for (size_t i = 1; i < tokens.size(); ++i) {
        stmt.observables.push_back(parse_obs(tokens[i]));
      }
      program.statements.push_back(std::move(stmt));
    } else if (directive == "gate") {
      require_header();
      if (tokens.size() < 2) {
        throw ParseError(line_no, tokens[0].column, "gate expects a name");
      }
      Statement stmt;
      stmt.kind = Statement::Kind::gate;
      stmt.line = line_no;
      stmt.gate_name = std::string(tokens[1].text);
      if (stmt.gate_name == "perm") {
        if (program.mode != Mode::toy) {
          throw ParseError(line_no, tokens[1].column,
                           "gate perm is only available in toy mode");
        }
        expect_args(3, "gate perm");
        stmt.sites.push_back(parse_site(tokens[2]));
        try {
          stmt.perm = ElementaryPermutation::from_cycles(tokens[3].text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, tokens[3].column, e.what());
        }
      } else if (stmt.gate_name == "x" || stmt.gate_name == "z" ||
                 stmt.gate_name == "h" || stmt.gate_name == "s") {
        expect_args(2, "gate");
        stmt.sites.push_back(parse_site(tokens[2]));
      } else if (stmt.gate_name == "cnot" || stmt.gate_name == "cz") {
        expect_args(3, "gate");
        stmt.sites.push_back(parse_site(tokens[2]));
        stmt.sites.push_back(parse_site(tokens[3]));
        if (stmt.sites[0] == stmt.sites[1]) {
          throw ParseError(line_no, tokens[3].column,
                           stmt.gate_name + " expects two distinct systems");
        }
      } else {
        throw ParseError(line_no, tokens[1].column,
                         "unknown gate \"" + stmt.gate_name + "\"");
      }
      program.statements.push_back(std::move(stmt));
    } else if (directive == "measure" || directive == "expect") {
      require_header();
      expect_args(1, directive == "measure" ? "measure" : "expect");
      Statement stmt;
      stmt.kind = directive == "measure" ? Statement::Kind::measure
                                         : Statement::Kind::expect;
      stmt.line = line_no;
      stmt.observables.push_back(parse_obs(tokens[1]));
      program.statements.push_back(std::move(stmt));
    } else {
      throw ParseError(line_no, tokens[0].column,
                       "unknown directive \"" + std::string(directive) +
                           "\"");
    }
  }
  if (!saw_mode || !saw_systems) {
    throw ParseError(line_no, 1, "program needs mode and systems lines");
  }
  return program;
}

/// Canonical source form; parse_program(format_program(p)) == p.
inline std::string format_program(const Program& p) {
  std::string out;
  out += "mode ";
  out += p.mode == Mode::toy ? "toy" : "qubit";
  out += "\nsystems " + std::to_string(p.n) + "\n";
  for (const Statement& stmt : p.statements) {
    switch (stmt.kind) {
      case Statement::Kind::state_decl:
        out += "state";
        for (const ObsLiteral& obs : stmt.observables) {
          out += " " + obs.text();
        }
        break;
      case Statement::Kind::gate:
        out += "gate " + stmt.gate_name;
        for (size_t site : stmt.sites) {
          out += " " + std::to_string(site + 1);
        }
        if (stmt.perm) {
          out += " " + stmt.perm->to_cycles();
        }
        break;
      case Statement::Kind::measure:
        out += "measure " + stmt.observables[0].text();
        break;
      case Statement::Kind::expect:
        out += "expect " + stmt.observables[0].text();
        break;
    }
    out += "\n";
  }
  return out;
}

struct TraceEntry {
  size_t statement = 0;           // index into Program::statements
  std::optional<int> value;       // measure: +-1; expect: -1/0/+1
  /// Canonical generators after the statement; only recorded on request.
  std::optional<std::vector<std::string>> generators_after;

  bool operator==(const TraceEntry&) const = default;
};

struct Trace {
  std::vector<TraceEntry> entries;

  bool operator==(const Trace&) const = default;
};

struct RunOptions {
  /// Record canonical generators after every statement (the --trace view).
  bool record_states = false;
};

namespace detail {

/// Per-site conjugation table compiled from a 1- or 2-system transformation.
/// Entry index packs the generator's bits at the touched sites; applying a
/// gate is then O(1) per generator.
template <typename K>
struct CompiledGate {
  bool two_site = false;
  size_t site_a = 0;
  size_t site_b = 0;
  struct Entry {
    uint8_t bits = 0;
    uint8_t phase_add = 0;
  };
  std::array<Entry, 16> table{};

  static CompiledGate compile(const Transformation<K>& local, size_t a,
                              std::optional<size_t> b) {
    CompiledGate out;
    out.site_a = a;
    out.two_site = b.has_value();
    out.site_b = b.value_or(0);
    size_t span = out.two_site ? 2 : 1;
    size_t combos = out.two_site ? 16 : 4;
    for (size_t idx = 0; idx < combos; ++idx) {
      CheckVector cv(span);
      cv.set_x(0, idx & 1);
      cv.set_z(0, idx & 2);
      if (out.two_site) {
        cv.set_x(1, idx & 4);
        cv.set_z(1, idx & 8);
      }
      Observable<K> image = local.apply(Observable<K>(cv, 0));
      uint8_t bits = static_cast<uint8_t>(
          (image.cv.x_bit(0) ? 1 : 0) | (image.cv.z_bit(0) ? 2 : 0) |
          (out.two_site && image.cv.x_bit(1) ? 4 : 0) |
          (out.two_site && image.cv.z_bit(1) ? 8 : 0));
      out.table[idx] = {bits, image.phase};
    }
    return out;
  }

  void apply(Observable<K>& g) const {
    size_t idx = (g.cv.x_bit(site_a) ? 1 : 0) | (g.cv.z_bit(site_a) ? 2 : 0);
    if (two_site) {
      idx |= (g.cv.x_bit(site_b) ? 4 : 0) | (g.cv.z_bit(site_b) ? 8 : 0);
    }
    const Entry& e = table[idx];
    g.cv.set_x(site_a, e.bits & 1);
    g.cv.set_z(site_a, e.bits & 2);
    if (two_site) {
      g.cv.set_x(site_b, e.bits & 4);
      g.cv.set_z(site_b, e.bits & 8);
    }
    g.phase = static_cast<uint8_t>((g.phase + e.phase_add) % K::phase_modulus);
  }
};

/// Builds the local 1- or 2-system transformation named by a gate statement.
template <typename K>
Transformation<K> local_gate(const Statement& stmt) {
  const std::string& name = stmt.gate_name;
  if (name == "x") {
    return gate_x<K>(1, 0);
  }
  if (name == "z") {
    return gate_z<K>(1, 0);
  }
  if (name == "h") {
    return gate_h<K>(1, 0);
  }
  if (name == "s") {
    return gate_s<K>(1, 0);
  }
  if (name == "cnot") {
    return gate_cnot<K>(2, 0, 1);
  }
  if (name == "cz") {
    return gate_cz<K>(2, 0, 1);
  }
  if constexpr (std::is_same_v<K, ToyKind>) {
    if (name == "perm") {
      return gate_perm(1, 0, *stmt.perm);
    }
  }
  throw std::logic_error("unreachable gate name " + name);
}

/// Statement-by-statement interpreter. The working generator list is kept
/// non-canonical; canonical states are materialized only on request.
template <typename K>
class Executor {
 public:
  Executor(size_t n, std::optional<uint64_t> seed) : n_(n) {
    if (seed) {
      rng_.emplace(*seed);
    }
  }

  std::optional<int> execute(const Statement& stmt, size_t index) {
    switch (stmt.kind) {
      case Statement::Kind::state_decl: {
        std::vector<Observable<K>> gens;
        gens.reserve(stmt.observables.size());
        for (const ObsLiteral& lit : stmt.observables) {
          gens.push_back(lit.template as<K>());
        }
        if (auto violation = validate_generators<K>(gens)) {
          throw RunError(index, "invalid state declaration: " +
                                    violation->describe());
        }
        gens_ = std::move(gens);
        return std::nullopt;
      }
      case Statement::Kind::gate: {
        require_state(index);
        auto local = local_gate<K>(stmt);
        auto compiled = CompiledGate<K>::compile(
            local, stmt.sites[0],
            stmt.sites.size() > 1 ? std::optional<size_t>(stmt.sites[1])
                                  : std::nullopt);
        for (Observable<K>& g : *gens_) {
          compiled.apply(g);
        }
        return std::nullopt;
      }
      case Statement::Kind::measure: {
        require_state(index);
        if constexpr (std::is_same_v<K, QubitKind>) {
          throw RunError(index,
                         "measure is not available in qubit mode "
                         "(use expect)");
        } else {
          Observable<K> g = stmt.observables[0].template as<K>();
          try {
            return detail::measure_in_place(
                *gens_, g, rng_ ? &*rng_ : nullptr);
          } catch (const SeedRequired& e) {
            throw RunError(index, e.what());
          }
        }
      }
      case Statement::Kind::expect: {
        require_state(index);
        return expectation(state(), stmt.observables[0].template as<K>());
      }
    }
    throw std::logic_error("unreachable statement kind");
  }

  StabilizerState<K> state() const {
    if (!gens_) {
      throw std::logic_error("no state declared");
    }
    return StabilizerState<K>(n_, *gens_);
  }

  bool has_state() const { return gens_.has_value(); }

 private:
  void require_state(size_t index) const {
    if (!gens_) {
      throw RunError(index, "no state declared yet");
    }
  }

  size_t n_;
  std::optional<std::vector<Observable<K>>> gens_;
  std::optional<Rng> rng_;
};

template <typename K>
Trace run_typed(const Program& p, std::optional<uint64_t> seed,
                const RunOptions& opts) {
  Executor<K> exec(p.n, seed);
  Trace trace;
  trace.entries.reserve(p.statements.size());
  for (size_t i = 0; i < p.statements.size(); ++i) {
    TraceEntry entry;
    entry.statement = i;
    entry.value = exec.execute(p.statements[i], i);
    if (opts.record_states && exec.has_state()) {
      std::vector<std::string> gens;
      for (const auto& g : exec.state().generators()) {
        gens.push_back(format_observable(g));
      }
      entry.generators_after = std::move(gens);
    }
    trace.entries.push_back(std::move(entry));
  }
  return trace;
}

}  // namespace detail

/// Executes the program. Deterministic given the seed; a program that needs
/// a random outcome without a seed raises a RunError rather than inventing
/// one.
inline Trace run(const Program& p, std::optional<uint64_t> seed,
                 const RunOptions& opts = {}) {
  if (p.mode == Mode::toy) {
    return detail::run_typed<ToyKind>(p, seed, opts);
  }
  return detail::run_typed<QubitKind>(p, seed, opts);
}

/// The printable outcome lines: `m k OBS -> v` per measurement (k is the
/// 1-based measurement ordinal) and `e OBS -> v` per expectation, plus the
/// canonical generators when the trace recorded them.
inline std::string render_output(const Program& p, const Trace& trace,
                                 bool with_states = false) {
  std::ostringstream out;
  size_t measure_ordinal = 0;
  for (const TraceEntry& entry : trace.entries) {
    const Statement& stmt = p.statements[entry.statement];
    if (stmt.kind == Statement::Kind::measure) {
      ++measure_ordinal;
      out << "m " << measure_ordinal << " " << stmt.observables[0].text()
          << " -> " << (*entry.value == 1 ? "+1" : "-1") << "\n";
    } else if (stmt.kind == Statement::Kind::expect) {
      int v = *entry.value;
      out << "e " << stmt.observables[0].text() << " -> "
          << (v == 1 ? "+1" : v == -1 ? "-1" : "0") << "\n";
    }
    if (with_states && entry.generators_after) {
      out << "  state:";
      if (entry.generators_after->empty()) {
        out << " <>";
      }
      for (const std::string& g : *entry.generators_after) {
        out << " " << g;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace toystab

#endif  // TOYSTAB_CIRCUIT_HPP
