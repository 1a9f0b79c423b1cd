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

#ifndef TOYSTAB_ORACLE_CHECK_HPP
#define TOYSTAB_ORACLE_CHECK_HPP

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "toystab/circuit.hpp"
#include "toystab/ontic.hpp"

namespace toystab {

/// Differential run of a toy circuit against the brute-force ontic engine.
struct OracleCheckReport {
  bool ok = true;
  size_t trials = 0;
  std::string divergence;  // first mismatch, empty when ok

  struct MeasureStat {
    size_t statement = 0;
    size_t plus = 0;
    size_t total = 0;
    double predicted_plus = 0.0;
    double variance = 0.0;

    double frequency() const {
      return total == 0 ? 0.0 : static_cast<double>(plus) / total;
    }

    bool within_5_sigma() const {
      double diff = std::abs(static_cast<double>(plus) - predicted_plus);
      if (variance == 0.0) {
        return diff == 0.0;
      }
      return diff <= 5.0 * std::sqrt(variance);
    }
  };
  std::vector<MeasureStat> stats;

  std::string summary() const {
    std::ostringstream out;
    out << (ok ? "OK" : "DIVERGED") << " after " << trials << " trial(s)\n";
    if (!divergence.empty()) {
      out << divergence << "\n";
    }
    for (const MeasureStat& s : stats) {
      out << "measure@" << (s.statement + 1) << ": +1 frequency "
          << s.frequency() << " over " << s.total << " trials ("
          << (s.within_5_sigma() ? "within" : "OUTSIDE") << " 5 sigma)\n";
    }
    return out.str();
  }
};

/// Runs the program symbolically and ontically side by side, `trials`
/// times. Each trial samples an initial ontic state uniformly from the
/// declared state's support, forces the symbolic engine to the ontically
/// observed outcomes, and asserts after every statement that the evolved
/// ontic support set equals the symbolic posterior's support. Outcome
/// frequencies must sit within 5-sigma binomial bounds of the symbolic
/// predictions.
inline OracleCheckReport oracle_check_circuit(const Program& p, size_t trials,
                                              uint64_t seed, size_t max_n = 4) {
  if (p.mode != Mode::toy) {
    throw std::invalid_argument("oracle-check requires a toy-mode program");
  }
  if (p.n > max_n) {
    throw GuardExceeded("oracle_check_circuit", p.n, max_n);
  }
  size_t n = p.n;

  OracleCheckReport report;
  report.trials = trials;
  std::vector<OracleCheckReport::MeasureStat> stats(p.statements.size());
  for (size_t i = 0; i < stats.size(); ++i) {
    stats[i].statement = i;
  }

  // Statement-level caches: gate tables, ontic gate actions, measurement
  // classings. All are state independent.
  std::vector<std::optional<detail::CompiledGate<ToyKind>>> gate_cache(
      p.statements.size());
  std::vector<std::optional<std::vector<OnticIndex>>> gate_perm_cache(
      p.statements.size());
  std::vector<std::optional<OnticClassing>> classing_cache(
      p.statements.size());

  Rng master(seed);
  auto fail = [&](size_t trial, size_t stmt, const std::string& what) {
    report.ok = false;
    report.divergence = "trial " + std::to_string(trial + 1) +
                        ", statement " + std::to_string(stmt + 1) + ": " +
                        what;
  };

  for (size_t trial = 0; trial < trials && report.ok; ++trial) {
    Rng rng = master.split();
    std::vector<ToyObservable> gens;
    bool have_state = false;
    OnticIndex world{0};
    std::vector<OnticIndex> support;

    for (size_t si = 0; si < p.statements.size() && report.ok; ++si) {
      const Statement& stmt = p.statements[si];
      switch (stmt.kind) {
        case Statement::Kind::state_decl: {
          gens.clear();
          for (const ObsLiteral& lit : stmt.observables) {
            gens.push_back(lit.as<ToyKind>());
          }
          if (auto violation = validate_generators<ToyKind>(gens)) {
            throw RunError(si, "invalid state declaration: " +
                                   violation->describe());
          }
          have_state = true;
          support = support_of(StabilizerState<ToyKind>(n, gens)).members;
          world = support[rng.below(support.size())];
          break;
        }
        case Statement::Kind::gate: {
          if (!have_state) {
            throw RunError(si, "no state declared yet");
          }
          if (!gate_cache[si]) {
            auto local = detail::local_gate<ToyKind>(stmt);
            gate_cache[si] = detail::CompiledGate<ToyKind>::compile(
                local, stmt.sites[0],
                stmt.sites.size() > 1 ? std::optional<size_t>(stmt.sites[1])
                                      : std::nullopt);
            gate_perm_cache[si] = ontic_permutation(local, 2);
          }
          for (ToyObservable& g : gens) {
            gate_cache[si]->apply(g);
          }
          // Ontic action: permute the digits at the touched sites.
          auto act = [&](OnticIndex v) {
            size_t a = stmt.sites[0];
            uint64_t da = (v.v >> (2 * a)) & 3;
            uint64_t local_idx = da;
            size_t b = 0;
            bool two = stmt.sites.size() > 1;
            if (two) {
              b = stmt.sites[1];
              local_idx |= ((v.v >> (2 * b)) & 3) << 2;
            }
            uint64_t image = (*gate_perm_cache[si])[local_idx].v;
            uint64_t out = v.v & ~(uint64_t{3} << (2 * a));
            out |= (image & 3) << (2 * a);
            if (two) {
              out &= ~(uint64_t{3} << (2 * b));
              out |= ((image >> 2) & 3) << (2 * b);
            }
            return OnticIndex{out};
          };
          world = act(world);
          for (OnticIndex& v : support) {
            v = act(v);
          }
          std::sort(support.begin(), support.end());
          break;
        }
        case Statement::Kind::measure: {
          if (!have_state) {
            throw RunError(si, "no state declared yet");
          }
          ToyObservable g = stmt.observables[0].as<ToyKind>();
          if (!classing_cache[si]) {
            classing_cache[si] = ontic_classes(n, g, max_n);
          }
          const OnticClassing& classing = *classing_cache[si];
          int value = eigenvalue(g, world);

          detail::MeasurementPlan plan = detail::plan_measurement(gens, g);
          if (plan.deterministic && plan.value != value) {
            fail(trial, si,
                 "symbolic engine predicts deterministic " +
                     std::to_string(plan.value) + " but the ontic value is " +
                     std::to_string(value));
            break;
          }
          detail::apply_measurement(gens, g, value, plan);

          stats[si].total += 1;
          stats[si].plus += value == 1 ? 1 : 0;
          stats[si].predicted_plus +=
              plan.deterministic ? (plan.value == 1 ? 1.0 : 0.0) : 0.5;
          stats[si].variance += plan.deterministic ? 0.0 : 0.25;

          // Ontic disturbance, then the set-level update: keep the states
          // with the observed value and close under the disturbance.
          const auto& cls = classing.classes[classing.class_of[world.v]];
          world = cls[rng.below(cls.size())];
          std::vector<char> seen(classing.classes.size(), 0);
          std::vector<OnticIndex> next;
          for (OnticIndex v : support) {
            if (eigenvalue(g, v) != value) {
              continue;
            }
            size_t cid = classing.class_of[v.v];
            if (!seen[cid]) {
              seen[cid] = 1;
              next.insert(next.end(), classing.classes[cid].begin(),
                          classing.classes[cid].end());
            }
          }
          std::sort(next.begin(), next.end());
          support = std::move(next);
          break;
        }
        case Statement::Kind::expect: {
          if (!have_state) {
            throw RunError(si, "no state declared yet");
          }
          ToyObservable g = stmt.observables[0].as<ToyKind>();
          int e = expectation(StabilizerState<ToyKind>(n, gens), g);
          if (e != 0 && eigenvalue(g, world) != e) {
            fail(trial, si,
                 "expectation " + std::to_string(e) +
                     " contradicts the ontic value");
          }
          break;
        }
      }
      if (!report.ok || !have_state) {
        continue;
      }
      // Support sets must agree after every statement.
      OnticSupport symbolic =
          support_of(StabilizerState<ToyKind>(n, gens), max_n);
      if (symbolic.members != support) {
        fail(trial, si,
             "ontic support set differs from the symbolic posterior support");
        break;
      }
      if (!std::binary_search(support.begin(), support.end(), world)) {
        fail(trial, si, "ontic state escaped the symbolic support");
        break;
      }
    }
  }

  for (const auto& s : stats) {
    if (s.total == 0) {
      continue;
    }
    report.stats.push_back(s);
    if (!s.within_5_sigma()) {
      report.ok = false;
      if (report.divergence.empty()) {
        report.divergence = "statement " + std::to_string(s.statement + 1) +
                            ": outcome frequency outside 5-sigma bounds";
      }
    }
  }
  return report;
}

}  // namespace toystab

#endif  // TOYSTAB_ORACLE_CHECK_HPP
