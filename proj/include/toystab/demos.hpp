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

#ifndef TOYSTAB_DEMOS_HPP
#define TOYSTAB_DEMOS_HPP

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "toystab/graph.hpp"
#include "toystab/measurement.hpp"
#include "toystab/ontic.hpp"
#include "toystab/transform.hpp"

namespace toystab {

namespace detail {

template <typename K>
std::string state_text(const StabilizerState<K>& s) {
  if (s.num_generators() == 0) {
    return "<>";
  }
  std::string out = "<";
  bool first = true;
  for (const auto& g : s.generators()) {
    if (!first) {
      out += ", ";
    }
    out += format_observable(g);
    first = false;
  }
  return out + ">";
}

}  // namespace detail

/// Dense coding in both theories. Alice flips the Z-type correlation for
/// b1 and the X-type correlation for b2; Bob reads both correlations back
/// deterministically.
struct DenseCodingReport {
  struct Message {
    int b1, b2;
    std::string intermediate;  // state after Alice's gates
    int decoded_b1, decoded_b2;
  };
  std::vector<Message> toy, qubit;
  bool ok = true;

  std::string text() const {
    std::ostringstream out;
    for (const auto* column : {&toy, &qubit}) {
      out << (column == &toy ? "toy theory" : "qubit stabilizers") << "\n";
      for (const auto& m : *column) {
        out << "  send (" << m.b1 << "," << m.b2 << "): state "
            << m.intermediate << " -> decoded (" << m.decoded_b1 << ","
            << m.decoded_b2 << ")\n";
      }
    }
    out << (ok ? "dense coding decoded all four messages" : "DECODE FAILURE")
        << "\n";
    return out.str();
  }
};

inline DenseCodingReport demo_dense_coding() {
  DenseCodingReport report;
  auto run_theory = [&report](auto kind_tag, auto& column) {
    using K = decltype(kind_tag);
    auto xx = parse_observable<K>("+XX", 2);
    auto zz = parse_observable<K>("+ZZ", 2);
    StabilizerState<K> initial(2, {xx, zz});
    for (int b1 = 0; b1 <= 1; ++b1) {
      for (int b2 = 0; b2 <= 1; ++b2) {
        StabilizerState<K> s = initial;
        if (b1) {
          s = gate_x<K>(2, 0).apply(s);
        }
        if (b2) {
          s = gate_z<K>(2, 0).apply(s);
        }
        // Both correlation observables are in +-S, so the readout is
        // deterministic; expectation suffices for either theory.
        int vzz = expectation(s, zz);
        int vxx = expectation(s, xx);
        int decoded_b1 = vzz == -1 ? 1 : 0;
        int decoded_b2 = vxx == -1 ? 1 : 0;
        if (vzz == 0 || vxx == 0 || decoded_b1 != b1 || decoded_b2 != b2) {
          report.ok = false;
        }
        column.push_back({b1, b2, detail::state_text(s), decoded_b1,
                          decoded_b2});
      }
    }
  };
  run_theory(ToyKind{}, report.toy);
  run_theory(QubitKind{}, report.qubit);
  return report;
}

/// The nine-observable square whose six lines are commuting triples. On
/// qubits five lines multiply to +I and the last row to -I, ruling out
/// non-contextual values; the toy square multiplies to +I on all six
/// lines, so toy observables can carry pre-determined values.
struct MerminPeresReport {
  std::array<std::array<std::string, 3>, 3> square;
  std::vector<std::string> toy_products;    // 3 rows then 3 columns
  std::vector<std::string> qubit_products;
  bool toy_all_identity = false;
  bool qubit_pattern = false;  // 5 lines +I, last row -I
  bool ok = false;

  std::string text() const {
    std::ostringstream out;
    out << "square:\n";
    for (const auto& row : square) {
      out << "  " << row[0] << "  " << row[1] << "  " << row[2] << "\n";
    }
    const char* names[6] = {"row 1", "row 2", "row 3",
                            "col 1", "col 2", "col 3"};
    out << "line products (toy / qubit):\n";
    for (size_t i = 0; i < 6; ++i) {
      out << "  " << names[i] << ": " << toy_products[i] << " / "
          << qubit_products[i] << "\n";
    }
    out << (ok ? "toy lines all +II; qubit last row -II as required"
               : "UNEXPECTED LINE PRODUCTS")
        << "\n";
    return out.str();
  }
};

inline MerminPeresReport demo_mermin_peres() {
  // Lines of the square; the last row is the X1X2 / Y1Y2 / Z1Z2 triple.
  const std::array<std::array<const char*, 3>, 3> square = {{
      {"+XI", "+IY", "+XY"},
      {"+IX", "+YI", "+YX"},
      {"+XX", "+YY", "+ZZ"},
  }};
  MerminPeresReport report;
  for (size_t r = 0; r < 3; ++r) {
    for (size_t c = 0; c < 3; ++c) {
      report.square[r][c] = square[r][c] + 1;  // drop the sign for display
    }
  }
  auto line_products = [&square](auto kind_tag, std::vector<std::string>& out) {
    using K = decltype(kind_tag);
    std::vector<Observable<K>> products;
    auto multiply_line = [](std::array<Observable<K>, 3> line) {
      for (size_t i = 0; i < 3; ++i) {
        for (size_t j = i + 1; j < 3; ++j) {
          if (!line[i].commutes_with(line[j])) {
            throw std::logic_error("square line does not commute");
          }
        }
      }
      return mul(mul(line[0], line[1]), line[2]);
    };
    for (size_t r = 0; r < 3; ++r) {
      products.push_back(multiply_line({parse_observable<K>(square[r][0], 2),
                                        parse_observable<K>(square[r][1], 2),
                                        parse_observable<K>(square[r][2], 2)}));
    }
    for (size_t c = 0; c < 3; ++c) {
      products.push_back(multiply_line({parse_observable<K>(square[0][c], 2),
                                        parse_observable<K>(square[1][c], 2),
                                        parse_observable<K>(square[2][c], 2)}));
    }
    for (const auto& p : products) {
      out.push_back(format_observable(p));
    }
    return products;
  };
  auto toy = line_products(ToyKind{}, report.toy_products);
  auto qubit = line_products(QubitKind{}, report.qubit_products);

  report.toy_all_identity = true;
  for (const auto& p : toy) {
    report.toy_all_identity = report.toy_all_identity && p.is_identity();
  }
  report.qubit_pattern = qubit[2].is_negative_identity();
  for (size_t i = 0; i < 6; ++i) {
    if (i == 2) {
      continue;
    }
    report.qubit_pattern = report.qubit_pattern && qubit[i].is_identity();
  }
  report.ok = report.toy_all_identity && report.qubit_pattern;
  return report;
}

/// The eight-outcome measurement on three systems whose blocks are all
/// product states yet which no sequence of toy observable measurements can
/// realize: no non-trivial observable lies signed in every block, already
/// not in the first three.
struct NlweReport {
  std::vector<std::string> blocks;
  bool partition_valid = false;
  bool all_blocks_product = false;
  bool sequence_found = true;       // must come out false
  size_t certificate_prefix = 0;    // how many leading blocks already block
  uint64_t support_union = 0;       // must be 64
  bool ok = false;

  std::string text() const {
    std::ostringstream out;
    out << "blocks:\n";
    for (const auto& b : blocks) {
      out << "  " << b << "\n";
    }
    out << "partition valid: " << (partition_valid ? "yes" : "NO") << "\n";
    out << "all blocks are product states: "
        << (all_blocks_product ? "yes" : "NO") << "\n";
    out << "support union: " << support_union << " of 64\n";
    out << "observable sequence: "
        << (sequence_found ? "FOUND (unexpected)" : "none exists") << "\n";
    out << "certificate: no candidate observable fits the first "
        << certificate_prefix << " blocks alone\n";
    out << (ok ? "measurement is valid but not an observable sequence"
               : "UNEXPECTED RESULT")
        << "\n";
    return out.str();
  }
};

inline NlweReport demo_nlwe() {
  const std::array<std::array<const char*, 3>, 8> generator_text = {{
      {"+ZII", "+IZI", "+IIX"},
      {"-ZII", "+IXI", "+IIZ"},
      {"+XII", "-IZI", "-IIZ"},
      {"+ZII", "+IZI", "-IIX"},
      {"-ZII", "-IXI", "+IIZ"},
      {"-XII", "-IZI", "-IIZ"},
      {"+ZII", "-IZI", "+IIZ"},
      {"-ZII", "+IZI", "-IIZ"},
  }};
  PartitionMeasurement partition;
  NlweReport report;
  for (const auto& gens : generator_text) {
    std::vector<ToyObservable> list;
    for (const char* text : gens) {
      list.push_back(parse_observable<ToyKind>(text, 3));
    }
    partition.blocks.emplace_back(3, std::move(list));
    report.blocks.push_back(detail::state_text(partition.blocks.back()));
  }

  report.partition_valid = !validate_partition(partition).has_value();

  // Product (uncorrelated) blocks: every canonical generator touches a
  // single system.
  report.all_blocks_product = true;
  for (const auto& block : partition.blocks) {
    for (const auto& g : block.generators()) {
      size_t touched = 0;
      for (size_t k = 0; k < 3; ++k) {
        touched += g.cv.letter(k) != Letter::I ? 1 : 0;
      }
      if (touched != 1) {
        report.all_blocks_product = false;
      }
    }
  }

  std::vector<OnticIndex> all;
  for (const auto& block : partition.blocks) {
    auto support = support_of(block);
    all.insert(all.end(), support.members.begin(), support.members.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  report.support_union = all.size();

  report.sequence_found = find_observable_sequence(partition).has_value();

  // Shortest prefix of blocks that already admits no first observable.
  auto prefix_blocked = [&partition](size_t count) {
    for (const ToyObservable& g : detail::sequence_candidates(3)) {
      bool fits = true;
      for (size_t i = 0; i < count && fits; ++i) {
        fits = partition.blocks[i].membership(g) != Membership::neither;
      }
      if (fits) {
        return false;
      }
    }
    return true;
  };
  for (size_t count = 1; count <= partition.blocks.size(); ++count) {
    if (prefix_blocked(count)) {
      report.certificate_prefix = count;
      break;
    }
  }

  report.ok = report.partition_valid && report.all_blocks_product &&
              !report.sequence_found && report.certificate_prefix == 3 &&
              report.support_union == 64;
  return report;
}

/// Graph-state walkthrough: build the state of the given graph, optionally
/// measure Z on one vertex and show the vertex-deletion rule at work.
struct GraphDemoReport {
  std::string before;
  std::optional<int> outcome;
  std::optional<std::string> after;
  std::optional<std::string> vertex_deleted_form;
  bool ok = true;

  std::string text() const {
    std::ostringstream out;
    out << "graph state: " << before << "\n";
    if (outcome) {
      out << "Z measurement outcome: " << (*outcome == 1 ? "+1" : "-1")
          << "\n";
      out << "posterior: " << *after << "\n";
      out << "vertex-deleted graph state (with <"
          << (*outcome == 1 ? "+" : "-") << "Z_k>): " << *vertex_deleted_form
          << "\n";
      out << (ok ? "posterior matches the vertex-deletion rule"
                 : "RULE MISMATCH")
          << "\n";
    }
    return out.str();
  }
};

inline GraphDemoReport demo_graph(const SimpleGraph& g,
                                  std::optional<size_t> measure_vertex,
                                  std::optional<uint64_t> seed) {
  GraphDemoReport report;
  ToyStabilizerState state = build_graph_state(g);
  report.before = detail::state_text(state);
  if (!measure_vertex) {
    return report;
  }
  if (!seed) {
    throw SeedRequired();
  }
  Rng rng(*seed);
  GraphMeasureResult m = measure_z_vertex(g, state, *measure_vertex, rng);
  report.outcome = m.value;
  report.after = detail::state_text(m.posterior);

  // Reference form: graph state of G minus the vertex, system kept as +-Z.
  std::vector<ToyObservable> gens;
  ToyStabilizerState deleted = build_graph_state(m.graph);
  for (const auto& gen : deleted.generators()) {
    if (gen.cv.letter(*measure_vertex) == Letter::X &&
        gen.cv.x_part().popcount() == 1 && gen.cv.z_part().popcount() == 0) {
      continue;  // the deleted vertex's own <X_k> generator
    }
    gens.push_back(gen);
  }
  gens.push_back(ToyObservable::single(g.num_vertices(), *measure_vertex,
                                       Letter::Z, m.value == -1));
  ToyStabilizerState reference(g.num_vertices(), std::move(gens));
  report.vertex_deleted_form = detail::state_text(reference);
  report.ok = reference == m.posterior;
  return report;
}

}  // namespace toystab

#endif  // TOYSTAB_DEMOS_HPP
