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

#ifndef TOYSTAB_GRAPH_HPP
#define TOYSTAB_GRAPH_HPP

#include <set>
#include <utility>
#include <vector>

#include "toystab/measurement.hpp"
#include "toystab/transform.hpp"

namespace toystab {

/// Finite simple graph on vertices 0..n-1: no self-loops, no duplicate
/// edges.
class SimpleGraph {
 public:
  explicit SimpleGraph(size_t n) : n_(n) {}

  size_t num_vertices() const { return n_; }

  void add_edge(size_t a, size_t b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    auto edge = std::minmax(a, b);
    if (!edges_.insert({edge.first, edge.second}).second) {
      throw std::invalid_argument("duplicate edge");
    }
  }

  bool has_edge(size_t a, size_t b) const {
    auto edge = std::minmax(a, b);
    return edges_.count({edge.first, edge.second}) > 0;
  }

  const std::set<std::pair<size_t, size_t>>& edges() const { return edges_; }

  std::vector<size_t> neighbors(size_t k) const {
    check_vertex(k);
    std::vector<size_t> out;
    for (const auto& [a, b] : edges_) {
      if (a == k) {
        out.push_back(b);
      } else if (b == k) {
        out.push_back(a);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Same vertex set with every edge at k removed; labels are preserved.
  SimpleGraph without_vertex(size_t k) const {
    check_vertex(k);
    SimpleGraph out(n_);
    for (const auto& [a, b] : edges_) {
      if (a != k && b != k) {
        out.edges_.insert({a, b});
      }
    }
    return out;
  }

  bool operator==(const SimpleGraph&) const = default;

 private:
  void check_vertex(size_t k) const {
    if (k >= n_) {
      throw std::invalid_argument("vertex index out of range");
    }
  }

  size_t n_ = 0;
  std::set<std::pair<size_t, size_t>> edges_;
};

/// The toy graph state of G: generated by g_k = X_k * prod_{l in N(k)} Z_l.
/// Equivalently: every system in <X>, then a CZ analogue across each edge
/// (order irrelevant).
inline ToyStabilizerState build_graph_state(const SimpleGraph& g) {
  size_t n = g.num_vertices();
  std::vector<ToyObservable> gens;
  gens.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    CheckVector cv(n);
    cv.set_x(k, true);
    for (size_t l : g.neighbors(k)) {
      cv.set_z(l, !cv.z_bit(l));
    }
    gens.emplace_back(cv, 0);
  }
  return ToyStabilizerState(n, std::move(gens));
}

struct GraphMeasureResult {
  int value;
  SimpleGraph graph;          // vertex k isolated, labels preserved
  ToyStabilizerState posterior;  // graph state of G \ k, tensored with <±Z_k>
};

/// Z measurement on vertex k of a graph state. The outcome is a fair coin;
/// on -1 the X -> -X, Z -> Z gate is applied to every neighbor of k. The
/// posterior equals the graph state with vertex k deleted (its system stays
/// behind as <±Z_k>).
inline GraphMeasureResult measure_z_vertex(const SimpleGraph& g,
                                           const ToyStabilizerState& state,
                                           size_t k, Rng& rng) {
  size_t n = g.num_vertices();
  if (k >= n) {
    throw std::invalid_argument("vertex index out of range");
  }
  if (state != build_graph_state(g)) {
    throw std::invalid_argument("state is not the graph state of g");
  }
  MeasureResult<ToyKind> m =
      measure(state, ToyObservable::single(n, k, Letter::Z), rng);
  ToyStabilizerState posterior = m.posterior;
  if (m.value == -1) {
    for (size_t l : g.neighbors(k)) {
      posterior = gate_z<ToyKind>(n, l).apply(posterior);
    }
  }
  return GraphMeasureResult{m.value, g.without_vertex(k), std::move(posterior)};
}

}  // namespace toystab

#endif  // TOYSTAB_GRAPH_HPP
