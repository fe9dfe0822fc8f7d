// Copyright 2026 The qdesk Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qdesk/ising.hpp"
#include "qdesk/sample_set.hpp"

namespace qdesk {

struct HardwareGraph {
  int num_nodes = 0;
  std::set<Edge> edges;  // (u, v) with u < v
  std::string layout;    // "chimera(m,n,t)" or "file"

  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
};

// Grid of m x n unit cells, each K_{t,t}. Node (row, col, k) has index
// (row * n + col) * 2t + k. Shore k < t couples to the same k in the cell
// below (row + 1); shore k >= t couples to the same k in the cell to the
// right (col + 1).
HardwareGraph chimera_graph(int m, int n, int t);

std::size_t chimera_edge_count(int m, int n, int t);

// One "u v" pair per line; '#' starts a comment. num_nodes is the largest
// index plus one unless `num_nodes` is given.
HardwareGraph read_edge_list(std::istream& in, int num_nodes = -1);
void write_edge_list(std::ostream& out, const HardwareGraph& graph);

// Logical variable -> physical nodes, each chain sorted ascending.
using Embedding = std::map<int, std::vector<int>>;

enum class ViolationKind {
  empty_chain,
  node_out_of_range,
  overlapping_chains,
  disconnected_chain,
  missing_chain,
  unrepresented_edge,
};

std::string_view name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> items;  // variables, nodes, or the logical edge
  std::string message;
};

// Empty result means the embedding is valid for every edge in
// `problem_edges`.
std::vector<Violation> validate_embedding(const std::vector<Edge>& problem_edges, const HardwareGraph& hw,
                                          const Embedding& emb);

inline constexpr int kEmbedMaxVariables = 16;

// Randomized greedy chain growth: variables are placed in a random
// breadth-first order; each new chain is a root plus shortest free paths to
// every placed neighbour chain, with the root chosen to minimize chain
// length. A variable that cannot be placed rips up some of its neighbours'
// chains and retries them (bounded). Each try restarts from a fresh random
// order. Deterministic per seed; throws NoSolutionError after `tries`.
Embedding find_embedding(const std::vector<Edge>& problem_edges, int num_variables, const HardwareGraph& hw,
                         std::uint64_t seed, int tries = 16);

struct EmbeddedModel {
  IsingModel physical;
  // -chain_strength * (number of intra-chain edges). For unbroken chains,
  // physical energy - chain_offset equals the logical energy.
  double chain_offset = 0.0;
};

// h split equally along each chain, each J on the lowest-index physical
// edge between the two chains, -chain_strength on every hardware edge
// inside a chain.
EmbeddedModel embed_model(const IsingModel& model, const Embedding& emb, const HardwareGraph& hw,
                          double chain_strength);

struct Unembedded {
  std::vector<int> spins;
  double chain_break_fraction = 0.0;
};

// Majority vote per chain; exact ties are broken by a seeded coin in
// variable order. A chain whose nodes disagree counts as broken.
Unembedded unembed(const std::vector<int>& physical_spins, const Embedding& emb, std::uint64_t seed);

// Row-wise unembedding of a SPIN-domain sample set; energies come from
// `logical` when given.
SampleSet unembed_samples(const SampleSet& physical, const Embedding& emb, std::uint64_t seed,
                          const IsingModel* logical = nullptr);

}  // namespace qdesk
