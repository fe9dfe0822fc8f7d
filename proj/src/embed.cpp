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

#include "qdesk/embed.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "qdesk/errors.hpp"
#include "qdesk/rng.hpp"

namespace qdesk {

bool HardwareGraph::has_edge(int u, int v) const { return edges.count({std::min(u, v), std::max(u, v)}) > 0; }

std::vector<std::vector<int>> HardwareGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_nodes));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

HardwareGraph chimera_graph(int m, int n, int t) {
  if (m < 1 || n < 1 || t < 1) throw ArgumentError("chimera dimensions must be at least 1");
  if (static_cast<long long>(m) * n * 2 * t > 1'000'000) throw CapacityError("chimera graph too large");
  HardwareGraph g;
  g.num_nodes = 2 * t * m * n;
  g.layout = "chimera(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(t) + ")";
  auto index = [&](int row, int col, int k) { return (row * n + col) * 2 * t + k; };
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < n; ++col) {
      for (int a = 0; a < t; ++a) {
        for (int b = t; b < 2 * t; ++b) g.edges.insert({index(row, col, a), index(row, col, b)});
      }
      for (int k = 0; k < t; ++k) {
        if (row + 1 < m) g.edges.insert({index(row, col, k), index(row + 1, col, k)});
        if (col + 1 < n) g.edges.insert({index(row, col, t + k), index(row, col + 1, t + k)});
      }
    }
  }
  return g;
}

std::size_t chimera_edge_count(int m, int n, int t) {
  const auto M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(n), T = static_cast<std::size_t>(t);
  return M * N * T * T + T * (M * (N - 1) + N * (M - 1));
}

HardwareGraph read_edge_list(std::istream& in, int num_nodes) {
  HardwareGraph g;
  g.layout = "file";
  int max_index = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u)) continue;
    std::string extra;
    if (!(row >> v) || (row >> extra)) {
      throw ValidationError("edge list line " + std::to_string(line_no) + " is not a 'u v' pair");
    }
    if (u < 0 || v < 0 || u > 10'000'000 || v > 10'000'000) {
      throw ValidationError("edge list line " + std::to_string(line_no) + " has an invalid node index");
    }
    if (u == v) throw ValidationError("edge list line " + std::to_string(line_no) + " is a self-loop");
    g.edges.insert({static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))});
    max_index = std::max<int>(max_index, static_cast<int>(std::max(u, v)));
  }
  if (num_nodes >= 0) {
    if (max_index >= num_nodes) throw ValidationError("edge list references node beyond num_nodes");
    g.num_nodes = num_nodes;
  } else {
    g.num_nodes = max_index + 1;
  }
  return g;
}

void write_edge_list(std::ostream& out, const HardwareGraph& graph) {
  for (const auto& [u, v] : graph.edges) out << u << ' ' << v << '\n';
}

std::string_view name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::empty_chain: return "empty_chain";
    case ViolationKind::node_out_of_range: return "node_out_of_range";
    case ViolationKind::overlapping_chains: return "overlapping_chains";
    case ViolationKind::disconnected_chain: return "disconnected_chain";
    case ViolationKind::missing_chain: return "missing_chain";
    case ViolationKind::unrepresented_edge: return "unrepresented_edge";
  }
  return "unknown";
}

namespace {

bool chain_connected(const std::vector<int>& chain, const std::vector<std::vector<int>>& adj) {
  if (chain.empty()) return false;
  std::set<int> members(chain.begin(), chain.end());
  std::set<int> seen{chain.front()};
  std::deque<int> queue{chain.front()};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (members.count(w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == members.size();
}

bool chains_touch(const std::vector<int>& a, const std::vector<int>& b, const HardwareGraph& hw) {
  for (int u : a) {
    for (int v : b) {
      if (hw.has_edge(u, v)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Violation> validate_embedding(const std::vector<Edge>& problem_edges, const HardwareGraph& hw,
                                          const Embedding& emb) {
  std::vector<Violation> out;
  const auto adj = hw.adjacency();
  std::map<int, int> owner;
  for (const auto& [var, chain] : emb) {
    if (chain.empty()) {
      out.push_back({ViolationKind::empty_chain, {var}, "variable " + std::to_string(var) + " has an empty chain"});
      continue;
    }
    bool in_range = true;
    for (int node : chain) {
      if (node < 0 || node >= hw.num_nodes) {
        out.push_back({ViolationKind::node_out_of_range, {var, node},
                       "node " + std::to_string(node) + " of variable " + std::to_string(var) + " is not in the graph"});
        in_range = false;
        continue;
      }
      auto [it, fresh] = owner.emplace(node, var);
      if (!fresh && it->second != var) {
        out.push_back({ViolationKind::overlapping_chains, {it->second, var, node},
                       "node " + std::to_string(node) + " is shared by variables " + std::to_string(it->second) +
                           " and " + std::to_string(var)});
      }
    }
    if (in_range && !chain_connected(chain, adj)) {
      out.push_back({ViolationKind::disconnected_chain, {var},
                     "chain of variable " + std::to_string(var) + " is not connected"});
    }
  }
  for (const auto& [u, v] : problem_edges) {
    auto cu = emb.find(u), cv = emb.find(v);
    bool missing = false;
    for (int var : {u, v}) {
      if (!emb.count(var)) {
        out.push_back({ViolationKind::missing_chain, {var}, "variable " + std::to_string(var) + " has no chain"});
        missing = true;
      }
    }
    if (missing) continue;
    if (!chains_touch(cu->second, cv->second, hw)) {
      out.push_back({ViolationKind::unrepresented_edge, {u, v},
                     "logical edge (" + std::to_string(u) + "," + std::to_string(v) + ") has no physical coupler"});
    }
  }
  return out;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

class ChainBuilder {
 public:
  ChainBuilder(int num_variables, const std::vector<std::vector<int>>& logical_adj,
               const std::vector<std::vector<int>>& hw_adj, Rng& rng)
      : logical_adj_(logical_adj),
        hw_adj_(hw_adj),
        rng_(rng),
        chains_(static_cast<std::size_t>(num_variables)),
        owner_(hw_adj.size(), -1) {}

  bool run() {
    const int n = static_cast<int>(chains_.size());
    std::deque<int> queue = placement_order();
    int rip_budget = 4 * n;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (!chains_[static_cast<std::size_t>(u)].empty()) continue;
      if (place(u)) continue;
      if (rip_budget-- <= 0) return false;
      // Rip up a random subset of placed neighbours and retry them after u.
      std::vector<int> placed;
      for (int p : logical_adj_[static_cast<std::size_t>(u)]) {
        if (!chains_[static_cast<std::size_t>(p)].empty()) placed.push_back(p);
      }
      if (placed.empty()) return false;
      shuffle(placed);
      const std::size_t count = 1 + rng_.below(placed.size());
      queue.push_front(u);
      for (std::size_t i = 0; i < count; ++i) {
        release(placed[i]);
        queue.insert(queue.begin() + 1, placed[i]);
      }
    }
    return true;
  }

  Embedding embedding() const {
    Embedding emb;
    for (std::size_t v = 0; v < chains_.size(); ++v) {
      auto chain = chains_[v];
      std::sort(chain.begin(), chain.end());
      emb[static_cast<int>(v)] = std::move(chain);
    }
    return emb;
  }

 private:
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_.below(i)]);
  }

  // Breadth-first over the logical graph from random starts, neighbours in
  // random order, so most variables meet an already placed neighbour.
  std::deque<int> placement_order() {
    const int n = static_cast<int>(chains_.size());
    std::vector<int> starts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) starts[static_cast<std::size_t>(i)] = i;
    shuffle(starts);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::deque<int> order;
    for (int s : starts) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = true;
      std::deque<int> bfs{s};
      while (!bfs.empty()) {
        const int u = bfs.front();
        bfs.pop_front();
        order.push_back(u);
        auto next = logical_adj_[static_cast<std::size_t>(u)];
        shuffle(next);
        for (int w : next) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            bfs.push_back(w);
          }
        }
      }
    }
    return order;
  }

  void release(int var) {
    for (int node : chains_[static_cast<std::size_t>(var)]) owner_[static_cast<std::size_t>(node)] = -1;
    chains_[static_cast<std::size_t>(var)].clear();
  }

  // Distances over free nodes from the free neighbourhood of chain(p);
  // dist 0 means adjacent to the chain.
  void distances_from(int p, std::vector<int>& dist, std::vector<int>& parent) const {
    dist.assign(hw_adj_.size(), kUnreached);
    parent.assign(hw_adj_.size(), -1);
    std::deque<int> queue;
    for (int node : chains_[static_cast<std::size_t>(p)]) {
      for (int w : hw_adj_[static_cast<std::size_t>(node)]) {
        if (owner_[static_cast<std::size_t>(w)] == -1 && dist[static_cast<std::size_t>(w)] == kUnreached) {
          dist[static_cast<std::size_t>(w)] = 0;
          queue.push_back(w);
        }
      }
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : hw_adj_[static_cast<std::size_t>(u)]) {
        if (owner_[static_cast<std::size_t>(w)] == -1 && dist[static_cast<std::size_t>(w)] == kUnreached) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        }
      }
    }
  }

  bool place(int u) {
    std::vector<int> placed;
    for (int p : logical_adj_[static_cast<std::size_t>(u)]) {
      if (!chains_[static_cast<std::size_t>(p)].empty()) placed.push_back(p);
    }
    const std::size_t num_nodes = hw_adj_.size();
    std::vector<std::vector<int>> dists(placed.size()), parents(placed.size());
    for (std::size_t i = 0; i < placed.size(); ++i) distances_from(placed[i], dists[i], parents[i]);

    std::vector<int> best_roots;
    long long best_cost = std::numeric_limits<long long>::max();
    for (std::size_t r = 0; r < num_nodes; ++r) {
      if (owner_[r] != -1) continue;
      long long cost = 0;
      bool reachable = true;
      for (const auto& d : dists) {
        if (d[r] == kUnreached) {
          reachable = false;
          break;
        }
        cost += d[r];
      }
      if (!reachable) continue;
      if (cost < best_cost) {
        best_cost = cost;
        best_roots.clear();
      }
      if (cost == best_cost) best_roots.push_back(static_cast<int>(r));
    }
    if (best_roots.empty()) return false;
    const int root = best_roots[rng_.below(best_roots.size())];

    std::set<int> chain{root};
    for (std::size_t i = 0; i < placed.size(); ++i) {
      for (int w = parents[i][static_cast<std::size_t>(root)]; w != -1; w = parents[i][static_cast<std::size_t>(w)]) {
        chain.insert(w);
      }
    }
    auto& c = chains_[static_cast<std::size_t>(u)];
    c.assign(chain.begin(), chain.end());
    for (int node : c) owner_[static_cast<std::size_t>(node)] = u;
    return true;
  }

  const std::vector<std::vector<int>>& logical_adj_;
  const std::vector<std::vector<int>>& hw_adj_;
  Rng& rng_;
  std::vector<std::vector<int>> chains_;
  std::vector<int> owner_;
};

}  // namespace

Embedding find_embedding(const std::vector<Edge>& problem_edges, int num_variables, const HardwareGraph& hw,
                         std::uint64_t seed, int tries) {
  if (num_variables > kEmbedMaxVariables) {
    throw CapacityError("embedding search is capped at " + std::to_string(kEmbedMaxVariables) + " variables, got " +
                        std::to_string(num_variables));
  }
  if (num_variables < 1) throw ArgumentError("nothing to embed");
  if (tries < 1) throw ArgumentError("tries must be at least 1");
  std::vector<std::vector<int>> logical_adj(static_cast<std::size_t>(num_variables));
  std::set<Edge> unique;
  for (auto [u, v] : problem_edges) {
    if (u < 0 || v < 0 || u >= num_variables || v >= num_variables) throw IndexError("problem edge out of range");
    if (u == v) throw ArgumentError("problem graph has a self-loop");
    if (u > v) std::swap(u, v);
    if (unique.insert({u, v}).second) {
      logical_adj[static_cast<std::size_t>(u)].push_back(v);
      logical_adj[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  const auto hw_adj = hw.adjacency();
  const std::vector<Edge> edges(unique.begin(), unique.end());
  Rng master(seed);
  for (int attempt = 0; attempt < tries; ++attempt) {
    Rng rng(master.next());
    ChainBuilder builder(num_variables, logical_adj, hw_adj, rng);
    if (!builder.run()) continue;
    Embedding emb = builder.embedding();
    if (validate_embedding(edges, hw, emb).empty()) return emb;
  }
  throw NoSolutionError("no embedding found after " + std::to_string(tries) + " tries");
}

EmbeddedModel embed_model(const IsingModel& model, const Embedding& emb, const HardwareGraph& hw,
                          double chain_strength) {
  if (!(chain_strength > 0)) throw ArgumentError("chain strength must be positive");
  auto violations = validate_embedding(model.edges(), hw, emb);
  for (int v = 0; v < model.num_variables(); ++v) {
    if (!emb.count(v)) violations.push_back({ViolationKind::missing_chain, {v}, "variable " + std::to_string(v) + " has no chain"});
  }
  if (!violations.empty()) {
    std::string msg = "invalid embedding:";
    for (const auto& v : violations) msg += " " + v.message + ";";
    throw ValidationError(msg);
  }
  EmbeddedModel out{IsingModel(hw.num_nodes, model.offset()), 0.0};
  for (const auto& [i, v] : model.h()) {
    const auto& chain = emb.at(i);
    for (int node : chain) out.physical.add_h(node, v / static_cast<double>(chain.size()));
  }
  for (const auto& [ij, v] : model.J()) {
    if (v == 0.0) continue;
    std::optional<Edge> best;
    for (int a : emb.at(ij.first)) {
      for (int b : emb.at(ij.second)) {
        if (!hw.has_edge(a, b)) continue;
        const Edge e{std::min(a, b), std::max(a, b)};
        if (!best || e < *best) best = e;
      }
    }
    out.physical.add_J(best->first, best->second, v);
  }
  int intra = 0;
  for (const auto& [var, chain] : emb) {
    for (std::size_t a = 0; a < chain.size(); ++a) {
      for (std::size_t b = a + 1; b < chain.size(); ++b) {
        if (hw.has_edge(chain[a], chain[b])) {
          out.physical.add_J(chain[a], chain[b], -chain_strength);
          ++intra;
        }
      }
    }
  }
  out.chain_offset = -chain_strength * intra;
  return out;
}

Unembedded unembed(const std::vector<int>& physical_spins, const Embedding& emb, std::uint64_t seed) {
  Rng rng(seed);
  Unembedded out;
  const int num_vars = emb.empty() ? 0 : emb.rbegin()->first + 1;
  out.spins.assign(static_cast<std::size_t>(num_vars), 1);
  int broken = 0;
  for (const auto& [var, chain] : emb) {
    if (var < 0) throw IndexError("negative logical variable in embedding");
    if (chain.empty()) throw ValidationError("variable " + std::to_string(var) + " has an empty chain");
    int sum = 0;
    for (int node : chain) {
      if (node < 0 || static_cast<std::size_t>(node) >= physical_spins.size()) {
        throw IndexError("sample does not cover physical node " + std::to_string(node));
      }
      const int s = physical_spins[static_cast<std::size_t>(node)];
      if (s != 1 && s != -1) throw ValidationError("physical spins must be +1 or -1");
      sum += s;
    }
    if (std::abs(sum) != static_cast<int>(chain.size())) ++broken;
    out.spins[static_cast<std::size_t>(var)] = sum > 0 ? 1 : sum < 0 ? -1 : (rng.coin() ? 1 : -1);
  }
  out.chain_break_fraction = emb.empty() ? 0.0 : static_cast<double>(broken) / static_cast<double>(emb.size());
  return out;
}

SampleSet unembed_samples(const SampleSet& physical, const Embedding& emb, std::uint64_t seed,
                          const IsingModel* logical) {
  if (physical.domain != ValueDomain::spin) throw ArgumentError("unembedding expects SPIN-domain samples");
  SampleSet out;
  out.domain = ValueDomain::spin;
  out.num_variables = emb.empty() ? 0 : emb.rbegin()->first + 1;
  Rng rng(seed);
  for (const auto& row : physical.rows) {
    const Unembedded u = unembed(spins_of(row.bits), emb, rng.next());
    SampleRow r;
    r.bits = bits_of_spins(u.spins);
    if (logical) r.energy = energy(*logical, u.spins);
    r.occurrences = row.occurrences;
    r.chain_break_fraction = u.chain_break_fraction;
    out.rows.push_back(std::move(r));
  }
  out.normalize();
  return out;
}

}  // namespace qdesk
