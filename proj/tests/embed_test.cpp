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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "qdesk/embed.hpp"
#include "qdesk/errors.hpp"
#include "test_util.hpp"

namespace qdesk {
namespace {

const std::vector<Edge> kTriangle{{0, 1}, {0, 2}, {1, 2}};

std::vector<Edge> complete_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  }
  return e;
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == k; });
}

// Exhaustive oracle: every assignment of hardware nodes to {unused, 0..k-1}.
// Returns the fewest physical nodes over valid embeddings, or -1.
int min_nodes_exhaustive(const std::vector<Edge>& edges, int k, const HardwareGraph& hw) {
  const int n = hw.num_nodes;
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int best = -1;
  const auto adj = hw.adjacency();
  auto valid = [&] {
    for (int v = 0; v < k; ++v) {
      std::vector<int> chain;
      for (int u = 0; u < n; ++u) {
        if (label[static_cast<std::size_t>(u)] == v) chain.push_back(u);
      }
      if (chain.empty()) return false;
      std::vector<int> seen{chain[0]}, stack{chain[0]};
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(u)]) {
          if (label[static_cast<std::size_t>(w)] == v && std::find(seen.begin(), seen.end(), w) == seen.end()) {
            seen.push_back(w);
            stack.push_back(w);
          }
        }
      }
      if (seen.size() != chain.size()) return false;
    }
    for (const auto& [a, b] : edges) {
      bool ok = false;
      for (const auto& [u, w] : hw.edges) {
        const int lu = label[static_cast<std::size_t>(u)], lw = label[static_cast<std::size_t>(w)];
        if ((lu == a && lw == b) || (lu == b && lw == a)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (valid()) {
        const int used = static_cast<int>(std::count_if(label.begin(), label.end(), [](int l) { return l >= 0; }));
        if (best < 0 || used < best) best = used;
      }
      return;
    }
    for (int l = -1; l < k; ++l) {
      label[static_cast<std::size_t>(pos)] = l;
      rec(pos + 1);
    }
  };
  rec(0);
  return best;
}

TEST(Chimera, SingleCell) {
  const HardwareGraph g = chimera_graph(1, 1, 4);
  EXPECT_EQ(g.num_nodes, 8);
  EXPECT_EQ(g.edges.size(), 16u);
  EXPECT_EQ(g.layout, "chimera(1,1,4)");
  for (auto [u, v] : std::vector<Edge>{{0, 4}, {0, 7}, {3, 4}, {3, 7}}) EXPECT_TRUE(g.has_edge(u, v));
  EXPECT_TRUE(g.has_edge(7, 3));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(4, 5));
}

TEST(Chimera, TwoByTwo) {
  const HardwareGraph g = chimera_graph(2, 2, 4);
  EXPECT_EQ(g.num_nodes, 32);
  EXPECT_EQ(g.edges.size(), 80u);
  // k < t runs to the cell below, k >= t to the cell on the right.
  EXPECT_TRUE(g.has_edge(1, 2 * 8 + 1));
  EXPECT_TRUE(g.has_edge(5, 8 + 5));
  EXPECT_FALSE(g.has_edge(1, 8 + 1));
}

TEST(Chimera, EdgeCountFormula) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int t = 1; t <= 4; ++t) {
        const HardwareGraph g = chimera_graph(m, n, t);
        const std::size_t formula =
            static_cast<std::size_t>(m * n * t * t + t * (m * (n - 1) + n * (m - 1)));
        EXPECT_EQ(g.edges.size(), formula);
        EXPECT_EQ(chimera_edge_count(m, n, t), formula);
        EXPECT_EQ(g.num_nodes, 2 * t * m * n);
        for (const auto& [u, v] : g.edges) {
          EXPECT_LT(u, v);
          EXPECT_LT(v, g.num_nodes);
        }
      }
    }
  }
  EXPECT_THROW(chimera_graph(0, 1, 4), ArgumentError);
  EXPECT_THROW(chimera_graph(1, 1, 0), ArgumentError);
}

TEST(Validate, TriangleWithOneTwoChain) {
  EXPECT_TRUE(validate_embedding(kTriangle, chimera_graph(1, 1, 4), {{0, {0}}, {1, {4}}, {2, {3, 7}}}).empty());
}

TEST(Validate, UnrepresentedEdge) {
  const auto v = validate_embedding(kTriangle, chimera_graph(1, 1, 4), {{0, {0}}, {1, {4}}, {2, {3}}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::unrepresented_edge);
  EXPECT_EQ(v[0].items, (std::vector<int>{0, 2}));
  EXPECT_EQ(name(v[0].kind), "unrepresented_edge");
}

TEST(Validate, OtherViolations) {
  const HardwareGraph g = chimera_graph(1, 1, 4);
  EXPECT_TRUE(has_kind(validate_embedding(kTriangle, g, {{0, {0}}, {1, {4, 0}}, {2, {3, 7}}}),
                       ViolationKind::overlapping_chains));
  EXPECT_TRUE(has_kind(validate_embedding(kTriangle, g, {{0, {0}}, {1, {4}}, {2, {3, 2}}}),
                       ViolationKind::disconnected_chain));
  EXPECT_TRUE(has_kind(validate_embedding(kTriangle, g, {{0, {0}}, {1, {4}}}), ViolationKind::missing_chain));
  EXPECT_TRUE(has_kind(validate_embedding(kTriangle, g, {{0, {0}}, {1, {4}}, {2, {}}}), ViolationKind::empty_chain));
  EXPECT_TRUE(has_kind(validate_embedding(kTriangle, g, {{0, {0}}, {1, {4}}, {2, {3, 8}}}),
                       ViolationKind::node_out_of_range));
}

TEST(FindEmbedding, TriangleNeedsOneLongChain) {
  const HardwareGraph g = chimera_graph(1, 1, 4);
  EXPECT_EQ(min_nodes_exhaustive(kTriangle, 3, g), 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Embedding e = find_embedding(kTriangle, 3, g, seed);
    EXPECT_TRUE(validate_embedding(kTriangle, g, e).empty());
    int long_chains = 0, nodes = 0;
    for (const auto& [v, chain] : e) {
      nodes += static_cast<int>(chain.size());
      if (chain.size() == 2) ++long_chains;
    }
    EXPECT_EQ(long_chains, 1);
    EXPECT_EQ(nodes, 4);
  }
}

TEST(FindEmbedding, FourCycleUsesSingletons) {
  const HardwareGraph g = chimera_graph(1, 1, 4);
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  EXPECT_EQ(min_nodes_exhaustive(cycle, 4, g), 4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Embedding e = find_embedding(cycle, 4, g, seed);
    EXPECT_TRUE(validate_embedding(cycle, g, e).empty());
    for (const auto& [v, chain] : e) EXPECT_EQ(chain.size(), 1u);
  }
}

TEST(FindEmbedding, CompleteGraphLimitOfOneCell) {
  const HardwareGraph g = chimera_graph(1, 1, 4);
  EXPECT_GT(min_nodes_exhaustive(complete_graph(5), 5, g), 0);
  EXPECT_EQ(min_nodes_exhaustive(complete_graph(6), 6, g), -1);
  const Embedding k5 = find_embedding(complete_graph(5), 5, g, 1);
  EXPECT_TRUE(validate_embedding(complete_graph(5), g, k5).empty());
  EXPECT_THROW(find_embedding(complete_graph(6), 6, g, 1), NoSolutionError);
}

TEST(FindEmbedding, DeterministicPerSeed) {
  const HardwareGraph g = chimera_graph(2, 2, 4);
  const auto edges = complete_graph(6);
  EXPECT_EQ(find_embedding(edges, 6, g, 11), find_embedding(edges, 6, g, 11));
}

TEST(FindEmbedding, RandomGraphsAlwaysValid) {
  Rng rng(41);
  const HardwareGraph g = chimera_graph(3, 3, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.uniform() < 0.4) edges.emplace_back(i, j);
      }
    }
    try {
      const Embedding e = find_embedding(edges, n, g, static_cast<std::uint64_t>(trial));
      EXPECT_TRUE(validate_embedding(edges, g, e).empty());
      EXPECT_EQ(e.size(), static_cast<std::size_t>(n));
    } catch (const NoSolutionError&) {
      ADD_FAILURE() << "no embedding for a sparse graph with " << n << " variables";
    }
  }
}

TEST(FindEmbedding, Cap) {
  EXPECT_THROW(find_embedding({}, kEmbedMaxVariables + 1, chimera_graph(4, 4, 4), 0), CapacityError);
}

TEST(EmbedModel, GardenSingletonChains) {
  const IsingModel m = build_garden_model(4, garden_relations());
  const Embedding e{{0, {0}}, {1, {4}}, {2, {7}}, {3, {3}}};
  const EmbeddedModel em = embed_model(m, e, chimera_graph(1, 1, 4), 3.0);
  EXPECT_TRUE(em.physical == relabel(m, {0, 4, 7, 3}, 8));
  EXPECT_EQ(em.chain_offset, 0.0);
}

TEST(EmbedModel, TriangleChainCoupler) {
  IsingModel m(3);
  for (const auto& [i, j] : kTriangle) m.set_J(i, j, 1.0);
  m.set_h(2, 1.0);
  const Embedding e{{0, {0}}, {1, {4}}, {2, {3, 7}}};
  const EmbeddedModel em = embed_model(m, e, chimera_graph(1, 1, 4), 2.0);
  EXPECT_DOUBLE_EQ(em.physical.J(3, 7), -2.0);
  EXPECT_DOUBLE_EQ(em.physical.h(3), 0.5);
  EXPECT_DOUBLE_EQ(em.physical.h(7), 0.5);
  EXPECT_DOUBLE_EQ(em.physical.J(0, 4), 1.0);
  EXPECT_DOUBLE_EQ(em.physical.J(0, 7), 1.0);
  EXPECT_DOUBLE_EQ(em.physical.J(3, 4), 1.0);
  EXPECT_DOUBLE_EQ(em.chain_offset, -2.0);
  EXPECT_EQ(em.physical.J().size(), 4u);
}

TEST(EmbedModel, RejectsInvalid) {
  IsingModel m(3);
  m.set_J(0, 2, 1.0);
  EXPECT_THROW(embed_model(m, {{0, {0}}, {1, {4}}, {2, {3}}}, chimera_graph(1, 1, 4), 1.0), ValidationError);
  EXPECT_THROW(embed_model(m, {{0, {0}}, {1, {4}}, {2, {3, 7}}}, chimera_graph(1, 1, 4), 0.0), ArgumentError);
}

TEST(EmbedModel, EnergyIdentityUnbrokenChains) {
  Rng rng(42);
  const HardwareGraph g = chimera_graph(2, 2, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const IsingModel m = testing::random_ising(rng, n, 1.0);
    const Embedding e = find_embedding(m.edges(), n, g, static_cast<std::uint64_t>(trial));
    const EmbeddedModel em = embed_model(m, e, g, 1.5);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      const auto s = spins_from_index(k, n);
      std::vector<int> phys(static_cast<std::size_t>(g.num_nodes), 1);
      for (const auto& [v, chain] : e) {
        for (int u : chain) phys[static_cast<std::size_t>(u)] = s[static_cast<std::size_t>(v)];
      }
      EXPECT_NEAR(energy(em.physical, phys) - em.chain_offset, energy(m, s), 1e-12);
    }
  }
}

TEST(Pipeline, TriangleAntiferromagnetGroundUnembeds) {
  IsingModel m(3);
  for (const auto& [i, j] : kTriangle) m.set_J(i, j, 1.0);
  const Embedding e{{0, {0}}, {1, {4}}, {2, {3, 7}}};
  const HardwareGraph g = chimera_graph(1, 1, 4);
  const auto logical = brute_force_solve(m);
  for (double cs : {2.0, 3.0}) {
    const EmbeddedModel em = embed_model(m, e, g, cs);
    const GroundStates phys = brute_force_solve(em.physical);
    for (const auto& cfg : phys.configs) {
      const Unembedded u = unembed(cfg, e, 0);
      EXPECT_EQ(u.chain_break_fraction, 0.0);
      EXPECT_NE(std::find(logical.configs.begin(), logical.configs.end(), u.spins), logical.configs.end());
    }
  }
}

TEST(Unembed, MajorityAndBreaks) {
  const Embedding e{{0, {0, 1, 2}}, {1, {3}}};
  const Unembedded u = unembed({1, 1, -1, -1}, e, 0);
  EXPECT_EQ(u.spins, (std::vector<int>{1, -1}));
  EXPECT_DOUBLE_EQ(u.chain_break_fraction, 0.5);
  const Unembedded all = unembed({-1, -1, -1, 1}, e, 0);
  EXPECT_EQ(all.spins, (std::vector<int>{-1, 1}));
  EXPECT_DOUBLE_EQ(all.chain_break_fraction, 0.0);
}

TEST(Unembed, TieBreakDeterministic) {
  const Embedding e{{0, {0, 1}}};
  const Unembedded a = unembed({1, -1}, e, 7);
  EXPECT_EQ(a.spins, unembed({1, -1}, e, 7).spins);
  EXPECT_DOUBLE_EQ(a.chain_break_fraction, 1.0);
  std::set<int> outcomes;
  for (std::uint64_t seed = 0; seed < 32; ++seed) outcomes.insert(unembed({1, -1}, e, seed).spins[0]);
  EXPECT_EQ(outcomes, (std::set<int>{-1, 1}));
}

TEST(Unembed, MissingNode) { EXPECT_THROW(unembed({1, 1}, {{0, {0, 5}}}, 0), IndexError); }

TEST(Unembed, SampleSetRows) {
  SampleSet phys;
  phys.num_variables = 8;
  phys.domain = ValueDomain::spin;
  phys.rows.push_back({"10011001", std::nullopt, 7, 0.0});
  phys.rows.push_back({"10010000", std::nullopt, 3, 0.0});
  const Embedding e{{0, {0}}, {1, {4}}, {2, {3, 7}}};
  IsingModel m(3);
  for (const auto& [i, j] : kTriangle) m.set_J(i, j, 1.0);
  const SampleSet out = unembed_samples(phys, e, 0, &m);
  EXPECT_EQ(out.num_variables, 3);
  EXPECT_EQ(out.total_shots(), 10);
  bool saw_broken = false;
  for (const auto& row : out.rows) {
    ASSERT_TRUE(row.energy.has_value());
    if (row.chain_break_fraction > 0) {
      saw_broken = true;
      EXPECT_NEAR(row.chain_break_fraction, 1.0 / 3, 1e-12);
    }
  }
  EXPECT_TRUE(saw_broken);
}

TEST(EdgeList, RoundTripAndComments) {
  const HardwareGraph g = chimera_graph(1, 2, 2);
  std::stringstream io;
  write_edge_list(io, g);
  const HardwareGraph back = read_edge_list(io, g.num_nodes);
  EXPECT_EQ(back.edges, g.edges);
  EXPECT_EQ(back.layout, "file");
  std::istringstream in("# pegasus fragment\n0 3\n\n3 1  # tail\n");
  const HardwareGraph small = read_edge_list(in);
  EXPECT_EQ(small.num_nodes, 4);
  EXPECT_TRUE(small.has_edge(1, 3));
  std::istringstream bad("0 0\n");
  EXPECT_THROW(read_edge_list(bad), Error);
  std::istringstream junk("0 x\n");
  EXPECT_THROW(read_edge_list(junk), Error);
}

}  // namespace
}  // namespace qdesk
