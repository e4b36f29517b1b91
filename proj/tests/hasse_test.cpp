// SPDX-License-Identifier: Apache-2.0
#include <bruhat/hasse.hpp>
#include <bruhat/snf.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace bruhat;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::map<std::pair<std::string, std::string>, std::string> labelled_edges(const HasseDiagram& g) {
  std::map<std::pair<std::string, std::string>, std::string> out;
  for (const auto& e : g.edges()) {
    out[{g.vertex(e.source).to_string(), g.vertex(e.target).to_string()}] = to_decimal(e.weight);
  }
  return out;
}

// Oracle: sum over explicit chains, found by depth-first search on the raw
// cover relations and weights.
BigInt chain_sum(int n, Order order, WeightSystem weights, const Permutation& u, const Permutation& v) {
  if (u == v) return 1;
  if (length(u) >= length(v)) return 0;
  BigInt total = 0;
  const auto step = [&](const Permutation& next, const BigInt& weight) {
    total += weight * chain_sum(n, order, weights, next, v);
  };
  if (order == Order::Weak) {
    for (const auto& c : weak_covers_up(u)) {
      step(c.target, weights == WeightSystem::Unit ? BigInt(1) : BigInt(c.index));
    }
  } else {
    for (const auto& c : strong_covers_up(u)) {
      BigInt weight = 1;
      if (weights == WeightSystem::Chevalley) weight = c.j - c.i;
      if (weights == WeightSystem::Code) {
        const auto a = lehmer_code(u);
        const auto b = lehmer_code(c.target);
        weight = 0;
        for (std::size_t k = 0; k < a.size(); ++k) weight += std::abs(a[k] - b[k]);
      }
      step(c.target, weight);
    }
  }
  return total;
}

}  // namespace

TEST(Weights, Nabla) {
  EXPECT_EQ(nabla_weight(P("123"), 1), 1);
  EXPECT_EQ(nabla_weight(P("123"), 2), 2);
  EXPECT_EQ(nabla_weight(P("213"), 2), 2);
  EXPECT_THROW(nabla_weight(P("213"), 1), std::invalid_argument);
}

TEST(Weights, Code) {
  EXPECT_EQ(code_weight(P("132"), 1, 2), 3);
  EXPECT_EQ(code_weight(P("123"), 1, 2), 1);
  EXPECT_EQ(code_weight(P("213"), 1, 3), 1);
  EXPECT_THROW(code_weight(P("123"), 1, 3), std::invalid_argument);
}

TEST(Weights, Chevalley) {
  EXPECT_EQ(chevalley_weight(1, 2), 1);
  EXPECT_EQ(chevalley_weight(1, 3), 2);
  EXPECT_EQ(chevalley_weight(2, 5), 3);
}

TEST(Hasse, WeakNablaThree) {
  const auto g = HasseDiagram::build(3, Order::Weak, WeightSystem::NablaIndex);
  const std::map<std::pair<std::string, std::string>, std::string> expected = {
      {{"123", "213"}, "1"}, {{"123", "132"}, "2"}, {{"213", "231"}, "2"},
      {{"132", "312"}, "1"}, {{"231", "321"}, "1"}, {{"312", "321"}, "2"}};
  EXPECT_EQ(labelled_edges(g), expected);
}

TEST(Hasse, StrongCodeThree) {
  const auto g = HasseDiagram::build(3, Order::Strong, WeightSystem::Code);
  const auto edges = labelled_edges(g);
  ASSERT_EQ(edges.size(), 8u);
  const std::pair<std::string, std::string> special{"132", "312"};
  for (const auto& [key, weight] : edges) EXPECT_EQ(weight, key == special ? "3" : "1");
}

TEST(Hasse, StrongChevalleyThree) {
  const auto g = HasseDiagram::build(3, Order::Strong, WeightSystem::Chevalley);
  const auto edges = labelled_edges(g);
  ASSERT_EQ(edges.size(), 8u);
  EXPECT_EQ(edges.at({"213", "312"}), "2");
  EXPECT_EQ(edges.at({"132", "231"}), "2");
  EXPECT_EQ(std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.second == "2"; }), 2);
}

TEST(Hasse, StrongChevalleyTwo) {
  const auto g = HasseDiagram::build(2, Order::Strong, WeightSystem::Chevalley);
  EXPECT_EQ(labelled_edges(g), (std::map<std::pair<std::string, std::string>, std::string>{{{"12", "21"}, "1"}}));
}

TEST(Hasse, IncompatiblePairs) {
  EXPECT_THROW(HasseDiagram::build(3, Order::Strong, WeightSystem::NablaIndex), std::invalid_argument);
  EXPECT_THROW(HasseDiagram::build(3, Order::Weak, WeightSystem::Code), std::invalid_argument);
  EXPECT_THROW(HasseDiagram::build(3, Order::Weak, WeightSystem::Chevalley), std::invalid_argument);
  EXPECT_NO_THROW(HasseDiagram::build(3, Order::Weak, WeightSystem::Unit));
}

TEST(PathCount, Examples) {
  const auto weak = HasseDiagram::build(3, Order::Weak, WeightSystem::NablaIndex);
  const auto code = HasseDiagram::build(3, Order::Strong, WeightSystem::Code);
  EXPECT_EQ(weighted_path_count(weak, P("123"), P("321")), 6);
  EXPECT_EQ(weighted_path_count(code, P("123"), P("321")), 6);
  EXPECT_EQ(weighted_path_count(weak, P("123"), P("231")), 2);
  EXPECT_EQ(weighted_path_count(weak, P("231"), P("231")), 1);
  EXPECT_EQ(weighted_path_count(weak, P("132"), P("231")), 0);
}

TEST(PathCount, MatchesChainEnumeration) {
  const std::pair<Order, WeightSystem> systems[] = {{Order::Weak, WeightSystem::NablaIndex},
                                                    {Order::Weak, WeightSystem::Unit},
                                                    {Order::Strong, WeightSystem::Code},
                                                    {Order::Strong, WeightSystem::Chevalley},
                                                    {Order::Strong, WeightSystem::Unit}};
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [order, weights] : systems) {
      const auto g = HasseDiagram::build(n, order, weights);
      for (const auto& rank : g.ranks()) {
        for (const auto& u : rank) {
          const auto from = path_counts_from(g, u);
          for (int id = 0; id < static_cast<int>(g.vertex_count()); ++id) {
            ASSERT_EQ(from[id], chain_sum(n, order, weights, u, g.vertex(id)))
                << u.to_string() << " -> " << g.vertex(id).to_string();
          }
        }
      }
    }
  }
}

TEST(PathCount, TopEqualsFactorial) {
  for (int n = 2; n <= 6; ++n) {
    const BigInt expected = factorial(static_cast<unsigned long>(max_length(n)));
    for (const auto& [order, weights] : {std::pair{Order::Weak, WeightSystem::NablaIndex},
                                        std::pair{Order::Strong, WeightSystem::Code},
                                        std::pair{Order::Strong, WeightSystem::Chevalley}}) {
      const auto g = HasseDiagram::build(n, order, weights);
      EXPECT_EQ(weighted_path_count(g, Permutation::identity(n), longest_element(n)), expected) << n;
    }
  }
}

TEST(PathCount, FromAndToAgree) {
  const auto g = HasseDiagram::build(4, Order::Strong, WeightSystem::Code);
  const auto w0 = longest_element(4);
  const auto to_top = path_counts_to(g, w0);
  for (int id = 0; id < static_cast<int>(g.vertex_count()); ++id) {
    EXPECT_EQ(to_top[id], weighted_path_count(g, g.vertex(id), w0));
  }
}

TEST(PathCount, ReflectedIntervals) {
  for (const auto weights : {WeightSystem::Code, WeightSystem::Chevalley}) {
    const auto g = HasseDiagram::build(4, Order::Strong, weights);
    for (int a = 0; a < static_cast<int>(g.vertex_count()); ++a) {
      const auto from = path_counts_from(g, g.vertex(a));
      for (int b = 0; b < static_cast<int>(g.vertex_count()); ++b) {
        const auto u = g.vertex(a);
        const auto v = g.vertex(b);
        EXPECT_EQ(from[b], weighted_path_count(g, left_multiply_longest(v), left_multiply_longest(u)));
      }
    }
  }
}

TEST(LayerMatrix, Examples) {
  const auto code = HasseDiagram::build(3, Order::Strong, WeightSystem::Code);
  const auto weak = HasseDiagram::build(3, Order::Weak, WeightSystem::NablaIndex);
  EXPECT_EQ(layer_matrix(code, 1, 2), (IntMatrix{{1, 3}, {1, 1}}));
  EXPECT_EQ(layer_matrix(weak, 1, 2), (IntMatrix{{0, 1}, {2, 0}}));
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(layer_matrix(code, k, k), IntMatrix::identity(code.rank(k).size()));
  }
  EXPECT_THROW(layer_matrix(code, 2, 1), std::out_of_range);
}

TEST(LayerMatrix, Factorizes) {
  for (const auto& [order, weights] : {std::pair{Order::Weak, WeightSystem::NablaIndex},
                                      std::pair{Order::Strong, WeightSystem::Code}}) {
    const auto g = HasseDiagram::build(4, order, weights);
    for (int a = 0; a <= 6; ++a)
      for (int b = a; b <= 6; ++b)
        for (int c = b; c <= 6; ++c)
          EXPECT_EQ(layer_matrix(g, a, c), layer_matrix(g, a, b) * layer_matrix(g, b, c));
  }
}

TEST(Hasse, CodeWeightsOddAndLocal) {
  for (int n = 2; n <= 5; ++n) {
    const auto g = HasseDiagram::build(n, Order::Strong, WeightSystem::Code);
    for (const auto& e : g.edges()) {
      EXPECT_EQ(e.weight % 2, 1);
      const auto& u = g.vertex(e.source);
      const auto& w = g.vertex(e.target);
      const auto a = lehmer_code(u);
      const auto b = lehmer_code(w);
      int differing = 0;
      for (std::size_t k = 0; k < a.size(); ++k) differing += a[k] != b[k];
      int moved = 0;
      for (int p = 1; p <= n; ++p) moved += u.at(p) != w.at(p);
      EXPECT_EQ(moved, 2);
      EXPECT_LE(differing, 2);
    }
  }
}

TEST(Hasse, WeakEdgesInsideStrong) {
  const auto weak = HasseDiagram::build(5, Order::Weak, WeightSystem::Unit);
  const auto strong = HasseDiagram::build(5, Order::Strong, WeightSystem::Unit);
  for (const auto& e : weak.edges()) {
    EXPECT_TRUE(strong.edge_weight(weak.vertex(e.source), weak.vertex(e.target)).has_value());
  }
}

TEST(Hasse, W0Symmetry) {
  EXPECT_TRUE(w0_symmetry_check(HasseDiagram::build(4, Order::Weak, WeightSystem::NablaIndex)).holds);
  EXPECT_TRUE(w0_symmetry_check(HasseDiagram::build(4, Order::Strong, WeightSystem::Code)).holds);
  EXPECT_TRUE(w0_symmetry_check(HasseDiagram::build(5, Order::Strong, WeightSystem::Chevalley)).holds);
}

TEST(Hasse, RankSizesMatchRecurrence) {
  for (int n = 1; n <= 6; ++n) {
    const auto g = HasseDiagram::build(n, Order::Strong, WeightSystem::Unit);
    const auto sizes = rank_sizes(n);
    ASSERT_EQ(sizes.size(), g.ranks().size());
    for (std::size_t k = 0; k < sizes.size(); ++k) EXPECT_EQ(sizes[k], g.ranks()[k].size());
  }
  EXPECT_EQ(rank_size(3, 1), 2);
  EXPECT_EQ(rank_size(4, 2), 5);
  EXPECT_EQ(rank_size(6, 0), 1);
}

TEST(Hasse, Export) {
  const auto g = HasseDiagram::build(2, Order::Weak, WeightSystem::NablaIndex);
  EXPECT_EQ(to_json(g),
            R"({"n":"2","order":"weak","weights":"nabla","ranks":[["12"],["21"]],"edges":[["12","21","1"]]})");
  const auto dot = to_dot(g);
  EXPECT_NE(dot.find("\"12\" -> \"21\" [label=\"1\"];"), std::string::npos);
  EXPECT_EQ(to_json(g), to_json(HasseDiagram::build(2, Order::Weak, WeightSystem::NablaIndex)));
}

TEST(Hasse, ParseNames) {
  EXPECT_EQ(parse_order("strong"), Order::Strong);
  EXPECT_EQ(parse_weight_system("chevalley"), WeightSystem::Chevalley);
  EXPECT_THROW(parse_weight_system("bogus"), std::invalid_argument);
}
