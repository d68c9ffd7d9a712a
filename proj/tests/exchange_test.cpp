#include <gtest/gtest.h>

#include "dynls/exchange.hpp"
#include "dynls/oracle.hpp"
#include "test_graphs.hpp"

using namespace dynls;
using namespace dynls::testing;

namespace {

VertexSet set_of(const Graph& g, std::vector<Vertex> vs) { return VertexSet::from(g.num_vertices(), vs); }

// v=0 (2), u=1 (2), a=2 (3), b=3 (3); edges v-a, v-b, u-b.
Graph exchange_graph() { return make(4, {{0, 2}, {0, 3}, {1, 3}}, {2, 2, 3, 3}); }

// Optimal for module A on P3 and friends: every loss >= 0 and maximal.
void expect_local_optimum(const SolutionState& s) {
  for (Vertex v = 0; v < s.graph().num_vertices(); ++v)
    if (!s.in_solution(v)) {
      EXPECT_GE(s.loss(v), 0);
    }
}

}  // namespace

TEST(OmegaOne, Examples) {
  Graph g = p3();
  SolutionState s(g, set_of(g, {0, 2}));
  EXPECT_TRUE(omega_one_pass(s));
  EXPECT_EQ(s.weight(), 5);
  EXPECT_FALSE(omega_one_pass(s));

  SolutionState f(g, set_of(g, {0}));
  EXPECT_TRUE(omega_one_pass(f));
  EXPECT_TRUE(f.consistent());
}

TEST(TwoImprovement, Examples) {
  Graph st = star(3, {2, 2});
  SolutionState s(st, set_of(st, {0}));
  EXPECT_TRUE(two_improvement_pass(s));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(s.weight(), 4);

  Graph tri = make(3, {{0, 1}, {1, 2}, {0, 2}}, {3, 2, 2});
  SolutionState t(tri, set_of(tri, {0}));
  EXPECT_FALSE(two_improvement_pass(t));

  Graph light = star(3, {1, 1});
  SolutionState l(light, set_of(light, {0}));
  EXPECT_FALSE(two_improvement_pass(l));
}

TEST(XyExchange, OneOneExample) {
  Graph g = exchange_graph();
  EXPECT_EQ(brute_force_mwis(g).set.sorted(), (std::vector<Vertex>{2, 3}));
  SolutionState s(g, set_of(g, {0, 1}));
  EXPECT_TRUE(xy_exchange(s, 0, 1, 1));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(s.weight(), 6);
}

TEST(XyExchange, NoTightnessTwoNeighbor) {
  Graph st = star(3, {2, 2});
  SolutionState s(st, set_of(st, {0}));
  EXPECT_FALSE(xy_exchange(s, 0, 1, 1));
}

TEST(XyExchange, ZeroGainRejected) {
  // S = {a, b} weighs 4 == v + u.
  Graph g = make(4, {{0, 2}, {0, 3}, {1, 3}}, {2, 2, 2, 2});
  SolutionState s(g, set_of(g, {0, 1}));
  EXPECT_FALSE(xy_exchange(s, 0, 1, 1));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{0, 1}));
}

TEST(XyExchange, Preconditions) {
  Graph g = exchange_graph();
  SolutionState s(g, set_of(g, {0, 1}));
  EXPECT_THROW(xy_exchange(s, 2, 1, 1), std::invalid_argument);
  EXPECT_THROW(xy_exchange(s, 0, 0, 0), std::invalid_argument);
}

TEST(X0Exchange, Examples) {
  Graph st = star(3, {1, 1, 1, 1});
  SolutionState s(st, set_of(st, {0}));
  EXPECT_TRUE(x0_exchange(s, 0));
  EXPECT_EQ(s.weight(), 4);

  Graph one = star(3, {2});
  SolutionState o(one, set_of(one, {0}));
  EXPECT_FALSE(x0_exchange(o, 0));

  Graph c = c4();
  SolutionState t(c, set_of(c, {0, 2}));
  EXPECT_FALSE(x0_exchange(t, 0));
  EXPECT_THROW(x0_exchange(t, 1), std::invalid_argument);
}

TEST(TwoThree, Examples) {
  Graph a = path({2, 1, 2, 1, 2});
  SolutionState s(a, set_of(a, {0, 2, 4}));
  EXPECT_FALSE(two_three_pass(s));

  Graph b = path({1, 3, 1, 3, 1});
  SolutionState t(b, set_of(b, {0, 2, 4}));
  EXPECT_FALSE(two_three_pass(t));

  SolutionState e(b, VertexSet(5));
  EXPECT_FALSE(two_three_pass(e));
}

TEST(TwoThree, AppliesWhenAllThreeExist) {
  // u=0, v=1 in CS share w=2; a=3 hangs off u, b=4 off v.
  Graph g = make(5, {{0, 2}, {1, 2}, {0, 3}, {1, 4}}, {2, 2, 2, 2, 2});
  SolutionState s(g, set_of(g, {0, 1}));
  EXPECT_TRUE(two_three_pass(s));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_TRUE(s.consistent());
}

TEST(ModuleA, Examples) {
  Graph g = p3();
  SolutionState s(g, set_of(g, {0, 2}));
  EXPECT_TRUE(run_module_a(s));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{1}));
  EXPECT_FALSE(run_module_a(s));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{1}));

  Graph x = exchange_graph();
  SolutionState t(x, set_of(x, {0, 1}));
  EXPECT_TRUE(run_module_a(t));
  EXPECT_EQ(t.solution().sorted(), (std::vector<Vertex>{2, 3}));
}

TEST(ModuleB, Examples) {
  Graph st = star(3, {1, 1, 1, 1});
  SolutionState s(st, set_of(st, {0}));
  EXPECT_TRUE(run_module_b(s));
  EXPECT_EQ(s.weight(), 4);
  EXPECT_FALSE(run_module_b(s));

  Graph empty = make(0, {}, {});
  SolutionState e(empty, VertexSet(0));
  EXPECT_FALSE(run_module_b(e));
}

TEST(ModuleEm, Examples) {
  Graph x = exchange_graph();
  SolutionState s(x, set_of(x, {0, 1}));
  EXPECT_TRUE(run_module_em(s, {1, 1}));
  EXPECT_EQ(s.weight(), 6);
  EXPECT_FALSE(run_module_em(s, {1, 1}));

  Graph g = p3();
  SolutionState p(g, set_of(g, {0, 2}));
  EXPECT_TRUE(run_module_em(p, {3, 2}));
  EXPECT_EQ(p.solution().sorted(), (std::vector<Vertex>{1}));
  EXPECT_THROW(run_module_em(p, {4, 4}), std::invalid_argument);
}

TEST(Modules, DescentKeepsInvariantsAndNeverLosesWeight) {
  Rng rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_graph(5 + rng.below(60), 0.03 + 0.3 * rng.unit(), rng);
    SolutionState s(g, VertexSet(g.num_vertices()));
    s.maximize();
    Weight w = s.weight();
    run_module_a(s);
    ASSERT_TRUE(s.consistent());
    ASSERT_GE(s.weight(), w);
    expect_local_optimum(s);
    w = s.weight();
    run_module_b(s);
    ASSERT_GE(s.weight(), w);
    for (EmModule m : kEmModules) {
      w = s.weight();
      run_module_em(s, m);
      ASSERT_GE(s.weight(), w);
      ASSERT_TRUE(s.consistent());
      ASSERT_TRUE(is_maximal(g, s.solution()));
    }
    EXPECT_LE(s.weight(), g.num_vertices() <= 32 ? brute_force_mwis(g).weight : g.total_weight());
  }
}

TEST(Rewards, SelectionProbabilities) {
  RewardTable rt;
  for (std::size_t i = 0; i < kEmModules.size(); ++i) EXPECT_DOUBLE_EQ(rt.probability(i), 1.0 / 6);
  rt.re = {5, 1, 1, 1, 1, 1};
  EXPECT_DOUBLE_EQ(rt.probability(0), 0.5);

  Rng rng(4);
  std::vector<int> hits(6, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++hits[module_index(select_module(rt, rng))];
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(hits[i] / static_cast<double>(draws), rt.probability(i), 0.01);
}

TEST(Rewards, UpdateArithmetic) {
  RewardTable rt;
  update_reward(rt, {1, 2}, RoundOutcome::kNewGlobalBest);
  EXPECT_EQ(rt.re[1], 4);
  EXPECT_EQ(rt.sum_re, 9);

  RewardTable floor;
  update_reward(floor, {1, 1}, RoundOutcome::kNone);
  EXPECT_EQ(floor.re[0], 1);
  EXPECT_EQ(floor.sum_re, 5);

  RewardTable mid;
  update_reward(mid, {3, 2}, RoundOutcome::kImprovedCurrent);
  update_reward(mid, {3, 2}, RoundOutcome::kImprovedMovesOnly);
  EXPECT_EQ(mid.re[5], 4);
  EXPECT_EQ(mid.sum_re, 9);
  update_reward(mid, {3, 2}, RoundOutcome::kNone);
  EXPECT_EQ(mid.re[5], 3);
  EXPECT_EQ(mid.sum_re, 8);
}

TEST(ModuleA, ReachesJointLocalOptimum) {
  Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(5 + rng.below(60), 0.03 + 0.3 * rng.unit(), rng);
    SolutionState s(g, VertexSet(g.num_vertices()));
    run_module_a(s);
    const auto before = s.solution().sorted();
    EXPECT_FALSE(omega_one_pass(s));
    EXPECT_FALSE(two_improvement_pass(s));
    EXPECT_FALSE(xy_exchange_pass(s, 1, 1));
    EXPECT_EQ(s.solution().sorted(), before);
  }
}
