#include <gtest/gtest.h>

#include "dynls/solution_state.hpp"
#include "test_graphs.hpp"

using namespace dynls;
using namespace dynls::testing;

namespace {
VertexSet set_of(const Graph& g, std::vector<Vertex> vs) { return VertexSet::from(g.num_vertices(), vs); }
}  // namespace

TEST(SolutionState, NewStateExamples) {
  Graph g = p3();
  SolutionState s(g, set_of(g, {0, 2}));
  EXPECT_EQ(s.weight(), 2);
  EXPECT_EQ(s.tightness(1), 2u);
  EXPECT_EQ(s.loss(1), -3);
  EXPECT_TRUE(s.free_pool().empty());

  SolutionState e(g, VertexSet(3));
  EXPECT_EQ(e.free_pool().sorted(), (std::vector<Vertex>{0, 1, 2}));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(e.loss(v), -g.weight(v));

  Graph c = c4();
  SolutionState t(c, set_of(c, {0, 2}));
  EXPECT_EQ(t.weight(), 6);
  EXPECT_EQ(t.tightness(1), 2u);
  EXPECT_EQ(t.tightness(3), 2u);
  EXPECT_TRUE(t.consistent());
}

TEST(SolutionState, RejectsDependentInitial) {
  Graph g = p3();
  EXPECT_THROW(SolutionState(g, set_of(g, {0, 1})), std::invalid_argument);
  EXPECT_THROW(SolutionState(g, VertexSet(4)), std::invalid_argument);
}

TEST(SolutionState, AddExamples) {
  Graph g = p3();
  SolutionState s(g, VertexSet(3));
  s.add(1);
  EXPECT_EQ(s.weight(), 5);
  EXPECT_EQ(s.tightness(0), 1u);
  EXPECT_EQ(s.tightness(2), 1u);

  SolutionState a(g, set_of(g, {0}));
  a.add(2);
  EXPECT_EQ(a.weight(), 2);

  SolutionState b(g, set_of(g, {0}));
  EXPECT_THROW(b.add(1), std::invalid_argument);
  EXPECT_THROW(b.add(0), std::invalid_argument);
  EXPECT_TRUE(b.consistent());
}

TEST(SolutionState, RemoveExamples) {
  Graph g = p3();
  SolutionState s(g, set_of(g, {1}));
  s.remove(1);
  EXPECT_TRUE(s.solution().empty());
  EXPECT_EQ(s.free_pool().size(), 3u);

  Graph c = c4();
  SolutionState t(c, set_of(c, {0, 2}));
  t.remove(0);
  EXPECT_EQ(t.tightness(1), 1u);
  EXPECT_EQ(t.tightness(3), 1u);

  SolutionState e(g, VertexSet(3));
  EXPECT_THROW(e.remove(0), std::invalid_argument);
}

TEST(SolutionState, InsertWithRemovalExamples) {
  Graph g = p3();
  SolutionState s(g, set_of(g, {0, 2}));
  Weight before = s.weight();
  Weight loss = s.loss(1);
  auto removed = s.insert_with_removal(1);
  std::sort(removed.begin(), removed.end());
  EXPECT_EQ(removed, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{1}));
  EXPECT_EQ(s.weight(), 5);
  EXPECT_EQ(s.weight() - before, -loss);

  SolutionState f(g, set_of(g, {0}));
  EXPECT_TRUE(f.insert_with_removal(2).empty());
  EXPECT_EQ(f.weight(), 2);

  Graph c = c4();
  SolutionState t(c, set_of(c, {1, 3}));
  auto r = t.insert_with_removal(0);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(t.weight(), 3);
  EXPECT_TRUE(t.consistent());
}

TEST(SolutionState, MaximizeExamples) {
  Graph g = p3();
  SolutionState s(g, VertexSet(3));
  EXPECT_EQ(s.maximize(), 1u);
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{1}));
  EXPECT_EQ(s.maximize(), 0u);

  Graph c = c4();
  SolutionState t(c, VertexSet(4));
  t.maximize();
  EXPECT_EQ(t.solution().sorted(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(t.weight(), 6);
}

TEST(SolutionState, MaximizeTiesByAscendingId) {
  Graph g = path({2, 2, 2, 2});
  SolutionState s(g, VertexSet(4));
  s.maximize();
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{0, 2}));
}

TEST(SolutionState, TickAndAges) {
  Graph g = c4();
  SolutionState s(g, VertexSet(4));
  for (int i = 0; i < 3; ++i) s.tick(false);
  EXPECT_EQ(s.uiter(), 3u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(s.age(v), 3u);
  s.tick(true);
  EXPECT_EQ(s.uiter(), 0u);

  s.add(0);
  s.tick(false);
  EXPECT_EQ(s.age(0), 1u);
  EXPECT_EQ(s.age(1), 5u);
  EXPECT_EQ(s.freq(0), 1u);
  EXPECT_EQ(s.change(0), 1);
  s.remove(0);
  EXPECT_EQ(s.freq(0), 2u);
  EXPECT_EQ(s.change(0), 0);
}

TEST(SolutionState, AssignReachesTarget) {
  Graph g = c4();
  SolutionState s(g, set_of(g, {0, 2}));
  s.assign(set_of(g, {1, 3}));
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(s.weight(), 2);
  EXPECT_TRUE(s.consistent());
}

TEST(SolutionState, RandomOperationsStayConsistent) {
  Rng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(1 + rng.below(40), 0.05 + 0.3 * rng.unit(), rng);
    SolutionState s(g, VertexSet(g.num_vertices()));
    std::vector<std::int64_t> net(g.num_vertices(), 0);
    auto record = [&](const VertexSet& before) {
      for (Vertex u = 0; u < g.num_vertices(); ++u) net[u] += s.in_solution(u) - before.contains(u);
    };
    for (int step = 0; step < 60; ++step) {
      const VertexSet before = s.solution();
      const Weight weight_before = s.weight();
      Vertex v = static_cast<Vertex>(rng.below(g.num_vertices()));
      switch (rng.below(4)) {
        case 0:
          if (!s.in_solution(v) && s.tightness(v) == 0) s.add(v);
          break;
        case 1:
          if (s.in_solution(v)) s.remove(v);
          break;
        case 2:
          if (!s.in_solution(v)) {
            Weight expected = s.weight() - s.loss(v);
            s.insert_with_removal(v);
            ASSERT_EQ(s.weight(), expected);
          }
          break;
        default:
          s.maximize();
          ASSERT_TRUE(is_maximal(g, s.solution()));
          ASSERT_GE(s.weight(), weight_before);
      }
      record(before);
      for (Vertex u = 0; u < g.num_vertices(); ++u) ASSERT_EQ(s.change(u), net[u]);
      s.tick(rng.coin());
      ASSERT_TRUE(s.consistent());
      std::size_t negatives = 0;
      for (Vertex u = 0; u < g.num_vertices(); ++u) negatives += !s.in_solution(u) && s.loss(u) < 0;
      ASSERT_EQ(negatives, s.improving_count());
    }
  }
}
