#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <map>

#include "dynls/perturb.hpp"
#include "test_graphs.hpp"

using namespace dynls;
using namespace dynls::testing;

TEST(SampleInsertCount, MinimumAndExpectation) {
  PerturbConfig cfg;
  Rng rng(1);
  double sum = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    auto num = sample_insert_count(cfg, rng);
    ASSERT_GE(num, 3u);
    sum += num;
  }
  EXPECT_NEAR(sum / draws, cfg.base_num + 3.0, 0.03);
}

TEST(SampleInsertCount, GeometricDistributionChiSquared) {
  PerturbConfig cfg;
  cfg.base_num = 4;
  Rng rng(42);
  const int draws = 100000;
  const int buckets = 10;  // pro_num = 2..10, then >= 11 pooled
  std::vector<double> observed(buckets, 0);
  for (int k = 0; k < draws; ++k) {
    int pro = static_cast<int>(sample_insert_count(cfg, rng) - cfg.base_num);
    observed[std::min(pro - 2, buckets - 1)] += 1;
  }
  double stat = 0;
  double tail = 1.0;
  for (int b = 0; b < buckets; ++b) {
    double p = b + 1 < buckets ? std::ldexp(1.0, -(b + 1)) : tail;
    tail -= p;
    double expected = p * draws;
    stat += (observed[b] - expected) * (observed[b] - expected) / expected;
  }
  boost::math::chi_squared dist(buckets - 1);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, stat)), 0.01);
}

TEST(PickStrategy, UniformAndSeeded) {
  Rng a(9), b(9);
  std::map<ScoreStrategy, int> count;
  for (int i = 0; i < 10000; ++i) {
    ScoreStrategy s = pick_strategy(a);
    ASSERT_EQ(s, pick_strategy(b));
    ++count[s];
  }
  ASSERT_EQ(count.size(), kAllStrategies.size());
  for (auto [s, c] : count) {
    EXPECT_GE(c / 10000.0, 0.22) << to_string(s);
    EXPECT_LE(c / 10000.0, 0.28) << to_string(s);
  }
}

TEST(SavpPerturb, LossStrategyOnPathOfThree) {
  Graph g = p3();
  SolutionState s(g, VertexSet::from(3, std::vector<Vertex>{0, 2}));
  PerturbConfig cfg;
  Rng rng(3);
  savp_perturb(s, ScoreStrategy::kLoss, 1, cfg, rng);
  EXPECT_EQ(s.solution().sorted(), (std::vector<Vertex>{1}));
}

TEST(SavpPerturb, AgeTieGoesToLowestId) {
  Graph g = path({1, 1, 1, 1, 1});
  SolutionState s(g, VertexSet::from(5, std::vector<Vertex>{0, 2, 4}));
  PerturbConfig cfg;
  Rng rng(3);
  savp_perturb(s, ScoreStrategy::kAge, 1, cfg, rng);
  EXPECT_TRUE(s.in_solution(1));
  EXPECT_TRUE(s.consistent());
}

TEST(SavpPerturb, NumLargerThanPool) {
  Graph g = c4();
  SolutionState s(g, VertexSet::from(4, std::vector<Vertex>{0, 2}));
  PerturbConfig cfg;
  Rng rng(3);
  savp_perturb(s, ScoreStrategy::kFreq, 50, cfg, rng);
  EXPECT_TRUE(s.consistent());
  EXPECT_TRUE(is_maximal(g, s.solution()));
  EXPECT_THROW(savp_perturb(s, ScoreStrategy::kFreq, 0, cfg, rng), std::invalid_argument);
}

TEST(SavpPerturb, WholeGraphInSolutionIsSkipped) {
  Graph g = make(3, {}, {1, 1, 1});
  SolutionState s(g, VertexSet::from(3, std::vector<Vertex>{0, 1, 2}));
  PerturbConfig cfg;
  Rng rng(3);
  savp_perturb(s, ScoreStrategy::kChange, 3, cfg, rng);
  EXPECT_EQ(s.solution().size(), 3u);
}

TEST(SavpPerturb, KeepsIndependenceOnRandomGraphs) {
  Rng rng(55);
  PerturbConfig cfg;
  cfg.bms_t = 5;
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(5 + rng.below(80), 0.05 + 0.2 * rng.unit(), rng);
    SolutionState s(g, VertexSet(g.num_vertices()));
    s.maximize();
    for (int k = 0; k < 20; ++k) {
      savp_perturb(s, pick_strategy(rng), sample_insert_count(cfg, rng), cfg, rng);
      s.tick(false);
      ASSERT_TRUE(s.consistent());
      ASSERT_TRUE(is_maximal(g, s.solution()));
    }
  }
}

TEST(PerturbConfig, EscalationSchedule) {
  PerturbConfig cfg;
  cfg.escalate_every = 10;
  cfg.max_base_num = 3;
  for (std::uint64_t u = 1; u <= 50; ++u) cfg.on_stagnation(u);
  EXPECT_EQ(cfg.base_num, 3u);
  cfg.on_improvement();
  EXPECT_EQ(cfg.base_num, 1u);
  cfg.bms_t = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(SavpPerturb, DeterministicPerSeed) {
  Rng gen(60);
  Graph g = random_graph(120, 0.05, gen);
  PerturbConfig cfg;
  auto run = [&](std::uint64_t seed) {
    SolutionState s(g, VertexSet(g.num_vertices()));
    s.maximize();
    Rng rng(seed);
    for (int k = 0; k < 30; ++k) {
      savp_perturb(s, ScoreStrategy::kFreq, 4, cfg, rng);
      s.tick(false);
    }
    return s.solution().sorted();
  };
  EXPECT_EQ(run(5), run(5));
}

TEST(SavpPerturb, LossStrategyWithNegativeLossNeverLoses) {
  Rng rng(61);
  PerturbConfig cfg;  // pools below bms_t are scanned whole
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(5 + rng.below(40), 0.1 + 0.3 * rng.unit(), rng);
    SolutionState s(g, VertexSet(g.num_vertices()));
    for (int k = 0; k < 4; ++k) {
      Vertex v = static_cast<Vertex>(rng.below(g.num_vertices()));
      if (!s.in_solution(v)) s.insert_with_removal(v);
    }
    if (s.improving_count() == 0) continue;
    const Weight before = s.weight();
    savp_perturb(s, ScoreStrategy::kLoss, 1, cfg, rng);
    EXPECT_GE(s.weight(), before);
  }
}
