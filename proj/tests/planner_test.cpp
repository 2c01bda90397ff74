#include "gtpmm/planner.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gtpmm/errors.hpp"
#include "gtpmm/oracle.hpp"
#include "test_support.hpp"

namespace gtpmm {
namespace {

using testing::load_ten_poi;

std::vector<Money> money(std::initializer_list<std::int64_t> cents) {
  std::vector<Money> out;
  for (auto c : cents) out.emplace_back(c);
  return out;
}

TEST(SolveLayers, TenPoiSharedLayers) {
  const auto f = load_ten_poi();
  LegCache cache(f.net);
  const auto dp = solve_layers(cache, f.query, SharingMode::SharedIntermediate);
  ASSERT_EQ(dp.cost.size(), 3u);
  EXPECT_EQ(dp.cost[0], money({13, 13}));
  EXPECT_EQ(dp.cost[1], money({17, 18}));
  EXPECT_EQ(dp.cost[2], money({20, 21}));
  // Agent 0 ends at v10, agent 1 at v9.
  EXPECT_EQ(dp.destination_totals, money({24, 25}));
  EXPECT_EQ(dp.best_total, Money(28));
}

TEST(SolveLayers, TenPoiPerPersonLayers) {
  const auto f = load_ten_poi();
  LegCache cache(f.net);
  const auto dp = solve_layers(cache, f.query, SharingMode::PerPersonIntermediate);
  EXPECT_EQ(dp.cost[0], money({13, 13}));
  EXPECT_EQ(dp.cost[1], money({21, 23}));
  EXPECT_EQ(dp.cost[2], money({27, 29}));
  EXPECT_EQ(dp.best_total, Money(36));
}

TEST(Plan, TenPoiShared) {
  const auto f = load_ten_poi();
  const auto p = plan(f.net, f.query, SharingMode::SharedIntermediate);
  EXPECT_EQ(p.total_cost, Money(28));
  EXPECT_EQ(p.common_pois, (std::vector<PoiId>{f.v(3), f.v(5), f.v(8)}));
  EXPECT_EQ(plan_cost_from_legs(p), p.total_cost);
}

TEST(Plan, TenPoiPerPersonTieGoesToSmallerTuple) {
  const auto f = load_ten_poi();
  const auto p = plan(f.net, f.query);
  EXPECT_EQ(p.total_cost, Money(36));
  // (v3,v5,v7) and (v3,v5,v8) both cost 36.
  EXPECT_EQ(p.common_pois, (std::vector<PoiId>{f.v(3), f.v(5), f.v(7)}));
  EXPECT_EQ(group_cost(f.net, f.query, std::vector{f.v(3), f.v(5), f.v(8)},
                       SharingMode::PerPersonIntermediate),
            Money(36));
}

TEST(Plan, TenPoiLegStructure) {
  const auto f = load_ten_poi();
  const auto p = plan(f.net, f.query, SharingMode::SharedIntermediate);
  ASSERT_EQ(p.source_legs.size(), 2u);
  ASSERT_EQ(p.common_legs.size(), 2u);
  ASSERT_EQ(p.dest_legs.size(), 2u);
  EXPECT_EQ(p.source_legs[0].cost, Money(5));   // v1-v3 Bus
  EXPECT_EQ(p.source_legs[1].cost, Money(8));   // v2-v3 Car
  EXPECT_EQ(p.common_legs[0].cost, Money(4));   // v3-v5 Train
  EXPECT_EQ(p.common_legs[1].cost, Money(4));   // v5-v8 Car
  EXPECT_EQ(p.dest_legs[0].cost, Money(3));     // v8-v10 Train
  EXPECT_EQ(p.dest_legs[1].cost, Money(4));     // v8-v9 Bus
  const auto journey = p.agent_journey(1);
  ASSERT_EQ(journey.size(), 4u);
  EXPECT_EQ(journey.front()->front(), f.v(2));
  EXPECT_EQ(journey.back()->back(), f.v(9));
}

TEST(Plan, SingleCategoryIsSumOfAgentLegs) {
  const auto f = load_ten_poi();
  QueryInstance inst{f.query.agents, {{f.v(5)}}};
  LegCache cache(f.net);
  Money expected;
  for (const auto& a : inst.agents)
    expected += cache.cost(a.source, f.v(5)) + cache.cost(f.v(5), a.destination);
  for (auto sharing : {SharingMode::PerPersonIntermediate,
                       SharingMode::SharedIntermediate}) {
    const auto p = plan(f.net, inst, sharing);
    EXPECT_EQ(p.total_cost, expected);
    EXPECT_TRUE(p.common_legs.empty());
  }
}

TEST(GroupCost, TenPoiFixedTuples) {
  const auto f = load_ten_poi();
  const auto shared = SharingMode::SharedIntermediate;
  EXPECT_EQ(group_cost(f.net, f.query, std::vector{f.v(3), f.v(5), f.v(7)}, shared),
            Money(29));
  EXPECT_EQ(group_cost(f.net, f.query, std::vector{f.v(3), f.v(5), f.v(8)}, shared),
            Money(28));
}

TEST(GroupCost, RejectsPoiOutsideCategory) {
  const auto f = load_ten_poi();
  EXPECT_THROW(group_cost(f.net, f.query, std::vector{f.v(5), f.v(5), f.v(7)},
                          SharingMode::SharedIntermediate),
               PreconditionError);
  EXPECT_THROW(group_cost(f.net, f.query, std::vector{f.v(3), f.v(5)},
                          SharingMode::SharedIntermediate),
               PreconditionError);
}

TEST(Reconstruct, FollowsParents) {
  const auto f = load_ten_poi();
  LegCache cache(f.net);
  const auto dp = solve_layers(cache, f.query, SharingMode::SharedIntermediate);
  EXPECT_EQ(reconstruct(dp, f.query, 0),
            (std::vector<PoiId>{f.v(3), f.v(5), f.v(7)}));
  EXPECT_EQ(reconstruct(dp, f.query, 1),
            (std::vector<PoiId>{f.v(3), f.v(5), f.v(8)}));
  EXPECT_THROW(reconstruct(dp, f.query, 2), InternalError);
  DpTable broken = dp;
  broken.parent[2][0] = 7;
  EXPECT_THROW(reconstruct(broken, f.query, 0), InternalError);
}

TEST(Plan, MalformedInstances) {
  const auto f = load_ten_poi();
  QueryInstance no_agents{{}, f.query.categories};
  EXPECT_THROW(plan(f.net, no_agents), PreconditionError);
  QueryInstance no_categories{f.query.agents, {}};
  EXPECT_THROW(plan(f.net, no_categories), PreconditionError);
  QueryInstance empty_category{f.query.agents, {{f.v(3)}, {}}};
  EXPECT_THROW(plan(f.net, empty_category), PreconditionError);
  QueryInstance bad_id{{{0, 99}}, {{f.v(3)}}};
  EXPECT_THROW(plan(f.net, bad_id), PreconditionError);
}

TEST(Plan, DisconnectedPairIsInfeasible) {
  NetworkBuilder b;
  const ModeId m = b.fares().add_mode("Bus", {Money(1), {}, {}});
  for (const char* id : {"a", "b", "c", "d"}) b.add_poi(id);
  b.add_edge(0, 1, m, 1, 1);
  b.add_edge(2, 3, m, 1, 1);
  const auto net = std::move(b).finalize();
  QueryInstance inst{{{0, 1}}, {{2, 3}}};
  try {
    plan(net, inst);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.from(), 0u);
    EXPECT_EQ(e.to(), 2u);
  }
}

TEST(Plan, SkipsUnreachableCandidates) {
  NetworkBuilder b;
  const ModeId m = b.fares().add_mode("Bus", {Money(1), {}, {}});
  for (const char* id : {"a", "b", "c", "island"}) b.add_poi(id);
  b.add_edge(0, 1, m, 1, 1);
  b.add_edge(1, 2, m, 1, 1);
  const auto net = std::move(b).finalize();
  QueryInstance inst{{{0, 2}}, {{3, 1}}};
  const auto p = plan(net, inst);
  EXPECT_EQ(p.common_pois, std::vector<PoiId>{1});
  EXPECT_EQ(p.total_cost, Money(2));
}

TEST(Plan, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = testing::random_network(
        rng, {.pois = 8, .modes = 3, .extra_links = 6});
    const auto inst = testing::random_instance(rng, net, 1 + trial % 4, 3,
                                               1 + trial % 3);
    for (auto sharing : {SharingMode::PerPersonIntermediate,
                         SharingMode::SharedIntermediate}) {
      const auto p = plan(net, inst, sharing);
      EXPECT_EQ(p.total_cost, testing::brute_force_group_cost(net, inst, sharing))
          << "trial " << trial;
      EXPECT_EQ(p.total_cost, plan_cost_from_legs(p));
      EXPECT_EQ(p.total_cost, group_cost(net, inst, p.common_pois, sharing));
    }
  }
}

TEST(Plan, MatchesOracleIncludingTieBreak) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    // Few distinct costs so ties are common.
    const auto net = testing::random_network(
        rng, {.pois = 10, .modes = 2, .extra_links = 8});
    const auto inst = testing::random_instance(rng, net, 1 + trial % 4, 4, 2);
    for (auto sharing : {SharingMode::PerPersonIntermediate,
                         SharingMode::SharedIntermediate}) {
      const auto p = plan(net, inst, sharing);
      const auto o = brute_force_optimal(net, inst, sharing);
      EXPECT_EQ(p.total_cost, o.cost);
      EXPECT_EQ(p.common_pois, o.common_pois);
    }
  }
}

TEST(Plan, CostNonDecreasingInAgents) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto net = testing::random_network(rng, {.pois = 20, .extra_links = 15});
    auto inst = testing::random_instance(rng, net, 3, 4, 8);
    for (auto sharing : {SharingMode::PerPersonIntermediate,
                         SharingMode::SharedIntermediate}) {
      Money previous;
      for (std::size_t n = 1; n <= 8; ++n) {
        QueryInstance prefix{{inst.agents.begin(), inst.agents.begin() + n},
                             inst.categories};
        const Money c = plan(net, prefix, sharing).total_cost;
        EXPECT_GE(c, previous);
        previous = c;
      }
    }
  }
}

TEST(Plan, SharedNeverExceedsPerPerson) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto net = testing::random_network(rng, {.pois = 15, .extra_links = 10});
    const std::size_t agents = 1 + trial % 5;
    const auto inst = testing::random_instance(rng, net, 3, 4, agents);
    const Money shared = plan(net, inst, SharingMode::SharedIntermediate).total_cost;
    const Money per_person = plan(net, inst).total_cost;
    EXPECT_LE(shared, per_person);
    if (agents == 1) {
      EXPECT_EQ(shared, per_person);
    }
  }
}

TEST(Plan, ScalingFaresScalesCostOnly) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto net = testing::random_network(rng, {.pois = 12, .extra_links = 10});
    const auto scaled = net.with_fares(net.fares().scaled(3));
    const auto inst = testing::random_instance(rng, net, 3, 3, 3);
    for (auto sharing : {SharingMode::PerPersonIntermediate,
                         SharingMode::SharedIntermediate}) {
      const auto a = plan(net, inst, sharing);
      const auto b = plan(scaled, inst, sharing);
      EXPECT_EQ(b.total_cost, 3 * a.total_cost);
      EXPECT_EQ(b.common_pois, a.common_pois);
    }
  }
}

TEST(Plan, PrefixOfCategoriesIsConsistent) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const auto net = testing::random_network(rng, {.pois = 15, .extra_links = 12});
    const auto inst = testing::random_instance(rng, net, 4, 4, 3);
    LegCache cache(net);
    const auto full = solve_layers(cache, inst, SharingMode::SharedIntermediate);
    for (std::size_t k = 1; k < 4; ++k) {
      QueryInstance prefix{inst.agents,
                           {inst.categories.begin(), inst.categories.begin() + k}};
      LegCache fresh(net);
      const auto part = solve_layers(fresh, prefix, SharingMode::SharedIntermediate);
      for (std::size_t c = 0; c < k; ++c) EXPECT_EQ(part.cost[c], full.cost[c]);
    }
  }
}

TEST(Plan, WorkCountersStayWithinBound) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const auto net = testing::random_network(rng, {.pois = 40, .extra_links = 40});
    const std::size_t k = 1 + trial % 4;
    const std::size_t agents = 1 + trial % 6;
    const std::size_t p_max = 5;
    const auto inst = testing::random_instance(rng, net, k, p_max, agents);
    PlanStats stats;
    plan(net, inst, SharingMode::PerPersonIntermediate, &stats);
    std::size_t p = 0;
    for (const auto& c : inst.categories) p = std::max(p, c.size());
    EXPECT_LE(stats.dijkstra_runs, agents + k * p);
    EXPECT_LE(stats.pair_lookups, (k - 1) * p * p + 2 * agents * p);
  }
}

TEST(Plan, AgentsSharingEndpoints) {
  const auto f = load_ten_poi();
  QueryInstance twice{{f.query.agents[0], f.query.agents[0]}, f.query.categories};
  QueryInstance once{{f.query.agents[0]}, f.query.categories};
  const auto a = plan(f.net, twice, SharingMode::PerPersonIntermediate);
  const auto b = plan(f.net, once, SharingMode::PerPersonIntermediate);
  EXPECT_EQ(a.total_cost, 2 * b.total_cost);
}

}  // namespace
}  // namespace gtpmm
