#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "wentropy/search.hpp"

using namespace wentropy;

TEST(MinIwTree, Examples) {
  const SearchRecord p3 = min_iw_tree(3);
  ASSERT_EQ(p3.witnesses.size(), 1u);
  EXPECT_EQ(tree_canonical_form(p3.witnesses[0]), tree_canonical_form(make_path(3)));
  EXPECT_EQ(tree_canonical_form(min_iw_tree(5).witnesses.at(0)), tree_canonical_form(make_path(5)));
  EXPECT_EQ(tree_canonical_form(min_iw_tree(4).witnesses.at(0)), tree_canonical_form(make_star(4)));
  EXPECT_THROW(min_iw_tree(2), DomainError);
  EXPECT_THROW(min_iw_tree(19), DomainError);
}

TEST(MinIwTree, ValueRecomputesFromWitnesses) {
  for (int n = 3; n <= 12; ++n) {
    const SearchRecord r = min_iw_tree(n);
    for (const Graph& t : r.witnesses) EXPECT_NEAR(wiener_entropy(t), r.value, 1e-12);
  }
}

TEST(MinIwTree, PublishedTreesSmallOrders) {
  for (int n = 3; n <= 12; ++n) {
    const SearchRecord r = min_iw_tree(n);
    const Graph expected = make_spider(wentropy::testing::table4_spider(n));
    ASSERT_EQ(r.witnesses.size(), 1u) << n;
    EXPECT_EQ(tree_canonical_form(r.witnesses[0]), tree_canonical_form(expected)) << n;
  }
}

TEST(IsBroom, Shapes) {
  EXPECT_TRUE(is_broom(make_path(6)));
  EXPECT_TRUE(is_broom(make_star(6)));
  EXPECT_TRUE(is_broom(make_broom(9, 4)));
  EXPECT_FALSE(is_broom(make_spider({2, 2, 1})));
  EXPECT_FALSE(is_broom(make_t5(8)));
  EXPECT_TRUE(is_broom(make_spider({6, 1, 1, 1})));
}

TEST(StarConjecture, SmallOrders) {
  const auto rows = verify_conjecture_star_iw(5, 12);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.pass) << row.n;
    EXPECT_LT(row.runner_up, row.star_value);
  }
  EXPECT_EQ(rows.front().trees, 3u);
  EXPECT_THROW(verify_conjecture_star_iw(4, 6), DomainError);
  EXPECT_THROW(verify_conjecture_star_iw(5, 19), DomainError);
}

TEST(Radius1, Examples) {
  const Radius1Minimum m = min_iecc_radius1(10);
  EXPECT_EQ(m.k, 6);
  EXPECT_NEAR(m.value, 3.2359263, 1e-7);
  EXPECT_NEAR(m.value, std::log2(14.0) - 8.0 / 14.0, 1e-15);
  EXPECT_TRUE(m.in_floor_ceil);
  const Radius1Minimum big = min_iecc_radius1(1000000, Radius1Scan::kConvex);
  EXPECT_NEAR(big.value, std::log2(1e6) - 0.086, 1e-3);
  for (std::int64_t n = 10; n <= 300; ++n) EXPECT_GT(2 * min_iecc_radius1(n).k, n);
  EXPECT_THROW(min_iecc_radius1(1), DomainError);
}

TEST(Radius1, ConvexScanMatchesExhaustive) {
  for (std::int64_t n = 2; n <= 2000; ++n) {
    const auto a = min_iecc_radius1(n, Radius1Scan::kExhaustive);
    const auto b = min_iecc_radius1(n, Radius1Scan::kConvex);
    EXPECT_EQ(a.k, b.k);
    EXPECT_TRUE(a.in_floor_ceil) << n;
  }
}

TEST(Radius1, IncrementMatchesDifference) {
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      EXPECT_NEAR(radius1_ecc_increment(n, k), radius1_ecc_entropy(n, k + 1) - radius1_ecc_entropy(n, k), 1e-13);
    }
  }
}

// Near n = 6e5 neighbouring values differ by about 1e-12, so a tolerance-based
// comparison of f values picks floor(k_real) - 1 here.
TEST(Radius1, LargeOrdersStayInFloorCeil) {
  for (std::int64_t n : {11156, 613193, 614156, 615528, 999999, 1000000}) {
    const auto a = min_iecc_radius1(n, Radius1Scan::kExhaustive);
    const auto b = min_iecc_radius1(n, Radius1Scan::kConvex);
    EXPECT_EQ(a.k, b.k) << n;
    EXPECT_TRUE(b.in_floor_ceil) << n;
    EXPECT_LE(radius1_ecc_increment(n, b.k - 1), 0.0) << n;
    EXPECT_GE(radius1_ecc_increment(n, b.k), 0.0) << n;
  }
}

TEST(Radius1, ClosedFormMatchesGraph) {
  // k universal vertices plus an independent set of at least two vertices
  for (std::int64_t n = 3; n <= 12; ++n) {
    for (std::int64_t k = 1; k <= n - 2; ++k) {
      std::vector<Edge> edges;
      for (std::int64_t u = 0; u < k; ++u)
        for (std::int64_t v = u + 1; v < n; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      const Graph g(static_cast<std::size_t>(n), edges);
      EXPECT_NEAR(eccentricity_entropy(g), radius1_ecc_entropy(n, k), 1e-13);
    }
  }
}

TEST(EccBruteForce, SmallOrders) {
  for (int n = 4; n <= 6; ++n) {
    const EccMinimumScan s = min_iecc_graph_bruteforce(n);
    EXPECT_TRUE(s.ok()) << n;
    EXPECT_NEAR(s.value, min_iecc_radius1(n).value, 1e-12);
    EXPECT_LT(s.value, std::log2(static_cast<double>(n)));
  }
  EXPECT_THROW(min_iecc_graph_bruteforce(8), DomainError);
}

// For n <= 3 the minimizing k of f is n-1, which no graph realizes: the last
// non-universal vertex would itself be universal.
TEST(EccBruteForce, ClosedFormUnrealizableBelowFour) {
  for (int n = 2; n <= 3; ++n) {
    EXPECT_EQ(min_iecc_radius1(n).k, n - 1);
    const EccMinimumScan s = min_iecc_graph_bruteforce(n);
    EXPECT_FALSE(s.universal_count_matches);
    EXPECT_GT(s.value, min_iecc_radius1(n).value);
  }
  EXPECT_NEAR(min_iecc_graph_bruteforce(2).value, 1.0, 1e-15);
  EXPECT_NEAR(min_iecc_graph_bruteforce(3).value, eccentricity_entropy(make_path(3)), 1e-15);
}

TEST(Top3, OrderEight) {
  const Top3Report r = max_iecc_trees_top3(8);
  ASSERT_EQ(r.levels.size(), 3u);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.levels[0].value, r.levels[1].value);
  EXPECT_GT(r.levels[1].value, r.levels[2].value);
  EXPECT_NEAR(r.levels[0].value, 2.9808259, 1e-7);
  EXPECT_EQ(r.levels[1].eccentricities, t5_eccentricities(8));
  EXPECT_THROW(max_iecc_trees_top3(5), DomainError);
}

TEST(StarEccBound, HoldsOnRange) {
  for (std::int64_t n = 4; n <= 100000; ++n) {
    const double nd = static_cast<double>(n);
    const double star = std::log2(2 * nd - 1) - 2 * (nd - 1) / (2 * nd - 1);
    ASSERT_GT(star, std::log2(nd - (1 - std::numbers::ln2) / 2)) << n;
  }
  for (std::int64_t n = 4; n <= 40; ++n) {
    const double nd = static_cast<double>(n);
    EXPECT_NEAR(eccentricity_entropy(make_star(n)), std::log2(2 * nd - 1) - 2 * (nd - 1) / (2 * nd - 1), 1e-13);
  }
}

// Trees of diameter 4 have smaller I_ecc than the star.
TEST(DiameterFourTrees, BelowStar) {
  for (int n = 5; n <= 16; ++n) {
    const double star = eccentricity_entropy(make_star(n));
    for_each_free_tree(n, [&](const FreeTreeGenerator& gen) {
      const DistanceProfile p = distance_profile(gen.bit_graph());
      if (p.diameter == 4) {
        EXPECT_LT(eccentricity_entropy(p), star);
      }
    });
  }
}

TEST(DiameterOptimum, Examples) {
  const DiameterOptimum o = max_iecc_tree_given_diam(20, 4);
  EXPECT_EQ(o.b, 3);
  EXPECT_NEAR(o.value, eccentricity_entropy(make_diam_tree(20, 4, 3)), 1e-13);
  EXPECT_THROW(max_iecc_tree_given_diam(5, 4), DomainError);
  EXPECT_THROW(max_iecc_tree_given_diam(10, 2), DomainError);
  const DiameterOptimum big = max_iecc_tree_given_diam(100000, 2000);
  const double ratio = static_cast<double>(big.b) / 2000.0;
  EXPECT_GE(ratio, 0.72);
  EXPECT_LE(ratio, 0.80);
  EXPECT_GT(big.b, 1000 + 1);
  EXPECT_NEAR(big.beta / 2000.0, std::cbrt(2.0) / std::sqrt(std::numbers::e), 2e-3);
}

TEST(DiameterOptimum, MatchesBruteForce) {
  for (int n = 5; n <= 12; ++n) {
    for (const auto& [d, value] : max_iecc_by_diameter(n)) {
      if (d < 3 || n - d - 1 < 1) continue;
      EXPECT_NEAR(max_iecc_tree_given_diam(n, d).value, value, 1e-12) << n << ' ' << d;
    }
  }
}

TEST(DistanceLemmas, Examples) {
  const DistanceProfile s = distance_profile(make_star(6));
  EXPECT_EQ(5 * s.sigma[0], s.wiener);
  const DistanceProfile k3 = distance_profile(make_complete(3));
  EXPECT_EQ(2 * k3.sigma[0], 4);
  EXPECT_EQ(k3.wiener, 3);
  const DistanceProfile p3 = distance_profile(make_path(3));
  EXPECT_EQ(std::abs(p3.sigma[0] - p3.sigma[1]), 1);
  for (const auto& row : verify_distance_lemmas(2, 6)) EXPECT_TRUE(row.pass()) << row.n;
  EXPECT_THROW(verify_distance_lemmas(2, 8), DomainError);
}

TEST(Trends, LowerBoundRatios) {
  const TrendReport rep = lower_bound_trend({16, 1024});
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_NEAR(rep.rows[0].ratio, 3.9126433225 / 4.0, 1e-9);
  EXPECT_NEAR(rep.rows[1].ratio, 9.1574755626 / 10.0, 1e-9);
  EXPECT_TRUE(rep.ok());
}

TEST(Trends, BroomRatiosDecrease) {
  const auto rows = broom_trend({10000, 100000, 1000000}, 0.6);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0].ratio, rows[1].ratio);
  EXPECT_GT(rows[1].ratio, rows[2].ratio);
  EXPECT_GT(rows[2].ratio, 0.775);
  EXPECT_EQ(rows[2].params[0], static_cast<std::int64_t>(std::ceil(std::pow(1e6, 0.6))));
}
