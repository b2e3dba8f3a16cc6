#include "pxg/witnesses.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "pxg/errors.hpp"
#include "pxg/formulas.hpp"
#include "pxg/twins.hpp"

namespace pxg {
namespace {

std::vector<std::string> labels(const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(to_string(v));
  return out;
}

std::vector<PxParams> small_grid() {
  std::vector<PxParams> out;
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= std::min(n - 1, 4); ++k) {
      if (n * (1 << k) <= 112) out.push_back({n, k});
    }
  }
  return out;
}

TEST(DetWitnessTest, Examples) {
  EXPECT_EQ(labels(det_witness({7, 3})), (std::vector<std::string>{"0:000", "3:000", "6:000"}));
  EXPECT_EQ(labels(det_witness({6, 3})), (std::vector<std::string>{"0:000", "1:000", "3:000"}));
  EXPECT_EQ(labels(det_witness({4, 3})), (std::vector<std::string>{"0:000", "3:001"}));
  EXPECT_EQ(det_witness({4, 2}).size(), 3u);
  EXPECT_EQ(det_witness({4, 1}).size(), 6u);
  EXPECT_EQ(det_witness({5, 1}).size(), 5u);
}

TEST(DetWitnessTest, DeterminingWithFormulaSizeOnGrid) {
  for (PxParams p : small_grid()) {
    PxGraph g(p);
    auto w = det_witness(p);
    EXPECT_EQ(static_cast<int>(w.size()), det_formula(p)) << p.n << "," << p.k;
    EXPECT_TRUE(is_determining(full_aut(g), g.ids(w))) << p.n << "," << p.k;
    EXPECT_EQ(det_bruteforce(full_aut(g)).value, det_formula(p)) << p.n << "," << p.k;
  }
}

TEST(DetWitnessTest, LargeInstance) {
  PxParams p{20, 5};
  auto w = det_witness(p);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_TRUE(verify_determining(p, PxGraph(p).ids(w)));
}

TEST(CostWitnessTest, Examples) {
  EXPECT_EQ(labels(cost_witness({6, 4})), (std::vector<std::string>{"0:0000", "2:0111"}));
  EXPECT_EQ(labels(cost_witness({7, 3})), (std::vector<std::string>{"0:000", "3:000", "6:001"}));
  EXPECT_EQ(labels(cost_witness({4, 3})), (std::vector<std::string>{"0:000", "2:000", "3:001"}));
  EXPECT_EQ(cost_witness({6, 2}).size(), 4u);
  EXPECT_EQ(cost_witness({4, 2}).size(), 5u);
  EXPECT_THROW(cost_witness({5, 1}), NotApplicableError);
}

// Minimum red-class sizes from exhaustive search, compared with the closed
// form. They agree everywhere on the grid except at odd n with k = (n+1)/2.
TEST(CostWitnessTest, SizesEqualExhaustiveMinimum) {
  std::set<std::pair<int, int>> mismatches;
  for (PxParams p : small_grid()) {
    if (p.k == 1) continue;
    PxGraph g(p);
    auto group = full_aut(g);
    SubsetSearch s = cost2_bruteforce(group);
    ASSERT_EQ(s.status, SearchStatus::complete);
    ASSERT_TRUE(s.value);
    auto w = cost_witness(p);
    EXPECT_EQ(static_cast<int>(w.size()), *s.value) << p.n << "," << p.k;
    EXPECT_TRUE(is_distinguishing_red_set(group, g.ids(w))) << p.n << "," << p.k;
    if (*s.value != cost_formula(p)) mismatches.insert({p.n, p.k});
  }
  EXPECT_EQ(mismatches, (std::set<std::pair<int, int>>{{5, 3}, {7, 4}}));
}

TEST(CostWitnessTest, LargeNonDivisibleCase) {
  PxParams p{13, 4};
  auto w = cost_witness(p);
  EXPECT_EQ(static_cast<int>(w.size()), cost_formula(p));
  EXPECT_TRUE(verify_distinguishing(p, Coloring::from_red_set(PxGraph(p).order(), PxGraph(p).ids(w))));
}

TEST(UpperBoundTest, RedSetsDistinguish) {
  for (int n = 5; n <= 12; ++n) {
    for (int k = 2; k < n && n * (1 << k) <= 2048; ++k) {
      PxParams p{n, k};
      PxGraph g(p);
      auto r = upper_bound_red_set(p);
      EXPECT_EQ(static_cast<int>(r.size()), ceil_div(n, k) + 1);
      EXPECT_TRUE(verify_distinguishing(p, Coloring::from_red_set(g.order(), g.ids(r)))) << n << "," << k;
    }
  }
  EXPECT_THROW(upper_bound_red_set({4, 2}), UsageError);
  EXPECT_THROW(upper_bound_red_set({6, 1}), UsageError);
}

TEST(DistWitnessTest, Examples) {
  PxParams p{13, 4};
  PxGraph g(p);
  Coloring c = dist_witness(p);
  EXPECT_EQ(c.num_colors, 2u);
  EXPECT_EQ(c.classes()[0].size(), 5u);
  EXPECT_TRUE(verify_distinguishing(p, c));
  EXPECT_EQ(dist_witness({4, 1}).num_colors, 5u);
  EXPECT_EQ(dist_witness({6, 1}).num_colors, 3u);
  Coloring c43 = dist_witness({4, 3});
  EXPECT_EQ(labels(PxGraph({4, 3}).vertices(c43.classes()[0])),
            (std::vector<std::string>{"0:000", "2:000", "3:001"}));
}

TEST(DistWitnessTest, DistinguishingWithFormulaColorsOnGrid) {
  for (PxParams p : small_grid()) {
    Coloring c = dist_witness(p);
    EXPECT_EQ(static_cast<int>(c.num_colors), dist_formula(p));
    EXPECT_TRUE(is_distinguishing(full_aut(PxGraph(p)), c)) << p.n << "," << p.k;
  }
}

TEST(InterchangeTest, Window) {
  EXPECT_EQ(interchange_window({10, 3}, 0, 5), std::vector<int>{});
  EXPECT_EQ(interchange_window({5, 3}, 0, 1), (std::vector<int>{1, 2}));
  EXPECT_EQ(interchange_window({5, 3}, 4, 1), (std::vector<int>{1}));
}

TEST(InterchangeTest, Examples) {
  PxParams p53{5, 3};
  Vertex a = parse_vertex("0:101"), b = parse_vertex("1:001");
  EXPECT_FALSE(interchangeable_predicate(p53, a, b));
  EXPECT_TRUE(satisfied_clauses(p53, a, b).empty());
  EXPECT_THROW(interchange_witness(p53, a, b), NoWitnessError);

  PxParams p10{10, 3};
  Vertex z = parse_vertex("0:000"), v = parse_vertex("5:000");
  EXPECT_EQ(satisfied_clauses(p10, z, v),
            (std::vector<InterchangeClause>{InterchangeClause::reflection, InterchangeClause::antipodal_rotation}));
  Automorphism rot = interchange_witness(p10, z, v, InterchangeClause::antipodal_rotation);
  EXPECT_EQ(to_string(p10, rot), "tau=0000000000 delta=r5 xi=0");
  EXPECT_TRUE(swaps(p10, rot, z, v));
  Automorphism ref = interchange_witness(p10, z, v, InterchangeClause::reflection);
  EXPECT_TRUE(ref.delta.reflect);
  EXPECT_TRUE(swaps(p10, ref, z, v));

  PxParams p32{3, 2};
  Automorphism t = interchange_witness(p32, parse_vertex("0:00"), parse_vertex("0:11"));
  EXPECT_EQ(t.delta, Dihedral{});
  EXPECT_TRUE(swaps(p32, t, parse_vertex("0:00"), parse_vertex("0:11")));
  EXPECT_THROW(satisfied_clauses(p32, z, z), UsageError);
}

TEST(InterchangeTest, EveryPairOfPX32) {
  PxParams p{3, 2};
  PxGraph g(p);
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b = a + 1; b < g.order(); ++b) {
      Vertex u = g.vertex(a), v = g.vertex(b);
      ASSERT_TRUE(interchangeable_predicate(p, u, v));
      EXPECT_TRUE(swaps(p, interchange_witness(p, u, v), u, v));
    }
  }
}

TEST(InterchangeTest, PredicateMatchesBruteForce) {
  for (auto p : {PxParams{5, 2}, PxParams{5, 3}, PxParams{6, 2}, PxParams{6, 3}, PxParams{7, 2}}) {
    PxGraph g(p);
    auto a = algebraic_perms(g);
    for (VertexId x = 0; x < g.order(); ++x) {
      for (VertexId y = x + 1; y < g.order(); ++y) {
        Vertex u = g.vertex(x), v = g.vertex(y);
        bool predicted = interchangeable_predicate(p, u, v);
        EXPECT_EQ(predicted, interchangeable_bruteforce(a, x, y).has_value()) << to_string(u) << " " << to_string(v);
        if (predicted) {
          for (InterchangeClause c : satisfied_clauses(p, u, v)) {
            EXPECT_TRUE(swaps(p, interchange_witness(p, u, v, c), u, v));
          }
        }
      }
    }
  }
}

TEST(InterchangeTest, ExceptionalListOfPX43) {
  PxParams p{4, 3};
  PxGraph g(p);
  Vertex z = parse_vertex("0:000");
  EXPECT_FALSE(z_interchangeable(p, parse_vertex("1:010")));
  EXPECT_TRUE(z_interchangeable(p, parse_vertex("2:110")));
  auto full = full_aut(g);
  auto a = algebraic_perms(g);
  int excluded = 0;
  for (VertexId y = 1; y < g.order(); ++y) {
    Vertex v = g.vertex(y);
    EXPECT_EQ(z_interchangeable(p, v), interchangeable_predicate(p, z, v));
    EXPECT_EQ(z_interchangeable(p, v), interchangeable_bruteforce(a, 0, y).has_value());
    // Everything is swapped with z once the exceptional automorphism is allowed.
    EXPECT_TRUE(interchangeable_bruteforce(full, 0, y).has_value());
    excluded += z_interchangeable(p, v) ? 0 : 1;
  }
  EXPECT_EQ(excluded, 8);
}

}  // namespace
}  // namespace pxg
