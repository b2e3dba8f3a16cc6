#include "pxg/symmetry.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "pxg/errors.hpp"
#include "pxg/px_group.hpp"

namespace pxg {
namespace {

std::vector<VertexId> ids(const PxGraph& g, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (const char* l : labels) out.push_back(g.id(parse_vertex(l)));
  std::sort(out.begin(), out.end());
  return out;
}

Graph petersen() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, e);
}

TEST(DeterminingTest, Examples) {
  PxGraph g52({5, 2});
  auto a52 = full_aut(g52);
  EXPECT_TRUE(is_determining(a52, ids(g52, {"0:00", "2:00", "4:00"})));
  PxGraph g63({6, 3});
  auto a63 = full_aut(g63);
  EXPECT_FALSE(is_determining(a63, ids(g63, {"0:000", "3:000"})));
  std::vector<VertexId> all(g63.order());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  EXPECT_TRUE(is_determining(a63, all));
  EXPECT_FALSE(is_determining(a63, {}));
}

TEST(DeterminingTest, BruteForceValues) {
  EXPECT_EQ(det_bruteforce(full_aut(PxGraph({3, 2}))).value, 2);
  EXPECT_EQ(det_bruteforce(full_aut(PxGraph({4, 1}))).value, 6);
  EXPECT_EQ(det_bruteforce(full_aut(PxGraph({6, 3}))).value, 3);
  EXPECT_EQ(det_bruteforce(full_aut(PxGraph({4, 3}))).value, 2);
  EXPECT_EQ(det_bruteforce(full_aut(PxGraph({4, 2}))).value, 3);
}

TEST(DeterminingTest, WitnessIsLexicographicallyLeast) {
  PxGraph g({5, 2});
  auto group = full_aut(g);
  SubsetSearch s = det_bruteforce(group);
  ASSERT_EQ(s.value, 3);
  EXPECT_TRUE(is_determining(group, s.witness));
  std::vector<VertexId> first{0, 1, 2};
  if (first != s.witness) {
    EXPECT_FALSE(is_determining(group, first));
  }
}

TEST(DeterminingTest, BudgetIsReported) {
  SearchBudget tight;
  tight.max_subset_size = 2;
  SubsetSearch s = det_bruteforce(full_aut(PxGraph({4, 1})), tight);
  EXPECT_EQ(s.status, SearchStatus::budget_exhausted);
  EXPECT_FALSE(s.value.has_value());
  tight.max_subset_size = 8;
  tight.max_checks = 10;
  EXPECT_EQ(det_bruteforce(full_aut(PxGraph({5, 2})), tight).status, SearchStatus::budget_exhausted);
}

TEST(DistinguishingTest, RedPairsFailOnPX32) {
  PxGraph g({3, 2});
  auto group = full_aut(g);
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b = a + 1; b < g.order(); ++b) {
      std::vector<VertexId> red{a, b};
      EXPECT_FALSE(is_distinguishing_red_set(group, red));
    }
  }
}

TEST(DistinguishingTest, ThreeVertexRedSetsOnPX32) {
  PxGraph g({3, 2});
  auto group = full_aut(g);
  // This set is preserved by a flip composed with a reflection.
  auto listed = ids(g, {"0:00", "1:01", "2:00"});
  EXPECT_FALSE(is_distinguishing_red_set(group, listed));
  Automorphism a = parse_automorphism({3, 2}, "tau=001 delta=m1 xi=0");
  std::vector<VertexId> image;
  for (VertexId v : listed) image.push_back(apply_id({3, 2}, a, v));
  std::sort(image.begin(), image.end());
  EXPECT_EQ(image, listed);
  EXPECT_FALSE(is_distinguishing_red_set(group, ids(g, {"0:00", "1:10", "2:00"})));
  EXPECT_TRUE(is_distinguishing_red_set(group, ids(g, {"0:00", "0:01", "1:00"})));
}

TEST(DistinguishingTest, SingleColorIsNotDistinguishing) {
  PxGraph g({5, 2});
  Coloring one{std::vector<std::uint32_t>(g.order(), 0), 1};
  EXPECT_FALSE(is_distinguishing(full_aut(g), one));
}

TEST(DistinguishingTest, BruteForceValues) {
  EXPECT_EQ(dist_bruteforce(full_aut(PxGraph({4, 1}))).value, 5);
  EXPECT_EQ(dist_bruteforce(full_aut(PxGraph({6, 1}))).value, 3);
  EXPECT_EQ(dist_bruteforce(full_aut(PxGraph({5, 2}))).value, 2);
  EXPECT_EQ(dist_bruteforce(PermGroup{identity_perm(4)}).value, 1);
  DistSearch d = dist_bruteforce(full_aut(PxGraph({4, 1})));
  EXPECT_TRUE(is_distinguishing(full_aut(PxGraph({4, 1})), d.witness));
  EXPECT_EQ(d.witness.color[0], 0u);
}

TEST(CostTest, BruteForceValues) {
  EXPECT_EQ(cost2_bruteforce(full_aut(PxGraph({3, 2}))).value, 3);
  EXPECT_EQ(cost2_bruteforce(full_aut(PxGraph({4, 2}))).value, 5);
  EXPECT_EQ(cost2_bruteforce(full_aut(PxGraph({4, 3}))).value, 3);
  SubsetSearch none = cost2_bruteforce(full_aut(PxGraph({5, 1})));
  EXPECT_FALSE(none.value.has_value());
  EXPECT_EQ(none.status, SearchStatus::complete);
}

// Odd n with k = (n+1)/2: no pair of vertices is distinguishing.
TEST(CostTest, ThreeRedVerticesNeededForOddHalfPlusOne) {
  for (auto p : {PxParams{5, 3}, PxParams{7, 4}}) {
    SubsetSearch s = cost2_bruteforce(full_aut(PxGraph(p)));
    EXPECT_EQ(s.value, 3) << p.n << "," << p.k;
  }
  PxGraph g({9, 5});
  auto group = algebraic_perms(g);
  SearchBudget b;
  b.max_subset_size = 2;
  SubsetSearch s = cost2_bruteforce(group, b);
  EXPECT_FALSE(s.value.has_value());
  b.max_subset_size = 3;
  s = cost2_bruteforce(group, b);
  EXPECT_EQ(s.value, 3);
}

TEST(CostTest, PairsSufficeWhenWindowAllows) {
  for (auto p : {PxParams{5, 4}, PxParams{6, 4}}) {
    EXPECT_EQ(cost2_bruteforce(full_aut(PxGraph(p))).value, 2);
  }
}

TEST(GenericSearchTest, KnownGroups) {
  EXPECT_EQ(generic_automorphisms(cycle_graph(6)).group.size(), 12u);
  EXPECT_EQ(generic_automorphisms(complete_graph(5)).group.size(), 120u);
  EXPECT_EQ(generic_automorphisms(complete_bipartite_graph(3, 3)).group.size(), 72u);
  EXPECT_EQ(generic_automorphisms(hypercube_graph(4)).group.size(), 384u);
  EXPECT_EQ(generic_automorphisms(petersen()).group.size(), 120u);
  std::vector<Edge> path = {{0, 1}, {1, 2}, {2, 3}, {1, 4}};
  EXPECT_EQ(generic_automorphisms(Graph(5, path)).group.size(), 2u);
}

TEST(GenericSearchTest, AgreesWithAlgebraicGroup) {
  for (auto p : {PxParams{3, 2}, PxParams{4, 3}, PxParams{5, 2}, PxParams{6, 3}}) {
    PxGraph g(p);
    AutomorphismSearch s = generic_automorphisms(g.graph());
    EXPECT_TRUE(s.complete);
    EXPECT_EQ(s.group, full_aut(g));
    EXPECT_TRUE(is_closed_under_composition(s.group));
  }
}

TEST(GenericSearchTest, FlagsIncompleteSearch) {
  SearchBudget b;
  b.node_limit = 5;
  EXPECT_FALSE(generic_automorphisms(hypercube_graph(4), b).complete);
  b = SearchBudget{};
  b.generic_vertex_cap = 8;
  EXPECT_THROW(generic_automorphisms(hypercube_graph(4), b), CapacityError);
}

TEST(InterchangeTest, BruteForceExamples) {
  PxParams p53{5, 3};
  PxGraph g53(p53);
  auto a53 = algebraic_perms(g53);
  EXPECT_FALSE(interchangeable_bruteforce(a53, g53.id(parse_vertex("0:101")), g53.id(parse_vertex("1:001"))));
  PxParams p10{10, 3};
  PxGraph g10(p10);
  std::vector<Perm> a10;
  for (const Automorphism& a : enumerate_A(p10)) a10.push_back(to_perm(g10, a));
  VertexId z = g10.id(parse_vertex("0:000")), v = g10.id(parse_vertex("5:000"));
  auto w = interchangeable_bruteforce(a10, z, v);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)(z), v);
  EXPECT_EQ((*w)(v), z);
  EXPECT_THROW(interchangeable_bruteforce(a10, z, z), UsageError);
}

// Splitting a class of a distinguishing coloring keeps it distinguishing;
// adding vertices to a determining set keeps it determining.
TEST(MonotonicityTest, RandomRefinementsAndSupersets) {
  std::mt19937_64 rng(0x5eed20240613);
  for (auto p : {PxParams{3, 2}, PxParams{4, 3}, PxParams{5, 2}, PxParams{6, 3}}) {
    PxGraph g(p);
    auto group = full_aut(g);
    SubsetSearch d = det_bruteforce(group);
    ASSERT_TRUE(d.value);
    SubsetSearch c = cost2_bruteforce(group);
    ASSERT_TRUE(c.value);
    // A distinguishing red set determines.
    EXPECT_TRUE(is_determining(group, c.witness));
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<VertexId> s = d.witness;
      int extra = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < extra; ++i) s.push_back(static_cast<VertexId>(rng() % g.order()));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      EXPECT_TRUE(is_determining(group, s));

      Coloring col = Coloring::from_red_set(g.order(), c.witness);
      std::uint32_t target = static_cast<std::uint32_t>(rng() % col.num_colors);
      std::uint32_t fresh = col.num_colors++;
      for (VertexId v = 0; v < g.order(); ++v) {
        if (col.color[v] == target && (rng() & 1)) col.color[v] = fresh;
      }
      EXPECT_TRUE(is_distinguishing(group, col));
    }
  }
}

TEST(ColoringTest, FromRedSetAndClasses) {
  std::vector<VertexId> red{1, 3};
  Coloring c = Coloring::from_red_set(5, red);
  EXPECT_EQ(c.num_colors, 2u);
  EXPECT_EQ(c.color, (std::vector<std::uint32_t>{1, 0, 1, 0, 1}));
  auto classes = c.classes();
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0], red);
}

}  // namespace
}  // namespace pxg
