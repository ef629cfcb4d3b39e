#include <gtest/gtest.h>

#include "edgeflex/lattice.hpp"
#include "oracles.hpp"

using namespace edgeflex;

namespace {

const LatticePolytope kUnitSquare = LatticePolytope::hull(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});

Graph triangles_with_path() { return Graph(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}}); }

} // namespace

TEST(LatticePoints, TriangleCopy) {
    const LatticePolytope q = full_dimensional_copy(complete_graph(3)).copy;
    EXPECT_EQ(lattice_points(q).points, (std::vector<Point>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(LatticePoints, UnitSquareDilated) {
    EXPECT_EQ(lattice_points(kUnitSquare, 2).points.size(), 9u);
    EXPECT_EQ(lattice_points(kUnitSquare, 5).points.size(), 36u);
    EXPECT_THROW(lattice_points(kUnitSquare, 0), PreconditionError);
}

TEST(LatticePoints, OmegaLayerIsStructural) {
    for (const Graph& g : {dumbbell_graph(1, 1), complete_graph(5), cycle_graph(6), triangles_with_path()}) {
        const LatticePolytope q = full_dimensional_copy(g).copy;
        EXPECT_EQ(lattice_points(omega(q)).points, omega_degree_one_points(q));
    }
}

TEST(LatticePoints, AgreeWithBoxScanOnDilates) {
    const LatticePolytope om = omega(full_dimensional_copy(complete_graph(4)).copy);
    const auto& v = om.vertices();
    Point lo = v.front(), hi = lo;
    for (const auto& p : v)
        for (std::size_t i = 0; i < p.size(); ++i) lo[i] = std::min(lo[i], p[i]), hi[i] = std::max(hi[i], p[i]);
    const auto f = oracle::brute_force_facets(v, om.ambient_dim());
    for (Coord n = 1; n <= 3; ++n) EXPECT_EQ(lattice_points(om, static_cast<std::uint64_t>(n)).points, oracle::box_scan(f, lo, hi, n));
}

TEST(LatticePoints, BudgetIsEnforced) {
    const LatticePolytope big = LatticePolytope::hull(3, {{0, 0, 0}, {9, 0, 0}, {0, 9, 0}, {0, 0, 9}, {9, 9, 9}});
    EXPECT_THROW(lattice_points(big, 4, 1000), BudgetExceeded);
}

TEST(Spanning, Examples) {
    EXPECT_TRUE(affine_lattice_spanning(full_dimensional_copy(parse_edge_list("6 5\n1 3\n3 4\n4 5\n1 5\n2 6\n")).copy));
    EXPECT_FALSE(affine_lattice_spanning(LatticePolytope::hull(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}})));
    std::vector<Point> cube;
    for (int m = 0; m < 8; ++m) cube.push_back({m & 1, m >> 1 & 1, m >> 2 & 1});
    EXPECT_TRUE(affine_lattice_spanning(LatticePolytope::hull(3, cube)));
}

TEST(Idp, TriangleCopyHolds) {
    const IdpReport r = idp_check(full_dimensional_copy(complete_graph(3)).copy, {4, kDefaultPointBudget});
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.checked_up_to, 4u);
}

TEST(Idp, SegmentHolds) {
    const IdpReport r = idp_check(LatticePolytope::hull(1, {{0}, {1}}));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.checked_up_to, 1u);
}

TEST(Idp, DumbbellOmegaFailsAtThree) {
    const LatticePolytope q = full_dimensional_copy(dumbbell_graph(1, 1)).copy;
    const auto layer = omega_degree_one_points(q);
    const IdpReport r = idp_check(omega(q), {}, &layer);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->dilation, 3u);
    EXPECT_TRUE(r.witness_verified);
    EXPECT_EQ(r.degree_one_structural_match, true);
}

// Frozen from the Python brute-force sumset oracle.
TEST(Idp, TrianglesWithPathWitnesses) {
    const LatticePolytope q = full_dimensional_copy(triangles_with_path()).copy;
    const IdpReport rq = idp_check(q);
    ASSERT_TRUE(rq.witness);
    EXPECT_EQ(rq.witness->dilation, 3u);
    EXPECT_EQ(rq.witness->point, (Point{1, 1, 0, 1, 1, 1}));
    const IdpReport ro = idp_check(omega(q));
    ASSERT_TRUE(ro.witness);
    EXPECT_EQ(ro.witness->dilation, 3u);
    EXPECT_EQ(ro.witness->point, (Point{-1, -1, 0, -1, -1, -1, -3}));
    EXPECT_TRUE(ro.witness_verified);
}

TEST(Idp, ReeveSimplexRejected) {
    EXPECT_THROW(idp_check(LatticePolytope::hull(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}})), PreconditionError);
}

TEST(Decomposable, Basics) {
    const HRepresentation& h = facet_enumeration(kUnitSquare);
    const auto s1 = lattice_points(kUnitSquare).points;
    EXPECT_TRUE(is_decomposable(h, s1, {2, 1}, 2));
    EXPECT_FALSE(is_decomposable(h, s1, {3, 1}, 2));
}

TEST(Witness, DumbbellOneOne) {
    const Graph g = dumbbell_graph(1, 1);
    const auto pair = has_two_disjoint_odd_cycles(g);
    const NonNormalityWitness w = non_normality_witness(g, *pair.witness);
    EXPECT_EQ(w.x, (Point{1, 1, 1, -1, -1, 0}));
    EXPECT_EQ(w.dilation, 3u);
    const HRepresentation& h = facet_enumeration(w.omega);
    EXPECT_TRUE(detail::in_dilate(detail::integer_facets(h, 3), w.x));
    EXPECT_FALSE(is_decomposable(h, lattice_points(h).points, w.x, 3));
}

// dumbbell(2,1) has 8 vertices: Omega(Q_G) is in Z^8, height coordinate e8.
TEST(Witness, DumbbellTwoOne) {
    const Graph g = dumbbell_graph(2, 1);
    const auto pair = has_two_disjoint_odd_cycles(g);
    const NonNormalityWitness w = non_normality_witness(g, *pair.witness);
    EXPECT_EQ(w.x, (Point{1, 1, 1, 1, 1, -1, -1, 1}));
    EXPECT_EQ(w.dilation, 4u);
    const HRepresentation& h = facet_enumeration(w.omega);
    EXPECT_TRUE(detail::in_dilate(detail::integer_facets(h, 4), w.x));
    EXPECT_FALSE(is_decomposable(h, lattice_points(h).points, w.x, 4));
}

TEST(Witness, Preconditions) {
    const Graph g = complete_graph(6);
    EXPECT_THROW(non_normality_witness(g, {{1, 2, 3}, {3, 4, 5}, false}), PreconditionError);
    EXPECT_THROW(non_normality_witness(g, {{1, 2, 3, 4}, {5, 6, 1}, false}), PreconditionError);
    EXPECT_NO_THROW(non_normality_witness(g, {{1, 2, 3}, {4, 5, 6}, true}));
}
