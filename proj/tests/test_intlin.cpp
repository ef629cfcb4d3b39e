#include <random>

#include <gtest/gtest.h>

#include "edgeflex/intlin.hpp"
#include "oracles.hpp"

using namespace edgeflex;

namespace {

IntegerMatrix random_type_matrix(std::size_t d, std::mt19937_64& rng) {
    // Rows: last entry 1, leading part one of 0, e_i, 2e_i, e_i+e_j.
    IntegerMatrix a(d, d);
    std::uniform_int_distribution<std::size_t> col(0, d - 2);
    std::uniform_int_distribution<int> shape(0, 3);
    for (std::size_t i = 0; i < d; ++i) {
        a(i, d - 1) = 1;
        if (d == 1) continue;
        switch (shape(rng)) {
        case 0: break;
        case 1: a(i, col(rng)) = 1; break;
        case 2: a(i, col(rng)) = 2; break;
        default: {
            const std::size_t j = col(rng);
            std::size_t k = col(rng);
            a(i, j) += 1;
            a(i, k) += 1;
        }
        }
    }
    return a;
}

RationalMatrix identity_q(std::size_t n) { return RationalMatrix::identity(n); }

} // namespace

TEST(Determinant, Identity) { EXPECT_EQ(determinant(IntegerMatrix::identity(3)), 1); }

TEST(Determinant, UpperTriangular) { EXPECT_EQ(determinant(IntegerMatrix{{2, 1}, {0, 1}}), 2); }

TEST(Determinant, LowerTriangularTransformFromTwoComponentExample) {
    const IntegerMatrix v{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                          {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
    EXPECT_EQ(determinant(v), 1);
}

TEST(Determinant, NonSquareRejected) { EXPECT_THROW(determinant(IntegerMatrix(2, 3)), DimensionError); }

TEST(Determinant, AgreesWithLaplaceOnRandomMatrices) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(-9, 9);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 6;
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
        EXPECT_EQ(Rational(determinant(m)), oracle::laplace_det(oracle::to_rmat(m)));
    }
}

TEST(Determinant, Multiplicative) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + t % 5;
        IntegerMatrix a(n, n), b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng), b(i, j) = e(rng);
        EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    }
}

TEST(Determinant, LargeEntriesStayExact) {
    // Hilbert-like integer matrix with growing entries; Bareiss keeps it integral.
    const std::size_t n = 8;
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (BigInt(1) << (7 * ((i * j) % 11))) + static_cast<int>(i + j);
    EXPECT_EQ(Rational(determinant(m)), oracle::laplace_det(oracle::to_rmat(m)));
}

TEST(Rank, IncidenceMatrixOfTwoComponentGraph) {
    const IntegerMatrix a{{1, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 0}, {1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}};
    EXPECT_EQ(rank(a), 4u);
}

TEST(Rank, ZeroAndIdentity) {
    EXPECT_EQ(rank(IntegerMatrix(3, 4)), 0u);
    EXPECT_EQ(rank(IntegerMatrix::identity(5)), 5u);
}

TEST(Inverse, Trivial) {
    EXPECT_EQ(inverse(IntegerMatrix::identity(4)), identity_q(4));
    const RationalMatrix half = inverse(IntegerMatrix{{2}});
    EXPECT_EQ(half(0, 0), Rational(1, 2));
}

TEST(Inverse, SingularRejected) { EXPECT_THROW(inverse(IntegerMatrix{{1, 2}, {2, 4}}), SingularMatrixError); }

// Vertex matrix of the facet -2x-2y+3z <= 1 of Omega(Q_K3); frozen from the
// Python adjugate oracle.
TEST(Inverse, MixedFacetOfOmegaK3) {
    const IntegerMatrix m{{-1, -1, -1}, {0, 1, 1}, {1, 0, 1}};
    const IntegerMatrix expected{{-1, -1, 0}, {-1, 0, -1}, {1, 1, 1}};
    EXPECT_EQ(inverse(m), to_rational(expected));
}

// Four vertices of the facet -2x-2y-2z+3w <= 1 of Omega(Q_K4); frozen from the
// Python adjugate oracle.
TEST(Inverse, MixedFacetOfOmegaK4) {
    const IntegerMatrix m{{-1, -1, 0, -1}, {-1, 0, -1, -1}, {0, -1, -1, -1}, {0, 0, 1, 1}};
    const IntegerMatrix expected{{0, -1, 0, -1}, {0, 0, -1, -1}, {1, -1, -1, -1}, {-1, 1, 1, 2}};
    EXPECT_EQ(determinant(m), 1);
    EXPECT_EQ(inverse(m), to_rational(expected));
}

TEST(Inverse, MatchesAdjugateAndIsTwoSided) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(-6, 6);
    int done = 0;
    while (done < 40) {
        const std::size_t n = 1 + done % 5;
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
        if (determinant(m) == 0) continue;
        const RationalMatrix inv = inverse(m);
        EXPECT_EQ(inv * to_rational(m), identity_q(n));
        EXPECT_EQ(to_rational(m) * inv, identity_q(n));
        const auto adj = oracle::adjugate_inverse(oracle::to_rmat(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(inv(i, j), adj[i][j]);
        ++done;
    }
}

TEST(Unimodular, Basics) {
    const IntegerMatrix u{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
                          {1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 1}};
    EXPECT_TRUE(is_unimodular(u));
    EXPECT_FALSE(is_unimodular(IntegerMatrix{{2, 0}, {0, 1}}));
    EXPECT_TRUE(is_unimodular(IntegerMatrix::identity(3)));
    EXPECT_THROW(is_unimodular(IntegerMatrix(2, 1)), DimensionError);
}

TEST(HalfInverse, Examples) {
    EXPECT_FALSE(half_inverse_is_integral(IntegerMatrix{{3}}));
    EXPECT_TRUE(half_inverse_is_integral(IntegerMatrix::identity(4)));
    EXPECT_TRUE(half_inverse_is_integral(IntegerMatrix{{2, 1}, {0, 1}}));
    EXPECT_THROW(half_inverse_is_integral(IntegerMatrix{{0}}), SingularMatrixError);
}

TEST(Hermite, LatticeIndex) {
    // Differences of the empty tetrahedron conv{0, e1, e2, (1,1,2)}.
    const IntegerMatrix reeve{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
    EXPECT_EQ(lattice_index(reeve), BigInt(2));
    EXPECT_EQ(lattice_index(IntegerMatrix{{2, 1}, {1, 1}, {4, 4}}), BigInt(1));
    EXPECT_FALSE(lattice_index(IntegerMatrix{{1, 1}, {2, 2}}).has_value());
}

TEST(Reduce, OneByOne) {
    const ReductionResult r = reduce_type_matrix(IntegerMatrix{{1}});
    EXPECT_EQ(r.s, 1u);
    EXPECT_EQ(replay(IntegerMatrix{{1}}, r.trace), r.normal_form());
}

TEST(Reduce, DeterminantTwo) {
    const IntegerMatrix a{{2, 1}, {0, 1}};
    const ReductionResult r = reduce_type_matrix(a);
    EXPECT_EQ(r.s, 1u);
    EXPECT_EQ(replay(a, r.trace), (IntegerMatrix{{1, 0}, {0, 2}}));
}

TEST(Reduce, DeterminantOne) {
    const IntegerMatrix a{{1, 1}, {0, 1}};
    const ReductionResult r = reduce_type_matrix(a);
    EXPECT_EQ(r.s, 2u);
    EXPECT_EQ(replay(a, r.trace), IntegerMatrix::identity(2));
}

TEST(Reduce, RowShapeViolationsNameTheRow) {
    try {
        reduce_type_matrix(IntegerMatrix{{1, 0, 1}, {1, 2, 1}, {0, 0, 1}});
        FAIL();
    } catch (const RowShapeError& e) {
        EXPECT_EQ(e.row(), 1u);
    }
    EXPECT_THROW(reduce_type_matrix(IntegerMatrix{{1, 0}, {0, 2}}), RowShapeError);
    EXPECT_THROW(reduce_type_matrix(IntegerMatrix{{3, 1}, {0, 1}}), RowShapeError);
    EXPECT_THROW(reduce_type_matrix(IntegerMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
}

TEST(Reduce, TraceOpsAreUnimodular) {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 50) {
        const std::size_t d = 2 + done % 6;
        const IntegerMatrix a = random_type_matrix(d, rng);
        if (determinant(a) == 0) continue;
        const ReductionResult r = reduce_type_matrix(a);
        IntegerMatrix m = a;
        for (const auto& op : r.trace) {
            const BigInt before = abs(determinant(m));
            apply(m, op);
            EXPECT_EQ(abs(determinant(m)), before);
        }
        EXPECT_EQ(m, r.normal_form());
        ++done;
    }
}

TEST(Reduce, RandomQualifyingMatrices) {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 200) {
        const std::size_t d = 1 + done % 8;
        const IntegerMatrix a = random_type_matrix(d, rng);
        if (determinant(a) == 0) continue;
        const ReductionResult r = reduce_type_matrix(a);
        EXPECT_EQ(replay(a, r.trace), r.normal_form());
        EXPECT_EQ(abs(determinant(a)), r.abs_determinant());
        EXPECT_TRUE(half_inverse_is_integral(a));
        ++done;
    }
}
