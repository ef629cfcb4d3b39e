#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here shares code with the algorithms under test beyond the
// number types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "edgeflex/graphs.hpp"
#include "edgeflex/hull.hpp"
#include "edgeflex/intlin.hpp"

namespace oracle {

using edgeflex::BigInt;
using edgeflex::Coord;
using edgeflex::Point;
using edgeflex::Rational;
using RMat = std::vector<std::vector<Rational>>;

// Determinant by Laplace expansion along the first row. Small sizes only.
inline Rational laplace_det(const RMat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        RMat sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            sub.push_back(std::move(row));
        }
        const Rational term = m[0][c] * laplace_det(sub);
        s += (c % 2 == 0) ? term : Rational(-term);
    }
    return s;
}

inline RMat to_rmat(const edgeflex::IntegerMatrix& a) {
    RMat m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
    }
    return m;
}

// Adjugate over determinant.
inline RMat adjugate_inverse(const RMat& m) {
    const std::size_t n = m.size();
    const Rational det = laplace_det(m);
    RMat inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RMat sub;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Rational> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != i) row.push_back(m[r][c]);
                }
                sub.push_back(std::move(row));
            }
            const Rational cof = laplace_det(sub);
            inv[i][j] = ((i + j) % 2 == 0 ? cof : Rational(-cof)) / det;
        }
    }
    return inv;
}

struct Ineq {
    std::vector<BigInt> a;
    Rational b;
    friend bool operator<(const Ineq& x, const Ineq& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); }
    friend bool operator==(const Ineq&, const Ineq&) = default;
};

// Facets of conv(points), points full-dimensional in R^d: every d-subset
// spanning a hyperplane that leaves all points on one side.
inline std::vector<Ineq> brute_force_facets(const std::vector<Point>& pts, std::size_t d) {
    std::set<Ineq> found;
    const std::size_t n = pts.size();
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    if (n < d) return {};
    for (;;) {
        // Normal a solves (p_i - p_0) . a = 0: cofactors of the d-1 x d difference matrix.
        std::vector<BigInt> a(d);
        for (std::size_t c = 0; c < d; ++c) {
            RMat sub;
            for (std::size_t r = 1; r < d; ++r) {
                std::vector<Rational> row;
                for (std::size_t k = 0; k < d; ++k) {
                    if (k != c) row.push_back(Rational(pts[pick[r]][k] - pts[pick[0]][k]));
                }
                sub.push_back(std::move(row));
            }
            const Rational det = laplace_det(sub);
            a[c] = numerator(c % 2 == 0 ? det : Rational(-det));
        }
        if (std::any_of(a.begin(), a.end(), [](const BigInt& x) { return x != 0; })) {
            BigInt g = 0;
            for (const auto& x : a) g = gcd(g, x);
            for (auto& x : a) x /= g;
            auto val = [&](const Point& p) {
                BigInt s = 0;
                for (std::size_t k = 0; k < d; ++k) s += a[k] * p[k];
                return s;
            };
            const BigInt b = val(pts[pick[0]]);
            bool le = true;
            bool ge = true;
            std::size_t on = 0;
            for (const auto& p : pts) {
                const BigInt v = val(p);
                if (v > b) le = false;
                if (v < b) ge = false;
                if (v == b) ++on;
            }
            // A facet touches at least d points spanning it; the rank of the
            // chosen subset is already d-1 because a != 0.
            if (on >= d) {
                if (le) found.insert({a, Rational(b)});
                if (ge) {
                    auto neg = a;
                    for (auto& x : neg) x = -x;
                    found.insert({neg, Rational(-b)});
                }
            }
        }
        std::size_t i = d;
        while (i > 0 && pick[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

// Lattice points of {x : a.x <= N b} inside the box N*[lo, hi], by full scan.
inline std::vector<Point> box_scan(const std::vector<Ineq>& facets, const Point& lo, const Point& hi, Coord n) {
    const std::size_t d = lo.size();
    std::vector<Point> out;
    Point x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = n * lo[i];
    for (;;) {
        bool in = true;
        for (const auto& f : facets) {
            BigInt s = 0;
            for (std::size_t k = 0; k < d; ++k) s += f.a[k] * x[k];
            if (Rational(s) > f.b * n) {
                in = false;
                break;
            }
        }
        if (in) out.push_back(x);
        std::size_t i = d;
        while (i > 0 && x[i - 1] == n * hi[i - 1]) x[i - 1] = n * lo[i - 1], --i;
        if (i == 0) break;
        ++x[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Odd cycles by trying every vertex sequence of odd length, canonicalized by
// rotation and reflection.
inline std::size_t count_odd_cycles(const edgeflex::Graph& g) {
    std::set<std::vector<int>> seen;
    const int n = static_cast<int>(g.n());
    for (int len = 3; len <= n; len += 2) {
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            if (std::popcount(mask) != len) continue;
            std::vector<int> vs;
            for (int i = 0; i < n; ++i) {
                if (mask >> i & 1U) vs.push_back(i + 1);
            }
            do {
                bool cyc = true;
                for (int i = 0; i < len && cyc; ++i) cyc = g.has_edge(vs[i], vs[(i + 1) % len]);
                if (!cyc) continue;
                std::vector<int> best;
                for (int r = 0; r < len; ++r) {
                    std::vector<int> fwd, bwd;
                    for (int i = 0; i < len; ++i) {
                        fwd.push_back(vs[(r + i) % len]);
                        bwd.push_back(vs[(r - i + len) % len]);
                    }
                    if (best.empty() || fwd < best) best = fwd;
                    if (bwd < best) best = bwd;
                }
                seen.insert(best);
            } while (std::next_permutation(vs.begin(), vs.end()));
        }
    }
    return seen.size();
}

} // namespace oracle
