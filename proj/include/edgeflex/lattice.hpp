#pragma once

// Lattice points of dilates, the integer decomposition property, affine
// lattice spanning, and the explicit non-normality witness for Omega(Q_G).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "edgeflex/dual.hpp"
#include "edgeflex/error.hpp"
#include "edgeflex/graphs.hpp"
#include "edgeflex/hull.hpp"
#include "edgeflex/intlin.hpp"
#include "edgeflex/polytope.hpp"

namespace edgeflex {

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

/// N*P ∩ Z^d in lexicographic order.
struct LatticePointSet {
    std::size_t dim = 0;
    std::uint64_t dilation = 1;
    std::vector<Point> points;
};

namespace detail {

using i128 = __int128;

inline Coord to_coord(const BigInt& x, const char* what) {
    if (x > std::numeric_limits<Coord>::max() || x < std::numeric_limits<Coord>::min()) {
        throw DimensionError(std::string(what) + " does not fit in 64 bits");
    }
    return static_cast<Coord>(x);
}

inline Coord floor_to_coord(const Rational& r) {
    return to_coord(floor_div(numerator(r), denominator(r)), "bound");
}

inline Coord ceil_to_coord(const Rational& r) {
    return to_coord(-floor_div(-numerator(r), denominator(r)), "bound");
}

inline i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

/// Integer box containing N*P.
struct Box {
    Point lo;
    Point hi;
};

inline Box bounding_box(const HRepresentation& h, std::uint64_t n = 1) {
    Box b{Point(h.dim), Point(h.dim)};
    const auto scale = static_cast<Coord>(n);
    if (!h.vertices.empty()) {
        b.lo = b.hi = h.vertices.front();
        for (const auto& v : h.vertices) {
            for (std::size_t i = 0; i < h.dim; ++i) {
                b.lo[i] = std::min(b.lo[i], v[i]);
                b.hi[i] = std::max(b.hi[i], v[i]);
            }
        }
        for (std::size_t i = 0; i < h.dim; ++i) b.lo[i] *= scale, b.hi[i] *= scale;
        return b;
    }
    const auto verts = hrep_vertices(h);
    if (verts.empty()) throw PreconditionError("empty or unbounded H-representation");
    for (std::size_t i = 0; i < h.dim; ++i) {
        Rational lo = verts.front()[i];
        Rational hi = lo;
        for (const auto& v : verts) {
            lo = std::min(lo, v[i]);
            hi = std::max(hi, v[i]);
        }
        b.lo[i] = ceil_to_coord(lo * scale);
        b.hi[i] = floor_to_coord(hi * scale);
    }
    return b;
}

/// Facets as a.x <= c with int64 normals; c = floor(N*b).
struct IntFacets {
    std::vector<std::vector<Coord>> a;
    std::vector<i128> c;
};

inline IntFacets integer_facets(const HRepresentation& h, std::uint64_t n) {
    IntFacets out;
    for (const Facet& f : h.facets) {
        std::vector<Coord> row;
        for (const auto& x : f.normal) row.push_back(to_coord(x, "facet normal"));
        out.a.push_back(std::move(row));
        const BigInt c = floor_div(numerator(f.rhs) * n, denominator(f.rhs));
        out.c.push_back(static_cast<i128>(to_coord(c, "facet right-hand side")));
    }
    return out;
}

class PointEnumerator {
public:
    PointEnumerator(const HRepresentation& h, std::uint64_t n, std::uint64_t budget)
        : d_(h.dim), facets_(integer_facets(h, n)), budget_(budget) {
        const Box box = bounding_box(h, n);
        lo_.assign(box.lo.begin(), box.lo.end());
        hi_.assign(box.hi.begin(), box.hi.end());
        // rest_[f][k]: minimum of sum_{j >= k} a_fj x_j over the box.
        rest_.assign(facets_.a.size(), std::vector<i128>(d_ + 1, 0));
        for (std::size_t f = 0; f < facets_.a.size(); ++f) {
            for (std::size_t k = d_; k-- > 0;) {
                const i128 a = facets_.a[f][k];
                rest_[f][k] = rest_[f][k + 1] + std::min(a * lo_[k], a * hi_[k]);
            }
        }
        partial_.assign(facets_.a.size(), 0);
        x_.assign(d_, 0);
    }

    std::vector<Point> run() {
        recurse(0);
        return std::move(out_);
    }

private:
    void recurse(std::size_t k) {
        if (k == d_) {
            if (out_.size() >= budget_) throw BudgetExceeded("lattice point budget of " + std::to_string(budget_) + " exceeded");
            out_.push_back(x_);
            return;
        }
        i128 lo = lo_[k];
        i128 hi = hi_[k];
        for (std::size_t f = 0; f < facets_.a.size() && lo <= hi; ++f) {
            const i128 a = facets_.a[f][k];
            const i128 slack = facets_.c[f] - partial_[f] - rest_[f][k + 1];
            if (a > 0) hi = std::min(hi, floor_div128(slack, a));
            else if (a < 0) lo = std::max(lo, ceil_div128(slack, a));
            else if (slack < 0) return;
        }
        for (i128 v = lo; v <= hi; ++v) {
            x_[k] = static_cast<Coord>(v);
            for (std::size_t f = 0; f < facets_.a.size(); ++f) partial_[f] += facets_.a[f][k] * v;
            recurse(k + 1);
            for (std::size_t f = 0; f < facets_.a.size(); ++f) partial_[f] -= facets_.a[f][k] * v;
        }
    }

    std::size_t d_;
    IntFacets facets_;
    std::uint64_t budget_;
    std::vector<i128> lo_;
    std::vector<i128> hi_;
    std::vector<std::vector<i128>> rest_;
    std::vector<i128> partial_;
    Point x_;
    std::vector<Point> out_;
};

inline bool in_dilate(const IntFacets& f, const Point& x) {
    for (std::size_t r = 0; r < f.a.size(); ++r) {
        i128 s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<i128>(f.a[r][i]) * x[i];
        if (s > f.c[r]) return false;
    }
    return true;
}

} // namespace detail

/// N*P ∩ Z^d for the polytope described by h; h must be bounded.
inline LatticePointSet lattice_points(const HRepresentation& h, std::uint64_t n = 1,
                                      std::uint64_t budget = kDefaultPointBudget) {
    if (n < 1) throw PreconditionError("dilation must be at least 1");
    LatticePointSet s{h.dim, n, {}};
    if (h.dim == 0) {
        s.points.emplace_back();
        return s;
    }
    if (h.vertices.empty() && !is_bounded(h)) throw PreconditionError("H-representation is unbounded");
    s.points = detail::PointEnumerator(h, n, budget).run();
    return s;
}

inline LatticePointSet lattice_points(const LatticePolytope& p, std::uint64_t n = 1,
                                      std::uint64_t budget = kDefaultPointBudget) {
    return lattice_points(facet_enumeration(p), n, budget);
}

/// Differences of the lattice points of P generate Z^d.
inline bool affine_lattice_spanning(const LatticePolytope& p, std::uint64_t budget = kDefaultPointBudget) {
    if (!p.is_full_dimensional()) throw DimensionError("affine lattice spanning needs a full-dimensional polytope");
    const std::size_t d = p.ambient_dim();
    if (d == 0) return true;
    const auto pts = lattice_points(p, 1, budget).points;
    IntegerMatrix diffs(pts.size() - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = pts[i][j] - pts[0][j];
    }
    const auto index = lattice_index(diffs);
    return index && *index == 1;
}

/// Is x a sum of n points of `s1` (the lattice points of P)? Exhaustive
/// search with multiset ordering, pruned by membership of the remainder in
/// the matching dilate.
inline bool is_decomposable(const HRepresentation& h, const std::vector<Point>& s1, const Point& x, std::uint64_t n) {
    if (n == 0) return std::all_of(x.begin(), x.end(), [](Coord c) { return c == 0; });
    std::vector<detail::IntFacets> dilates;
    for (std::uint64_t k = 0; k <= n; ++k) dilates.push_back(detail::integer_facets(h, k));
    Point rest = x;
    auto search = [&](auto&& self, std::size_t from, std::uint64_t left) -> bool {
        if (left == 0) return std::all_of(rest.begin(), rest.end(), [](Coord c) { return c == 0; });
        for (std::size_t i = from; i < s1.size(); ++i) {
            for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= s1[i][j];
            const bool ok = detail::in_dilate(dilates[left - 1], rest) && self(self, i, left - 1);
            for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += s1[i][j];
            if (ok) return true;
        }
        return false;
    };
    return search(search, 0, n);
}

struct IdpWitness {
    std::uint64_t dilation = 0;
    Point point;
};

struct IdpOptions {
    std::optional<std::uint64_t> n_max;  ///< default: dim - 1 (at least 1)
    std::uint64_t budget = kDefaultPointBudget;
};

struct IdpReport {
    std::uint64_t checked_up_to = 0;
    bool holds = true;
    std::optional<IdpWitness> witness;
    bool witness_verified = false;
    std::size_t degree_one_points = 0;
    /// Set when an expected degree-one layer was supplied.
    std::optional<bool> degree_one_structural_match;
};

/// Builds S_N = S_{N-1} + S_1 for N = 2..n_max and compares with N*P ∩ Z^d.
/// The first N with a gap yields the lexicographically smallest missing point.
inline IdpReport idp_check(const LatticePolytope& p, const IdpOptions& opt = {},
                           const std::vector<Point>* expected_degree_one = nullptr) {
    if (!p.is_full_dimensional()) throw DimensionError("IDP check needs a full-dimensional polytope");
    const HRepresentation& h = facet_enumeration(p);
    const std::size_t d = p.ambient_dim();
    if (!affine_lattice_spanning(p, opt.budget)) {
        throw PreconditionError("lattice points of P do not affinely span the lattice");
    }
    IdpReport r;
    r.checked_up_to = opt.n_max.value_or(d > 1 ? d - 1 : 1);
    const std::uint64_t n_max = std::max<std::uint64_t>(r.checked_up_to, 1);

    const auto s1 = lattice_points(h, 1, opt.budget).points;
    r.degree_one_points = s1.size();
    if (expected_degree_one) {
        auto want = *expected_degree_one;
        std::sort(want.begin(), want.end());
        r.degree_one_structural_match = want == s1;
    }
    if (n_max < 2) return r;

    // Mixed-radix keys, coordinate 0 most significant; with offsets N*lo the
    // key of a sum is the sum of keys, and key order is lexicographic order.
    const detail::Box box = detail::bounding_box(h);
    std::vector<std::uint64_t> stride(d, 1);
    {
        detail::i128 total = 1;
        for (std::size_t i = d; i-- > 0;) {
            stride[i] = static_cast<std::uint64_t>(total);
            total *= static_cast<detail::i128>(n_max) * (box.hi[i] - box.lo[i]) + 1;
            if (total > (detail::i128{1} << 62)) throw BudgetExceeded("dilated bounding box too large for point keys");
        }
    }
    auto key = [&](const Point& x, std::uint64_t n) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < d; ++i) k += static_cast<std::uint64_t>(x[i] - static_cast<Coord>(n) * box.lo[i]) * stride[i];
        return k;
    };

    std::vector<std::uint64_t> key1;
    for (const auto& x : s1) key1.push_back(key(x, 1));
    std::vector<std::uint64_t> current = key1;

    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const auto target = lattice_points(h, n, opt.budget).points;
        std::vector<std::uint64_t> tkeys;
        tkeys.reserve(target.size());
        for (const auto& x : target) tkeys.push_back(key(x, n));
        std::vector<char> hit(tkeys.size(), 0);
        for (std::uint64_t a : current) {
            for (std::uint64_t b : key1) {
                const auto it = std::lower_bound(tkeys.begin(), tkeys.end(), a + b);
                if (it == tkeys.end() || *it != a + b) {
                    throw std::logic_error("sumset point outside the dilate");
                }
                hit[static_cast<std::size_t>(it - tkeys.begin())] = 1;
            }
        }
        const auto miss = std::find(hit.begin(), hit.end(), 0);
        if (miss != hit.end()) {
            r.holds = false;
            r.witness = IdpWitness{n, target[static_cast<std::size_t>(miss - hit.begin())]};
            r.witness_verified = !is_decomposable(h, s1, r.witness->point, n);
            return r;
        }
        current = std::move(tkeys);
    }
    return r;
}

/// Degree-one lattice points of Omega(Q) as predicted structurally:
/// (Q ∩ Z^d) x {1}, -(Q ∩ Z^d) x {-1}, and the origin.
inline std::vector<Point> omega_degree_one_points(const LatticePolytope& q, std::uint64_t budget = kDefaultPointBudget) {
    const auto pts = lattice_points(q, 1, budget).points;
    std::vector<Point> out;
    for (const auto& x : pts) {
        Point up = x;
        up.push_back(1);
        out.push_back(std::move(up));
        Point down;
        for (Coord c : x) down.push_back(-c);
        down.push_back(-1);
        out.push_back(std::move(down));
    }
    out.emplace_back(q.ambient_dim() + 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// The explicit point showing Omega(Q_G) is not normal when G has two
/// disjoint odd cycles of lengths 2k+1 and 2l+1.
struct NonNormalityWitness {
    Graph relabeled;                 ///< C1 = 1..2k+1, C2 = 2k+2..2k+2l+2, both in cycle order
    std::vector<Vertex> relabeling;  ///< old -> new, index 0 unused
    LatticePolytope q;               ///< incidence rows, column 2k+2l+2 deleted
    LatticePolytope omega;
    Point x;
    std::uint64_t dilation = 0;      ///< k + l + 1
};

namespace detail {

inline void check_cycle(const Graph& g, const Cycle& c) {
    if (c.size() < 3 || c.size() % 2 == 0) throw PreconditionError("cycle is not odd");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) throw PreconditionError("sequence is not a cycle of the graph");
    }
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw PreconditionError("cycle repeats a vertex");
}

} // namespace detail

inline NonNormalityWitness non_normality_witness(const Graph& g, const OddCyclePair& pair) {
    detail::check_cycle(g, pair.cycle1);
    detail::check_cycle(g, pair.cycle2);
    for (Vertex v : pair.cycle1) {
        if (std::find(pair.cycle2.begin(), pair.cycle2.end(), v) != pair.cycle2.end()) {
            throw PreconditionError("odd cycles share a vertex");
        }
    }
    const std::size_t n = g.n();
    const std::size_t k = (pair.cycle1.size() - 1) / 2;
    const std::size_t l = (pair.cycle2.size() - 1) / 2;

    std::vector<Vertex> relabel(n + 1, 0);
    Vertex next = 1;
    for (Vertex v : pair.cycle1) relabel[static_cast<std::size_t>(v)] = next++;
    for (Vertex v : pair.cycle2) relabel[static_cast<std::size_t>(v)] = next++;
    for (std::size_t v = 1; v <= n; ++v) {
        if (relabel[v] == 0) relabel[v] = next++;
    }
    Graph h = g.relabeled(relabel);

    const std::size_t drop = 2 * k + 2 * l + 1;  // 0-based column 2k+2l+2
    std::vector<Point> rows;
    for (const Edge& e : h.edges()) {
        Point r(n, 0);
        r[static_cast<std::size_t>(e.u - 1)] = 1;
        r[static_cast<std::size_t>(e.v - 1)] = 1;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
        rows.push_back(std::move(r));
    }
    LatticePolytope q = LatticePolytope::from_vertices(n - 1, std::move(rows));
    if (!q.is_full_dimensional()) throw PreconditionError("column deletion does not give a full-dimensional copy");
    LatticePolytope om = omega(q);

    Point x(n, 0);
    for (std::size_t i = 0; i < 2 * k + 1; ++i) x[i] = 1;
    for (std::size_t i = 2 * k + 1; i < 2 * k + 2 * l + 1; ++i) x[i] = -1;
    x[n - 1] = static_cast<Coord>(k) - static_cast<Coord>(l);
    return NonNormalityWitness{std::move(h), std::move(relabel), std::move(q), std::move(om), std::move(x), k + l + 1};
}

} // namespace edgeflex
