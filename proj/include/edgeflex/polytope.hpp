#pragma once

// Lattice polytopes in V-representation, edge polytopes, their
// full-dimensional unimodular copies, and the Omega(P, Q) construction.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edgeflex/error.hpp"
#include "edgeflex/graphs.hpp"
#include "edgeflex/hull.hpp"
#include "edgeflex/intlin.hpp"

namespace edgeflex {

namespace detail {

// Coordinates on which the projection of aff(points) is injective, chosen
// greedily from the left.
inline std::vector<std::size_t> affine_chart(std::span<const Point> pts, std::size_t ambient) {
    std::vector<std::size_t> chart;
    if (pts.size() < 2) return chart;
    for (std::size_t c = 0; c < ambient; ++c) {
        chart.push_back(c);
        IntegerMatrix diffs(pts.size() - 1, chart.size());
        for (std::size_t i = 1; i < pts.size(); ++i) {
            for (std::size_t k = 0; k < chart.size(); ++k) diffs(i - 1, k) = pts[i][chart[k]] - pts[0][chart[k]];
        }
        if (rank(diffs) < chart.size()) chart.pop_back();
    }
    return chart;
}

inline std::vector<Point> project(std::span<const Point> pts, std::span<const std::size_t> chart) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        Point q;
        q.reserve(chart.size());
        for (std::size_t c : chart) q.push_back(p[c]);
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace detail

/// A lattice polytope given by its vertex set (sorted, every point a true
/// vertex). Full-dimensional polytopes carry their facet list, computed once
/// at construction.
class LatticePolytope {
public:
    /// conv(points); points that are not vertices are dropped.
    static LatticePolytope hull(std::size_t ambient_dim, std::vector<Point> points) {
        return LatticePolytope(ambient_dim, std::move(points), false);
    }

    /// Like hull(), but every given point must be a vertex.
    static LatticePolytope from_vertices(std::size_t ambient_dim, std::vector<Point> vertices) {
        return LatticePolytope(ambient_dim, std::move(vertices), true);
    }

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t intrinsic_dim() const noexcept { return intrinsic_dim_; }
    bool is_full_dimensional() const noexcept { return intrinsic_dim_ == ambient_dim_; }
    const std::vector<Point>& vertices() const noexcept { return vertices_; }

    /// Facets, present iff full-dimensional.
    const HRepresentation* hrep() const noexcept { return hrep_.get(); }

    bool contains_vertex(const Point& p) const { return std::binary_search(vertices_.begin(), vertices_.end(), p); }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

private:
    LatticePolytope(std::size_t ambient_dim, std::vector<Point> points, bool strict) : ambient_dim_(ambient_dim) {
        if (points.empty()) throw PreconditionError("a polytope needs at least one point");
        for (const auto& p : points) {
            if (p.size() != ambient_dim) throw DimensionError("point has wrong dimension");
        }
        std::sort(points.begin(), points.end());
        const auto before = points.size();
        points.erase(std::unique(points.begin(), points.end()), points.end());
        if (strict && points.size() != before) throw PreconditionError("duplicate vertex");

        const auto chart = detail::affine_chart(points, ambient_dim);
        intrinsic_dim_ = chart.size();
        if (intrinsic_dim_ == 0) {
            vertices_ = std::move(points);
            if (ambient_dim_ == 0) {
                // Z^0: one point, no facets.
                auto h = std::make_shared<HRepresentation>();
                h->vertices = vertices_;
                hrep_ = std::move(h);
            }
        } else {
            const auto projected = detail::project(points, chart);
            HullFacets hull = double_description(projected, intrinsic_dim_);
            // p is a vertex iff the facets through it meet in p alone.
            for (std::size_t i = 0; i < points.size(); ++i) {
                detail::Bits face;
                bool on_some = false;
                for (std::size_t f = 0; f < hull.facets.size(); ++f) {
                    if (!hull.incidence[f].test(i)) continue;
                    face = on_some ? (face & hull.incidence[f]) : hull.incidence[f];
                    on_some = true;
                }
                const bool vertex = on_some && face.count() == 1;
                if (vertex) {
                    vertices_.push_back(points[i]);
                } else if (strict) {
                    throw PreconditionError("point " + std::to_string(i) + " is not a vertex of the hull");
                }
            }
            if (intrinsic_dim_ == ambient_dim_) {
                auto h = std::make_shared<HRepresentation>();
                h->dim = ambient_dim_;
                h->facets = std::move(hull.facets);
                h->vertices = vertices_;
                hrep_ = std::move(h);
            }
        }
    }

    std::size_t ambient_dim_;
    std::size_t intrinsic_dim_ = 0;
    std::vector<Point> vertices_;
    std::shared_ptr<const HRepresentation> hrep_;
};

/// Polytope text format: "m v", then v lines of m integers.
inline LatticePolytope parse_polytope(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw ParseError(0, "empty polytope file");
    const auto header = detail::parse_integers(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 0 || header[1] < 1) {
        throw ParseError(lines[0].first, "header must be 'm v' with m >= 0, v >= 1");
    }
    const auto m = static_cast<std::size_t>(header[0]);
    const auto v = static_cast<std::size_t>(header[1]);
    if (lines.size() - 1 != v) {
        throw ParseError(0, "header announces " + std::to_string(v) + " points, found " + std::to_string(lines.size() - 1));
    }
    std::vector<Point> pts;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto xs = detail::parse_integers(lines[k].second, lines[k].first);
        if (xs.size() != m) throw ParseError(lines[k].first, "expected " + std::to_string(m) + " coordinates");
        pts.emplace_back(xs.begin(), xs.end());
    }
    return LatticePolytope::hull(m, std::move(pts));
}

inline LatticePolytope parse_polytope(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_polytope(in);
}

inline std::string to_polytope_text(const LatticePolytope& p) {
    std::ostringstream out;
    out << p.ambient_dim() << ' ' << p.vertices().size() << '\n';
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Edge polytopes

/// conv{e_i + e_j : {i,j} in E(G)} in Z^n.
inline LatticePolytope edge_polytope(const Graph& g) {
    std::vector<Point> pts;
    for (const Edge& e : g.edges()) {
        Point p(g.n(), 0);
        p[static_cast<std::size_t>(e.u - 1)] = 1;
        p[static_cast<std::size_t>(e.v - 1)] = 1;
        pts.push_back(std::move(p));
    }
    return LatticePolytope::from_vertices(g.n(), std::move(pts));
}

/// The matrices behind a graph's full-dimensional copy. The transform is
/// permutation * u * v, u acting first on row vectors; v is the identity
/// when the graph has no bipartite component.
struct CopyFactors {
    std::vector<Vertex> relabeling;
    IntegerMatrix permutation;
    IntegerMatrix u;
    IntegerMatrix v;
};

/// A full-dimensional copy of `source`: x -> x * transform, then the
/// deleted_columns are dropped; on source those coordinates are constant with
/// the values in fixed_coordinates.
struct UnimodularCopy {
    LatticePolytope source;
    LatticePolytope copy;
    IntegerMatrix transform;
    std::vector<std::size_t> deleted_columns;                    ///< 0-based, ascending
    std::vector<std::pair<std::size_t, BigInt>> fixed_coordinates;
    std::optional<CopyFactors> factors;
};

namespace detail {

inline Point apply_row_transform(const Point& x, const IntegerMatrix& t, std::vector<BigInt>* full = nullptr) {
    std::vector<BigInt> y(t.cols(), BigInt(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < t.cols(); ++j) y[j] += x[i] * t(i, j);
    }
    Point out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] > std::numeric_limits<Coord>::max() || y[j] < std::numeric_limits<Coord>::min()) {
            throw DimensionError("transformed coordinate overflows 64 bits");
        }
        out[j] = static_cast<Coord>(y[j]);
    }
    if (full) *full = std::move(y);
    return out;
}

inline Point drop_coordinates(const Point& p, std::span<const std::size_t> drop) {
    Point out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (!std::binary_search(drop.begin(), drop.end(), j)) out.push_back(p[j]);
    }
    return out;
}

} // namespace detail

/// Full-dimensional unimodular copy Q_G of the edge polytope. Without
/// bipartite components the transform is the lower-triangular U with first
/// column all ones, and the first coordinate is constantly 2. With k >= 1
/// bipartite components the graph is first relabeled (see
/// bipartite_decomposition), the transform is permutation * U * V, and the
/// first k+1 coordinates are constantly 1.
///
/// Bipartite and non-bipartite components together admit no integral
/// functional equal to 1 on every edge. There label k+1 moves to the smallest
/// vertex of the first non-bipartite component, u has columns
/// 1_{V_j1} - 1_{V_j2} (constantly 0) and a column of ones (constantly 2),
/// and v is the identity.
inline UnimodularCopy full_dimensional_copy(const Graph& g) {
    const std::size_t n = g.n();
    BipartiteDecomposition dec = bipartite_decomposition(g);
    const std::size_t k = dec.c0();
    const bool mixed = k > 0 && k < dec.components.size();
    if (mixed) {
        const auto odd = std::find(dec.is_bipartite.begin(), dec.is_bipartite.end(), false);
        const Vertex w = dec.components[static_cast<std::size_t>(odd - dec.is_bipartite.begin())].front();
        const auto at = std::find(dec.relabeling.begin() + 1, dec.relabeling.end(), static_cast<Vertex>(k + 1));
        std::swap(*at, dec.relabeling[static_cast<std::size_t>(w)]);
    }

    CopyFactors f;
    f.relabeling = dec.relabeling;
    f.permutation = IntegerMatrix(n, n);
    for (std::size_t old = 1; old <= n; ++old) {
        f.permutation(old - 1, static_cast<std::size_t>(dec.relabeling[old] - 1)) = 1;
    }
    f.u = IntegerMatrix::identity(n);
    f.v = IntegerMatrix::identity(n);

    UnimodularCopy c{edge_polytope(g), LatticePolytope::hull(0, {Point{}}), {}, {}, {}, {}};
    if (k == 0) {
        for (std::size_t i = 0; i < n; ++i) f.u(i, 0) = 1;
        c.deleted_columns = {0};
        c.fixed_coordinates = {{0, BigInt(2)}};
    } else {
        // Membership tests in new labels, 1-based.
        auto label = [&](Vertex v) { return static_cast<std::size_t>(dec.relabeling[static_cast<std::size_t>(v)]); };
        std::vector<std::size_t> side_of(n + 1, 0);      // 1 or 2
        std::vector<std::size_t> comp_of(n + 1, 0);      // bipartite component index 1..k, 0 if none
        for (std::size_t j = 0; j < k; ++j) {
            for (Vertex v : dec.bipartitions[j].side1) side_of[label(v)] = 1, comp_of[label(v)] = j + 1;
            for (Vertex v : dec.bipartitions[j].side2) side_of[label(v)] = 2, comp_of[label(v)] = j + 1;
        }
        for (std::size_t i = 1; i <= n && mixed; ++i) {
            for (std::size_t j = 1; j <= k; ++j) {
                if (comp_of[i] == j) f.u(i - 1, j - 1) = side_of[i] == 1 ? 1 : -1;
            }
            f.u(i - 1, k) = 1;
        }
        for (std::size_t i = 1; i <= n && !mixed; ++i) {
            for (std::size_t j = 1; j <= k; ++j) {
                const bool in_vj1 = comp_of[i] == j && side_of[i] == 1;
                const bool in_v2_not_vj2 = side_of[i] == 2 && comp_of[i] != j;
                if (in_vj1 || in_v2_not_vj2) f.u(i - 1, j - 1) = 1;
            }
            if (side_of[i] == 2) f.v(i - 1, k) = 1;
        }
        for (std::size_t j = 0; j <= k; ++j) {
            c.deleted_columns.push_back(j);
            c.fixed_coordinates.emplace_back(j, BigInt(mixed ? (j == k ? 2 : 0) : 1));
        }
    }
    c.transform = f.permutation * f.u * f.v;

    std::vector<Point> image;
    for (const Point& x : c.source.vertices()) {
        const Point y = detail::apply_row_transform(x, c.transform);
        for (const auto& [idx, value] : c.fixed_coordinates) {
            if (y[idx] != value) throw std::logic_error("full-dimensional copy: deleted coordinate is not constant");
        }
        image.push_back(detail::drop_coordinates(y, c.deleted_columns));
    }
    c.copy = LatticePolytope::from_vertices(n - c.deleted_columns.size(), std::move(image));
    if (!c.copy.is_full_dimensional()) throw std::logic_error("full-dimensional copy is not full-dimensional");
    c.factors = std::move(f);
    return c;
}

/// Checks the recorded transform: unimodular, constant on the deleted
/// coordinates, injective on the source vertices, and onto the copy's vertices.
inline bool verify_unimodular_copy(const UnimodularCopy& c) {
    const std::size_t m = c.source.ambient_dim();
    if (c.transform.rows() != m || c.transform.cols() != m) return false;
    if (!is_unimodular(c.transform)) return false;
    if (!std::is_sorted(c.deleted_columns.begin(), c.deleted_columns.end())) return false;
    if (c.deleted_columns.size() != c.fixed_coordinates.size()) return false;
    if (c.copy.ambient_dim() + c.deleted_columns.size() != m) return false;
    std::vector<Point> image;
    for (const Point& x : c.source.vertices()) {
        const Point y = detail::apply_row_transform(x, c.transform);
        for (std::size_t k = 0; k < c.fixed_coordinates.size(); ++k) {
            const auto& [idx, value] = c.fixed_coordinates[k];
            if (idx != c.deleted_columns[k] || y[idx] != value) return false;
        }
        image.push_back(detail::drop_coordinates(y, c.deleted_columns));
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    return image == c.copy.vertices();
}

// ---------------------------------------------------------------------------
// Omega

/// conv((P x {1}) u (-Q x {-1})) for full-dimensional P, Q in Z^d.
inline LatticePolytope omega(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw DimensionError("omega: P and Q live in different dimensions");
    if (!p.is_full_dimensional() || !q.is_full_dimensional()) {
        throw PreconditionError("omega: P and Q must be full-dimensional");
    }
    const std::size_t d = p.ambient_dim();
    std::vector<Point> pts;
    for (const Point& v : p.vertices()) {
        Point w = v;
        w.push_back(1);
        pts.push_back(std::move(w));
    }
    for (const Point& v : q.vertices()) {
        Point w;
        for (Coord x : v) w.push_back(-x);
        w.push_back(-1);
        pts.push_back(std::move(w));
    }
    return LatticePolytope::from_vertices(d + 1, std::move(pts));
}

inline LatticePolytope omega(const LatticePolytope& p) { return omega(p, p); }

} // namespace edgeflex
