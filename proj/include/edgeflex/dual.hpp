#pragma once

// Facet enumeration, reflexivity certificates and duals.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgeflex/error.hpp"
#include "edgeflex/graphs.hpp"
#include "edgeflex/hull.hpp"
#include "edgeflex/intlin.hpp"
#include "edgeflex/polytope.hpp"

namespace edgeflex {

inline const HRepresentation& facet_enumeration(const LatticePolytope& p) {
    if (!p.is_full_dimensional() || !p.hrep()) {
        throw DimensionError("facet enumeration needs a full-dimensional polytope");
    }
    return *p.hrep();
}

/// Every facet strictly separates the origin: 0 < b.
inline bool origin_interior(const HRepresentation& h) {
    if (h.facets.empty()) return false;
    return std::all_of(h.facets.begin(), h.facets.end(), [](const Facet& f) { return f.rhs > 0; });
}

namespace detail {

// Lattice points strictly inside, by scanning the vertex bounding box.
// Returns nullopt when the box holds more than `limit` candidates.
inline std::optional<std::vector<Point>> interior_points_by_scan(const HRepresentation& h, std::uint64_t limit) {
    const std::size_t d = h.dim;
    if (h.vertices.empty()) return std::nullopt;
    Point lo = h.vertices.front();
    Point hi = h.vertices.front();
    for (const auto& v : h.vertices) {
        for (std::size_t i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        const auto w = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
        if (total > limit / w) return std::nullopt;
        total *= w;
    }
    std::vector<Point> inside;
    Point x = lo;
    for (;;) {
        bool strict = true;
        for (const Facet& f : h.facets) {
            if (!(Rational(dot(f.normal, x)) < f.rhs)) {
                strict = false;
                break;
            }
        }
        if (strict) inside.push_back(x);
        std::size_t i = 0;
        while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == d) break;
        ++x[i];
    }
    return inside;
}

} // namespace detail

inline constexpr std::uint64_t kInteriorScanLimit = 1'000'000;

struct ReflexivityCertificate {
    LatticePolytope polytope;
    HRepresentation hrep;
    bool origin_interior = false;
    bool all_rhs_one = false;
    std::vector<std::vector<BigInt>> dual_vertices;  ///< facet normals; empty unless reflexive
    bool verdict = false;
    /// Origin is the only interior lattice point; unset when the bounding box
    /// is too large to scan.
    std::optional<bool> unique_interior_point;
};

inline ReflexivityCertificate reflexivity_certificate(const LatticePolytope& p) {
    const HRepresentation& h = facet_enumeration(p);
    ReflexivityCertificate c{p, h, origin_interior(h), false, {}, false, std::nullopt};
    c.all_rhs_one = std::all_of(h.facets.begin(), h.facets.end(), [](const Facet& f) { return f.rhs == 1; });
    c.verdict = c.origin_interior && c.all_rhs_one;
    if (c.verdict) {
        for (const Facet& f : h.facets) c.dual_vertices.push_back(f.normal);
    }
    if (auto inside = detail::interior_points_by_scan(h, kInteriorScanLimit)) {
        c.unique_interior_point = inside->size() == 1 && std::all_of(inside->front().begin(), inside->front().end(), [](Coord x) { return x == 0; });
    }
    return c;
}

/// P^v for reflexive P: the lattice polytope spanned by the facet normals.
inline LatticePolytope dual_polytope(const LatticePolytope& p) {
    const ReflexivityCertificate c = reflexivity_certificate(p);
    if (!c.verdict) throw PreconditionError("dual of a non-reflexive polytope is not a lattice polytope");
    std::vector<Point> verts;
    for (const auto& a : c.dual_vertices) {
        Point v;
        for (const auto& x : a) v.push_back(static_cast<Coord>(x));
        verts.push_back(std::move(v));
    }
    return LatticePolytope::from_vertices(p.ambient_dim(), std::move(verts));
}

// ---------------------------------------------------------------------------
// Text format: "d f", then f lines "a_1 ... a_d b" with b an integer or p/q.

namespace detail {

inline Rational parse_rational(const std::string& tok, std::size_t line_no) {
    try {
        const auto slash = tok.find('/');
        if (slash == std::string::npos) return Rational(BigInt(tok));
        const BigInt num(tok.substr(0, slash));
        const BigInt den(tok.substr(slash + 1));
        if (den == 0) throw ParseError(line_no, "zero denominator");
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line_no, "bad number '" + tok + "'");
    }
}

} // namespace detail

/// {x : Ax <= 0} = {0}, i.e. the normals positively span R^d.
inline bool is_bounded(const HRepresentation& h) {
    if (h.dim == 0) return true;
    std::vector<Point> normals;
    for (const Facet& f : h.facets) {
        Point v;
        for (const auto& x : f.normal) v.push_back(static_cast<Coord>(x));
        normals.push_back(std::move(v));
    }
    normals.emplace_back(h.dim, 0);
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    if (detail::affine_chart(normals, h.dim).size() < h.dim) return false;
    // Origin strictly inside conv(normals) iff it lies on no facet of the hull
    // of normals together with the origin and is not a vertex of it.
    const HullFacets hull = double_description(normals, h.dim);
    return std::all_of(hull.facets.begin(), hull.facets.end(), [](const Facet& f) { return f.rhs > 0; });
}

/// Vertices of a bounded H-representation by brute force over d-subsets of
/// facets. Rational vertices are allowed.
inline std::vector<std::vector<Rational>> hrep_vertices(const HRepresentation& h) {
    const std::size_t d = h.dim;
    const std::size_t f = h.facets.size();
    std::vector<std::vector<Rational>> out;
    if (d == 0 || f < d) return out;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
        IntegerMatrix a(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) a(r, c) = h.facets[pick[r]].normal[c];
        }
        if (determinant(a) != 0) {
            const RationalMatrix inv = inverse(a);
            std::vector<Rational> x(d, Rational(0));
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) x[r] += inv(r, c) * h.facets[pick[c]].rhs;
            }
            bool feasible = true;
            for (const Facet& fa : h.facets) {
                Rational s = 0;
                for (std::size_t c = 0; c < d; ++c) s += Rational(fa.normal[c]) * x[c];
                if (s > fa.rhs) {
                    feasible = false;
                    break;
                }
            }
            if (feasible && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
        }
        std::size_t i = d;
        while (i > 0 && pick[i - 1] == f - d + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Parses the text format, primitivizes each normal (scaling b alike) and
/// rejects unbounded systems. Vertices are filled in when all are integral.
inline HRepresentation parse_hrep(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw ParseError(0, "empty H-representation");
    const auto header = detail::parse_integers(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 1 || header[1] < 0) throw ParseError(lines[0].first, "header must be 'd f'");
    HRepresentation h;
    h.dim = static_cast<std::size_t>(header[0]);
    const auto f = static_cast<std::size_t>(header[1]);
    if (lines.size() - 1 != f) throw ParseError(0, "header announces " + std::to_string(f) + " inequalities");
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::istringstream ls(lines[k].second);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.size() != h.dim + 1) throw ParseError(lines[k].first, "expected d+1 entries");
        Facet fa;
        for (std::size_t i = 0; i < h.dim; ++i) {
            const Rational r = detail::parse_rational(toks[i], lines[k].first);
            if (denominator(r) != 1) throw ParseError(lines[k].first, "normal entries must be integers");
            fa.normal.push_back(numerator(r));
        }
        fa.rhs = detail::parse_rational(toks.back(), lines[k].first);
        const BigInt g = make_primitive(fa.normal);
        if (g == 0) throw ParseError(lines[k].first, "zero normal");
        fa.rhs /= Rational(g);
        h.facets.push_back(std::move(fa));
    }
    if (!is_bounded(h)) throw PreconditionError("H-representation is unbounded");
    std::sort(h.facets.begin(), h.facets.end(), [](const Facet& a, const Facet& b) { return lex_less(a.normal, b.normal); });
    bool integral = true;
    for (const auto& v : hrep_vertices(h)) {
        Point p;
        for (const auto& x : v) {
            if (denominator(x) != 1) integral = false;
            p.push_back(static_cast<Coord>(numerator(x)));
        }
        h.vertices.push_back(std::move(p));
    }
    if (!integral) h.vertices.clear();
    return h;
}

inline HRepresentation parse_hrep(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_hrep(in);
}

inline std::string to_hrep_text(const HRepresentation& h) {
    std::ostringstream out;
    out << h.dim << ' ' << h.facets.size() << '\n';
    for (const Facet& f : h.facets) {
        for (const auto& a : f.normal) out << a << ' ';
        out << f.rhs << '\n';
    }
    return out.str();
}

} // namespace edgeflex
