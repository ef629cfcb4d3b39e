#pragma once

// Exact double description: facets of the convex hull of integer points.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeflex/error.hpp"
#include "edgeflex/intlin.hpp"

namespace edgeflex {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

/// Inequality <normal, x> <= rhs, normal primitive.
struct Facet {
    std::vector<BigInt> normal;
    Rational rhs;

    friend bool operator==(const Facet&, const Facet&) = default;
};

struct HRepresentation {
    std::size_t dim = 0;
    std::vector<Facet> facets;     ///< sorted lexicographically by normal
    std::vector<Point> vertices;   ///< the V-side this H-rep was derived from

    friend bool operator==(const HRepresentation&, const HRepresentation&) = default;
};

inline bool lex_less(std::span<const BigInt> a, std::span<const BigInt> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline BigInt dot(std::span<const BigInt> a, std::span<const Coord> x) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (x[i] != 0) s += a[i] * x[i];
    }
    return s;
}

/// Makes v primitive (gcd of entries 1); returns the divisor. Zero vectors are left alone.
inline BigInt make_primitive(std::span<BigInt> v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1) {
        for (auto& x : v) x /= g;
    }
    return g;
}

namespace detail {

/// Fixed-size bitset over point indices.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool subset_of(const Bits& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~other.words_[k]) return false;
        }
        return true;
    }

    friend Bits operator&(Bits a, const Bits& b) {
        for (std::size_t k = 0; k < a.words_.size(); ++k) a.words_[k] &= b.words_[k];
        return a;
    }

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    std::vector<std::uint64_t> words_;
};

// Homogenized inequality h0 + <h', x> >= 0 with the set of points it is tight on.
struct Ray {
    std::vector<BigInt> h;
    Bits tight;
};

inline BigInt evaluate(const std::vector<BigInt>& h, const Point& p) {
    BigInt s = h[0];
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) s += h[i + 1] * p[i];
    }
    return s;
}

inline IntegerMatrix homogeneous_rows(std::span<const Point> pts, std::span<const std::size_t> idx, std::size_t dim) {
    IntegerMatrix m(idx.size(), dim + 1);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        m(r, 0) = 1;
        for (std::size_t j = 0; j < dim; ++j) m(r, j + 1) = pts[idx[r]][j];
    }
    return m;
}

} // namespace detail

/// Facets of conv(points) with per-facet incidence over the input points.
struct HullFacets {
    std::vector<Facet> facets;
    std::vector<detail::Bits> incidence;  ///< incidence[f].test(i): points[i] lies on facet f
};

/// Double description over the homogenized points, inserting them in
/// lexicographic order after an initial simplex. `points` must be distinct and
/// affinely span R^dim, dim >= 1. Adjacency of two inequalities is decided by
/// the combinatorial test on their tight sets.
inline HullFacets double_description(std::span<const Point> points, std::size_t dim) {
    using detail::Bits;
    using detail::Ray;
    const std::size_t n = points.size();
    if (dim == 0) throw DimensionError("double description needs dim >= 1");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

    // Initial simplex: greedy in lexicographic order.
    std::vector<std::size_t> simplex;
    for (std::size_t idx : order) {
        simplex.push_back(idx);
        if (rank(detail::homogeneous_rows(points, simplex, dim)) < simplex.size()) simplex.pop_back();
        if (simplex.size() == dim + 1) break;
    }
    if (simplex.size() != dim + 1) throw PreconditionError("points do not affinely span the ambient space");

    std::vector<Ray> rays;
    for (std::size_t j = 0; j <= dim; ++j) {
        std::vector<std::size_t> others;
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k != j) others.push_back(simplex[k]);
        }
        const IntegerMatrix rows = detail::homogeneous_rows(points, others, dim);
        Ray ray{std::vector<BigInt>(dim + 1), Bits(n)};
        for (std::size_t c = 0; c <= dim; ++c) {
            std::vector<std::size_t> keep;
            for (std::size_t k = 0; k <= dim; ++k) {
                if (k != c) keep.push_back(k);
            }
            IntegerMatrix minor(dim, dim);
            for (std::size_t r = 0; r < dim; ++r) {
                for (std::size_t k = 0; k < dim; ++k) minor(r, k) = rows(r, keep[k]);
            }
            ray.h[c] = (c % 2 == 0 ? 1 : -1) * determinant(minor);
        }
        if (detail::evaluate(ray.h, points[simplex[j]]) < 0) {
            for (auto& x : ray.h) x = -x;
        }
        make_primitive(ray.h);
        for (std::size_t idx : others) ray.tight.set(idx);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> inserted(n, false);
    for (std::size_t idx : simplex) inserted[idx] = true;

    for (std::size_t idx : order) {
        if (inserted[idx]) continue;
        inserted[idx] = true;
        const Point& y = points[idx];
        std::vector<BigInt> value(rays.size());
        std::vector<std::size_t> pos;
        std::vector<std::size_t> neg;
        std::vector<std::size_t> zero;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = detail::evaluate(rays[r].h, y);
            if (value[r] > 0) pos.push_back(r);
            else if (value[r] < 0) neg.push_back(r);
            else zero.push_back(r);
        }
        for (std::size_t r : zero) rays[r].tight.set(idx);
        if (neg.empty()) continue;

        std::vector<Ray> next;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bits common = rays[p].tight & rays[q].tight;
                if (common.count() + 1 < dim) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r != p && r != q && common.subset_of(rays[r].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray ray{std::vector<BigInt>(dim + 1), std::move(common)};
                for (std::size_t c = 0; c <= dim; ++c) ray.h[c] = value[p] * rays[q].h[c] - value[q] * rays[p].h[c];
                make_primitive(ray.h);
                ray.tight.set(idx);
                next.push_back(std::move(ray));
            }
        }
        for (std::size_t r : pos) next.push_back(std::move(rays[r]));
        for (std::size_t r : zero) next.push_back(std::move(rays[r]));
        rays = std::move(next);
    }

    std::vector<std::pair<Facet, Bits>> out;
    out.reserve(rays.size());
    for (auto& ray : rays) {
        Facet f;
        f.normal.assign(ray.h.begin() + 1, ray.h.end());
        for (auto& x : f.normal) x = -x;
        const BigInt g = make_primitive(f.normal);
        f.rhs = Rational(ray.h[0], g);
        out.emplace_back(std::move(f), std::move(ray.tight));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.first.normal, b.first.normal); });
    HullFacets result;
    for (auto& [f, bits] : out) {
        result.facets.push_back(std::move(f));
        result.incidence.push_back(std::move(bits));
    }
    return result;
}

} // namespace edgeflex
