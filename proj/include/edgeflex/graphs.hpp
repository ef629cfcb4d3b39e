#pragma once

// Finite simple graphs on vertices 1..n: parsing, generators, bipartite
// components, odd-cycle enumeration and the odd-cycle normality criteria.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeflex/error.hpp"
#include "edgeflex/intlin.hpp"

namespace edgeflex {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph on 1..n without isolated vertices. Edges keep their input
/// order (it fixes the row order of the incidence matrix); each edge is
/// stored with u < v.
class Graph {
public:
    Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adjacency_(n + 1) {
        if (n == 0) throw InvalidGraphError("graph has no vertices");
        std::set<Edge> seen;
        for (Edge e : edges) {
            if (e.u < 1 || e.v < 1 || static_cast<std::size_t>(e.u) > n || static_cast<std::size_t>(e.v) > n) {
                throw InvalidGraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} has a label outside 1.." + std::to_string(n));
            }
            if (e.u == e.v) throw InvalidGraphError("loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (!seen.insert(e).second) {
                throw InvalidGraphError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
            }
            edges_.push_back(e);
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (std::size_t v = 1; v <= n; ++v) {
            if (adjacency_[v].empty()) throw InvalidGraphError("isolated vertex " + std::to_string(v));
            std::sort(adjacency_[v].begin(), adjacency_[v].end());
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbours of v.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

    bool has_edge(Vertex a, Vertex b) const {
        const auto& nb = neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    /// A_G: one row per edge, ones in the endpoint columns.
    IntegerMatrix incidence_matrix() const {
        IntegerMatrix a(m(), n_);
        for (std::size_t r = 0; r < edges_.size(); ++r) {
            a(r, static_cast<std::size_t>(edges_[r].u - 1)) = 1;
            a(r, static_cast<std::size_t>(edges_[r].v - 1)) = 1;
        }
        return a;
    }

    bool is_connected() const {
        std::vector<bool> seen(n_ + 1, false);
        std::vector<Vertex> stack{1};
        seen[1] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n_;
    }

    /// Same graph with vertex v renamed to relabeling[v] (index 0 unused).
    Graph relabeled(const std::vector<Vertex>& relabeling) const {
        std::vector<Edge> out;
        out.reserve(edges_.size());
        for (const Edge& e : edges_) {
            out.push_back({relabeling.at(static_cast<std::size_t>(e.u)), relabeling.at(static_cast<std::size_t>(e.v))});
        }
        return Graph(n_, out);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// ---------------------------------------------------------------------------
// Edge-list text format

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

inline std::vector<long long> parse_integers(std::string_view text, std::size_t line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc() || ptr != text.data() + j) {
            throw ParseError(line_no, "expected an integer, got '" + std::string(text.substr(i, j - i)) + "'");
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        const std::string_view body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        out.emplace_back(no, std::string(body));
    }
    return out;
}

} // namespace detail

/// Parses "n m" followed by m lines "u v". '#' starts a comment.
inline Graph parse_edge_list(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw ParseError(0, "empty edge list");
    const auto header = detail::parse_integers(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 1 || header[1] < 0) {
        throw ParseError(lines[0].first, "header must be 'n m' with n >= 1, m >= 0");
    }
    const auto n = static_cast<std::size_t>(header[0]);
    const auto m = static_cast<std::size_t>(header[1]);
    if (lines.size() - 1 != m) {
        throw ParseError(0, "header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(lines.size() - 1));
    }
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [no, text] = lines[k];
        const auto uv = detail::parse_integers(text, no);
        if (uv.size() != 2) throw ParseError(no, "edge line must hold exactly two labels");
        if (uv[0] == uv[1]) throw ParseError(no, "loop at vertex " + std::to_string(uv[0]));
        for (long long x : uv) {
            if (x < 1 || x > static_cast<long long>(n)) {
                throw ParseError(no, "label " + std::to_string(x) + " outside 1.." + std::to_string(n));
            }
        }
        edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
    }
    try {
        return Graph(n, edges);
    } catch (const InvalidGraphError& e) {
        throw ParseError(0, e.what());
    }
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Generators

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InvalidGraphError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    edges.push_back({1, static_cast<Vertex>(n)});
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    if (n < 2) throw InvalidGraphError("complete graph needs n >= 2");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
    return Graph(n, edges);
}

/// K_{a,b} with parts {1..a} and {a+1..a+b}.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw InvalidGraphError("complete bipartite graph needs a, b >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= a; ++i) {
        for (std::size_t j = a + 1; j <= a + b; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
    return Graph(a + b, edges);
}

/// Cycles 1..2k+1 and 2k+2..2k+2l+2 joined by the bridge {2k+1, 2k+2}.
inline Graph dumbbell_graph(std::size_t k, std::size_t l) {
    if (k < 1 || l < 1) throw InvalidGraphError("dumbbell needs k, l >= 1");
    const auto first = static_cast<Vertex>(2 * k + 1);
    const auto second = static_cast<Vertex>(2 * l + 1);
    std::vector<Edge> edges;
    auto add_cycle = [&edges](Vertex start, Vertex len) {
        for (Vertex i = 0; i + 1 < len; ++i) edges.push_back({start + i, start + i + 1});
        edges.push_back({start, start + len - 1});
    };
    add_cycle(1, first);
    add_cycle(first + 1, second);
    edges.push_back({first, first + 1});
    std::sort(edges.begin(), edges.end());
    return Graph(static_cast<std::size_t>(first + second), edges);
}

/// G(n, p) from a seeded mt19937_64, comparing raw draws against p * 2^64 so the
/// output does not depend on the standard library's distribution code. Draws
/// with an isolated vertex are discarded and the stream continues.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (n < 2 || !(p > 0.0) || p > 1.0) throw InvalidGraphError("random graph needs n >= 2 and 0 < p <= 1");
    std::mt19937_64 rng(seed);
    const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
    const std::uint64_t threshold =
        scaled >= 18446744073709551615.0L ? UINT64_MAX : static_cast<std::uint64_t>(scaled);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Edge> edges;
        std::vector<int> degree(n + 1, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                const std::uint64_t draw = rng();
                if (threshold == UINT64_MAX || draw < threshold) {
                    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                    ++degree[i];
                    ++degree[j];
                }
            }
        }
        if (std::all_of(degree.begin() + 1, degree.end(), [](int d) { return d > 0; })) return Graph(n, edges);
    }
    throw InvalidGraphError("random graph: no draw without isolated vertices (p too small)");
}

namespace detail {

inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    // 0-based i < j, row-major over the upper triangle
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) {
        mask |= std::uint64_t{1} << pair_index(g.n(), static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1));
    }
    return mask;
}

/// For every vertex permutation, the image of each pair index.
inline std::vector<std::vector<std::uint8_t>> pair_permutations(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint8_t>> out;
    do {
        std::vector<std::uint8_t> image(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::size_t a = std::min(perm[i], perm[j]);
                const std::size_t b = std::max(perm[i], perm[j]);
                image[pair_index(n, i, j)] = static_cast<std::uint8_t>(pair_index(n, a, b));
            }
        }
        out.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline std::uint64_t apply_pair_permutation(std::uint64_t mask, const std::vector<std::uint8_t>& image) {
    std::uint64_t out = 0;
    while (mask) {
        const int bit = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << image[static_cast<std::size_t>(bit)];
    }
    return out;
}

inline bool mask_connected(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint32_t> nb(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (mask >> pair_index(n, i, j) & 1U) {
                nb[i] |= 1U << j;
                nb[j] |= 1U << i;
            }
        }
    }
    std::uint32_t reached = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (frontier >> v & 1U) next |= nb[v];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (n >= 32 ? UINT32_MAX : (1U << n) - 1U);
}

inline Graph graph_from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (mask >> pair_index(n, i, j) & 1U) edges.push_back({static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)});
        }
    }
    return Graph(n, edges);
}

} // namespace detail

/// Largest edge mask over all vertex relabelings; equal for isomorphic graphs.
/// Brute force over n! permutations, so n <= 8.
inline std::uint64_t canonical_edge_mask(const Graph& g) {
    if (g.n() > 8) throw InvalidGraphError("canonical form supports n <= 8");
    const std::uint64_t mask = detail::edge_mask(g);
    std::uint64_t best = 0;
    for (const auto& image : detail::pair_permutations(g.n())) {
        best = std::max(best, detail::apply_pair_permutation(mask, image));
    }
    return best;
}

/// All connected simple graphs on exactly n vertices, one per isomorphism
/// class, ordered by decreasing canonical mask. Exhaustive over labeled
/// graphs, so n <= 6.
inline std::vector<Graph> connected_graphs(std::size_t n) {
    if (n < 2 || n > 6) throw InvalidGraphError("connected graph enumeration supports 2 <= n <= 6");
    const std::size_t pairs = n * (n - 1) / 2;
    const auto perms = detail::pair_permutations(n);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs); ++mask) {
        if (!detail::mask_connected(mask, n)) continue;
        bool canonical = true;
        for (const auto& image : perms) {
            if (detail::apply_pair_permutation(mask, image) > mask) {
                canonical = false;
                break;
            }
        }
        if (canonical) reps.push_back(mask);
    }
    std::sort(reps.rbegin(), reps.rend());
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (std::uint64_t mask : reps) out.push_back(detail::graph_from_mask(mask, n));
    return out;
}

/// Up to `count` pairwise non-isomorphic connected G(n, p) graphs drawn from
/// consecutive seeds starting at `seed`.
inline std::vector<Graph> sample_connected_graphs(std::size_t n, std::size_t count, double p, std::uint64_t seed) {
    std::vector<Graph> out;
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = seed; out.size() < count && s < seed + 1000 * (count + 1); ++s) {
        Graph g = random_graph(n, p, s);
        if (!g.is_connected()) continue;
        if (seen.insert(canonical_edge_mask(g)).second) out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Connected components and bipartitions

struct Bipartition {
    std::vector<Vertex> side1;  ///< contains the component's smallest vertex
    std::vector<Vertex> side2;
};

/// Components ordered by smallest vertex. `relabeling[v]` is the new label of
/// v (index 0 unused): the i-th bipartite component's smallest vertex becomes
/// i, the smallest vertex of the first bipartite component's second side
/// becomes k+1, and every other vertex keeps its relative order after that.
struct BipartiteDecomposition {
    std::vector<std::vector<Vertex>> components;
    std::vector<bool> is_bipartite;          ///< per component
    std::vector<Bipartition> bipartitions;   ///< bipartite components only, in order
    std::vector<Vertex> relabeling;

    std::size_t c0() const noexcept { return bipartitions.size(); }
};

inline BipartiteDecomposition bipartite_decomposition(const Graph& g) {
    const std::size_t n = g.n();
    BipartiteDecomposition out;
    std::vector<int> colour(n + 1, -1);
    for (Vertex start = 1; start <= static_cast<Vertex>(n); ++start) {
        if (colour[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<Vertex> comp;
        bool bipartite = true;
        std::queue<Vertex> queue;
        queue.push(start);
        colour[static_cast<std::size_t>(start)] = 0;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                auto& cw = colour[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - colour[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (cw == colour[static_cast<std::size_t>(v)]) {
                    bipartite = false;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        if (bipartite) {
            Bipartition parts;
            for (Vertex v : comp) (colour[static_cast<std::size_t>(v)] == 0 ? parts.side1 : parts.side2).push_back(v);
            out.bipartitions.push_back(std::move(parts));
        }
        out.components.push_back(std::move(comp));
        out.is_bipartite.push_back(bipartite);
    }

    out.relabeling.assign(n + 1, 0);
    Vertex next = 1;
    for (const auto& parts : out.bipartitions) out.relabeling[static_cast<std::size_t>(parts.side1.front())] = next++;
    if (!out.bipartitions.empty()) {
        out.relabeling[static_cast<std::size_t>(out.bipartitions.front().side2.front())] = next++;
    }
    for (std::size_t v = 1; v <= n; ++v) {
        if (out.relabeling[v] == 0) out.relabeling[v] = next++;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Odd cycles

/// A simple cycle as a vertex sequence; consecutive vertices (and the last and
/// first) are adjacent.
using Cycle = std::vector<Vertex>;

struct OddCyclePair {
    Cycle cycle1;
    Cycle cycle2;
    bool bridged = false;

    friend bool operator==(const OddCyclePair&, const OddCyclePair&) = default;
};

struct CycleLimits {
    std::size_t cap = 100000;       ///< maximum number of odd cycles
    std::size_t max_vertices = 12;  ///< exhaustive criteria refuse larger graphs
};

/// Every simple odd cycle exactly once, starting at its smallest vertex with
/// the second vertex smaller than the last. Throws CycleCapExceeded once more
/// than `cap` odd cycles are found.
inline std::vector<Cycle> enumerate_odd_cycles(const Graph& g, std::size_t cap = CycleLimits{}.cap) {
    std::vector<Cycle> out;
    std::vector<bool> on_path(g.n() + 1, false);
    Cycle path;
    auto dfs = [&](auto&& self, Vertex v, Vertex start) -> void {
        for (Vertex w : g.neighbors(v)) {
            if (w == start) {
                if (path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) {
                    out.push_back(path);
                    if (out.size() > cap) {
                        throw CycleCapExceeded("more than " + std::to_string(cap) + " odd cycles");
                    }
                }
            } else if (w > start && !on_path[static_cast<std::size_t>(w)]) {
                on_path[static_cast<std::size_t>(w)] = true;
                path.push_back(w);
                self(self, w, start);
                path.pop_back();
                on_path[static_cast<std::size_t>(w)] = false;
            }
        }
    };
    for (Vertex s = 1; s <= static_cast<Vertex>(g.n()); ++s) {
        path.assign(1, s);
        on_path[static_cast<std::size_t>(s)] = true;
        dfs(dfs, s, s);
        on_path[static_cast<std::size_t>(s)] = false;
    }
    return out;
}

namespace detail {

inline std::uint64_t vertex_mask(const Cycle& c) {
    std::uint64_t m = 0;
    for (Vertex v : c) m |= std::uint64_t{1} << (v - 1);
    return m;
}

inline void check_exhaustive_size(const Graph& g, const CycleLimits& limits) {
    if (g.n() > limits.max_vertices || g.n() > 64) {
        throw PreconditionError("graph with " + std::to_string(g.n()) +
                                " vertices exceeds the exhaustive odd-cycle limit of " +
                                std::to_string(std::min<std::size_t>(limits.max_vertices, 64)));
    }
}

struct CycleIndex {
    std::vector<Cycle> cycles;
    std::vector<std::uint64_t> masks;
    std::vector<std::uint64_t> closed_neighbourhood;  // per cycle: union of its vertices' neighbours

    CycleIndex(const Graph& g, const CycleLimits& limits) : cycles(enumerate_odd_cycles(g, limits.cap)) {
        std::vector<std::uint64_t> nb(g.n() + 1, 0);
        for (const Edge& e : g.edges()) {
            nb[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << (e.v - 1);
            nb[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << (e.u - 1);
        }
        for (const Cycle& c : cycles) {
            masks.push_back(vertex_mask(c));
            std::uint64_t reach = 0;
            for (Vertex v : c) reach |= nb[static_cast<std::size_t>(v)];
            closed_neighbourhood.push_back(reach);
        }
    }

    bool bridged(std::size_t i, std::size_t j) const { return (closed_neighbourhood[i] & masks[j]) != 0; }
};

} // namespace detail

struct DisjointOddCycles {
    bool found = false;
    std::optional<OddCyclePair> witness;  ///< first disjoint pair in enumeration order
};

inline DisjointOddCycles has_two_disjoint_odd_cycles(const Graph& g, const CycleLimits& limits = {}) {
    detail::check_exhaustive_size(g, limits);
    const detail::CycleIndex index(g, limits);
    for (std::size_t i = 0; i < index.cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < index.cycles.size(); ++j) {
            if ((index.masks[i] & index.masks[j]) == 0) {
                return {true, OddCyclePair{index.cycles[i], index.cycles[j], index.bridged(i, j)}};
            }
        }
    }
    return {};
}

struct OhsugiHibiResult {
    bool holds = true;
    std::optional<OddCyclePair> counterexample;  ///< an unbridged disjoint pair when !holds
};

/// True iff every two vertex-disjoint odd cycles are joined by an edge.
/// Defined for connected graphs only.
inline OhsugiHibiResult ohsugi_hibi_criterion(const Graph& g, const CycleLimits& limits = {}) {
    if (!g.is_connected()) throw PreconditionError("odd-cycle normality criterion needs a connected graph");
    detail::check_exhaustive_size(g, limits);
    const detail::CycleIndex index(g, limits);
    for (std::size_t i = 0; i < index.cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < index.cycles.size(); ++j) {
            if ((index.masks[i] & index.masks[j]) == 0 && !index.bridged(i, j)) {
                return {false, OddCyclePair{index.cycles[i], index.cycles[j], false}};
            }
        }
    }
    return {};
}

} // namespace edgeflex
