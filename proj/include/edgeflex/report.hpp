#pragma once

// Per-graph certification: reflexivity of Omega(Q_G), dimension bookkeeping,
// and the graph criteria cross-checked against brute-force normality.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgeflex/dual.hpp"
#include "edgeflex/graphs.hpp"
#include "edgeflex/intlin.hpp"
#include "edgeflex/lattice.hpp"
#include "edgeflex/polytope.hpp"

namespace edgeflex {

struct Limits {
    CycleLimits cycles;
    std::uint64_t point_budget = kDefaultPointBudget;
    std::optional<std::uint64_t> n_max;
};

struct CertifyResult {
    std::size_t c0 = 0;
    std::size_t dim_formula = 0;   ///< n - c0 - 1
    std::size_t dim_rank = 0;    ///< rank(A_G) - 1
    bool copy_verified = false;
    bool reflexive = false;
    std::optional<bool> unique_interior_point;
    std::size_t omega_facets = 0;
    std::size_t reflexive_dimension_bound = 0;  ///< dim + 1
    bool facet_embedding = false;               ///< Q_G x {1} is a facet of Omega(Q_G)
};

struct NormalityResult {
    bool two_disjoint_odd_cycles = false;
    std::optional<OddCyclePair> disjoint_pair;
    bool ohsugi_hibi = false;
    std::optional<OddCyclePair> unbridged_pair;
    IdpReport idp_q;
    IdpReport idp_omega;
    /// Explicit witness from the disjoint pair, when there is one.
    std::optional<Point> explicit_witness;
    std::uint64_t explicit_dilation = 0;
    bool explicit_witness_in_dilate = false;
    bool explicit_witness_indecomposable = false;

    bool q_agrees() const { return idp_q.holds == ohsugi_hibi; }
    bool omega_agrees() const {
        return idp_omega.holds == !two_disjoint_odd_cycles && idp_omega.degree_one_structural_match.value_or(true) &&
               (!explicit_witness || (explicit_witness_in_dilate && explicit_witness_indecomposable)) &&
               (!idp_omega.witness || idp_omega.witness_verified) && (!idp_q.witness || idp_q.witness_verified);
    }
};

struct GraphReport {
    std::string id;
    std::size_t n = 0;
    std::size_t m = 0;
    bool connected = false;
    std::optional<CertifyResult> certify;
    std::optional<NormalityResult> normality;
    std::optional<std::string> error;
    double seconds = 0;

    /// A computed verdict contradicts a theorem or an internal cross-check.
    bool disagreement() const {
        if (certify) {
            if (certify->dim_formula != certify->dim_rank || !certify->copy_verified || !certify->reflexive ||
                !certify->facet_embedding || certify->unique_interior_point == false) {
                return true;
            }
        }
        if (normality && (!normality->q_agrees() || !normality->omega_agrees())) return true;
        return false;
    }
};

inline CertifyResult certify_graph(const Graph& g) {
    CertifyResult r;
    const UnimodularCopy copy = full_dimensional_copy(g);
    r.c0 = bipartite_decomposition(g).c0();
    r.dim_formula = g.n() - r.c0 - 1;
    r.dim_rank = rank(g.incidence_matrix()) - 1;
    r.copy_verified = verify_unimodular_copy(copy) && copy.copy.ambient_dim() == r.dim_formula;
    const LatticePolytope om = omega(copy.copy);
    const ReflexivityCertificate cert = reflexivity_certificate(om);
    r.reflexive = cert.verdict;
    r.unique_interior_point = cert.unique_interior_point;
    r.omega_facets = cert.hrep.facets.size();
    r.reflexive_dimension_bound = r.dim_formula + 1;
    // Height coordinate <= 1 must be a facet, and it must contain exactly the
    // lifted vertices of Q_G.
    const std::size_t d = copy.copy.ambient_dim();
    for (const Facet& f : cert.hrep.facets) {
        bool top = f.rhs == 1 && f.normal[d] == 1;
        for (std::size_t i = 0; i < d && top; ++i) top = f.normal[i] == 0;
        if (top) r.facet_embedding = true;
    }
    return r;
}

/// Connected graphs only.
inline NormalityResult normality_graph(const Graph& g, const Limits& lim) {
    if (!g.is_connected()) throw PreconditionError("normality checks need a connected graph");
    NormalityResult r;
    const auto dis = has_two_disjoint_odd_cycles(g, lim.cycles);
    r.two_disjoint_odd_cycles = dis.found;
    r.disjoint_pair = dis.witness;
    const auto oh = ohsugi_hibi_criterion(g, lim.cycles);
    r.ohsugi_hibi = oh.holds;
    r.unbridged_pair = oh.counterexample;

    const UnimodularCopy copy = full_dimensional_copy(g);
    const IdpOptions opt{lim.n_max, lim.point_budget};
    r.idp_q = idp_check(copy.copy, opt);
    const LatticePolytope om = omega(copy.copy);
    const auto layer = omega_degree_one_points(copy.copy, lim.point_budget);
    r.idp_omega = idp_check(om, opt, &layer);

    if (dis.witness) {
        const NonNormalityWitness w = non_normality_witness(g, *dis.witness);
        const HRepresentation& h = facet_enumeration(w.omega);
        r.explicit_witness = w.x;
        r.explicit_dilation = w.dilation;
        r.explicit_witness_in_dilate = detail::in_dilate(detail::integer_facets(h, w.dilation), w.x);
        const auto s1 = lattice_points(h, 1, lim.point_budget).points;
        r.explicit_witness_indecomposable = !is_decomposable(h, s1, w.x, w.dilation);
    }
    return r;
}

enum class Mode { certify, normality, both };

inline GraphReport analyse(std::string id, const Graph& g, Mode mode, const Limits& lim) {
    GraphReport rep;
    rep.id = std::move(id);
    rep.n = g.n();
    rep.m = g.m();
    rep.connected = g.is_connected();
    const auto start = std::chrono::steady_clock::now();
    try {
        if (mode != Mode::normality) rep.certify = certify_graph(g);
        if (mode == Mode::normality || (mode == Mode::both && rep.connected)) rep.normality = normality_graph(g, lim);
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace edgeflex
