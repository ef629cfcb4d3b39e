// A short walk through the library on a single graph.
//
//   edgeflex_tour                 # two triangles joined by a bridge
//   edgeflex_tour graph.txt       # any edge-list file

#include <fstream>
#include <iostream>

#include "edgeflex/report.hpp"

using namespace edgeflex;

namespace {

void print_point(const Point& p) {
    std::cout << '(';
    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p[i];
    std::cout << ')';
}

} // namespace

int main(int argc, char** argv) {
    Graph g = dumbbell_graph(1, 1);
    if (argc > 1) {
        std::ifstream in(argv[1]);
        if (!in) {
            std::cerr << "cannot open " << argv[1] << '\n';
            return 1;
        }
        g = parse_edge_list(in);
    }
    std::cout << to_edge_list(g);

    const UnimodularCopy c = full_dimensional_copy(g);
    std::cout << "dim P_G = " << c.copy.ambient_dim() << ", c0 = " << bipartite_decomposition(g).c0() << '\n';
    std::cout << "transform " << c.transform << '\n';
    std::cout << "Q_G vertices:";
    for (const auto& v : c.copy.vertices()) std::cout << ' ', print_point(v);
    std::cout << '\n';

    const LatticePolytope om = omega(c.copy);
    const ReflexivityCertificate cert = reflexivity_certificate(om);
    std::cout << "Omega(Q_G): " << cert.hrep.facets.size() << " facets, reflexive = " << std::boolalpha << cert.verdict << '\n';
    std::cout << to_hrep_text(cert.hrep);

    if (!g.is_connected()) return 0;
    const IdpReport idp = idp_check(om);
    std::cout << "Omega(Q_G) normal up to N = " << idp.checked_up_to << ": " << idp.holds << '\n';
    if (idp.witness) {
        std::cout << "  missing point at N = " << idp.witness->dilation << ": ";
        print_point(idp.witness->point);
        std::cout << (idp.witness_verified ? " (no decomposition exists)" : "") << '\n';
    }
    const auto pair = has_two_disjoint_odd_cycles(g);
    if (pair.witness) {
        const NonNormalityWitness w = non_normality_witness(g, *pair.witness);
        std::cout << "explicit witness at N = " << w.dilation << ": ";
        print_point(w.x);
        std::cout << '\n';
    }
    return 0;
}
