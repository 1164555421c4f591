#ifndef MONOLIN_QUADRATIC_HPP
#define MONOLIN_QUADRATIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "monolin/ideal.hpp"

namespace monolin {

/// Graph attached to an ideal generated in degree 2: plain vertices 1..n,
/// plus a shadow vertex n+i whenever x_i^2 is a generator.  Edge {i,j} means
/// x_i x_j in I; edge {i, n+i} means x_i^2 in I.
struct IdealGraph {
    int n = 0;
    std::vector<int> shadows;                 // i with x_i^2 in I
    std::vector<std::pair<int, int>> edges;   // encoded vertices, sorted pairs

    bool is_shadow(int v) const { return v > n; }
    bool has_edge(int a, int b) const;
};

/// Requires every generator to have degree exactly 2.
IdealGraph graph_of_ideal(const MonomialIdeal& ideal);

/// Inverse of graph_of_ideal.
MonomialIdeal ideal_of_graph(const IdealGraph& graph);

/// Edge ideal of a simple graph given by its plain edges.
MonomialIdeal edge_ideal(int n, const std::vector<std::pair<int, int>>& edges);

struct InducedMatchingReport {
    int number = 0;
    std::vector<std::pair<int, int>> witness;
};

/// Maximum induced matching by exhaustive search over edge subsets (cap on
/// the edge count); the witness is the first maximum in edge-lex order.
InducedMatchingReport induced_matching_number(const IdealGraph& graph,
                                              long max_edges = 24);

/// The pair-scan decision indmat >= 2, the only bound quasi-linearity needs.
bool has_induced_two_matching(const IdealGraph& graph);

struct QuadraticCheck {
    bool via_graph = false;      // indmat(G_I) == 1
    bool via_definition = false; // is_quasi_linear(I)
};

/// Both routes of the degree-2 quasi-linearity characterization; their
/// agreement is a property-suite assertion, not enforced here.  The graph
/// route uses the pair-scan decision, so no edge cap applies.
QuadraticCheck quadratic_quasilinear_check(const MonomialIdeal& ideal);

/// Does the complement of the simple graph on [n] with the given edges
/// contain an induced 4-cycle?
bool complement_has_induced_four_cycle(
    int n, const std::vector<std::pair<int, int>>& edges);

} // namespace monolin

#endif
