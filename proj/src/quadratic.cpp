#include "monolin/quadratic.hpp"

#include <algorithm>

#include "monolin/linearity.hpp"

namespace monolin {

namespace {

std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

bool IdealGraph::has_edge(int a, int b) const {
    return std::find(edges.begin(), edges.end(), ordered(a, b)) != edges.end();
}

IdealGraph graph_of_ideal(const MonomialIdeal& ideal) {
    IdealGraph g;
    g.n = ideal.ambient();
    for (const Monomial& m : ideal.gens()) {
        if (m.degree() != 2)
            throw domain_error("graph_of_ideal: non-quadratic generator " +
                               m.str());
        auto supp = m.support();
        if (supp.size() == 2) {
            g.edges.push_back(ordered(supp[0], supp[1]));
        } else {
            g.shadows.push_back(supp[0]);
            g.edges.push_back(ordered(supp[0], g.n + supp[0]));
        }
    }
    std::sort(g.shadows.begin(), g.shadows.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

MonomialIdeal ideal_of_graph(const IdealGraph& graph) {
    std::vector<Monomial> gens;
    for (const auto& [a, b] : graph.edges) {
        if (graph.is_shadow(b))
            gens.push_back(Monomial::variable(graph.n, a).times_var(a));
        else
            gens.push_back(Monomial::variable(graph.n, a).times_var(b));
    }
    return MonomialIdeal(graph.n, std::move(gens));
}

MonomialIdeal edge_ideal(int n,
                         const std::vector<std::pair<int, int>>& edges) {
    std::vector<Monomial> gens;
    for (const auto& [a, b] : edges)
        gens.push_back(Monomial::variable(n, a).times_var(b));
    return MonomialIdeal(n, std::move(gens));
}

namespace {

bool disjoint(const std::pair<int, int>& e, const std::pair<int, int>& f) {
    return e.first != f.first && e.first != f.second && e.second != f.first &&
           e.second != f.second;
}

// e and f extend to an induced pair iff they are disjoint and no graph edge
// joins their endpoints
bool induced_pair(const IdealGraph& g, const std::pair<int, int>& e,
                  const std::pair<int, int>& f) {
    if (!disjoint(e, f)) return false;
    for (int a : {e.first, e.second})
        for (int b : {f.first, f.second})
            if (g.has_edge(a, b)) return false;
    return true;
}

void search_matchings(const IdealGraph& g, size_t from,
                      std::vector<size_t>& current, std::vector<size_t>& best) {
    if (current.size() > best.size()) best = current;
    for (size_t k = from; k < g.edges.size(); ++k) {
        bool ok = true;
        for (size_t chosen : current)
            if (!induced_pair(g, g.edges[chosen], g.edges[k])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(k);
        search_matchings(g, k + 1, current, best);
        current.pop_back();
    }
}

} // namespace

InducedMatchingReport induced_matching_number(const IdealGraph& graph,
                                              long max_edges) {
    if (static_cast<long>(graph.edges.size()) > max_edges)
        throw resource_error("induced_matching_number: too many edges",
                             max_edges);
    std::vector<size_t> current, best;
    search_matchings(graph, 0, current, best);
    InducedMatchingReport report;
    report.number = static_cast<int>(best.size());
    for (size_t k : best) report.witness.push_back(graph.edges[k]);
    return report;
}

bool has_induced_two_matching(const IdealGraph& graph) {
    for (size_t a = 0; a < graph.edges.size(); ++a)
        for (size_t b = a + 1; b < graph.edges.size(); ++b)
            if (induced_pair(graph, graph.edges[a], graph.edges[b]))
                return true;
    return false;
}

QuadraticCheck quadratic_quasilinear_check(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw domain_error("quadratic_quasilinear_check: zero ideal");
    IdealGraph g = graph_of_ideal(ideal);
    QuadraticCheck check;
    check.via_graph = !g.edges.empty() && !has_induced_two_matching(g);
    check.via_definition = is_quasi_linear(ideal).quasi_linear;
    return check;
}

bool complement_has_induced_four_cycle(
    int n, const std::vector<std::pair<int, int>>& edges) {
    auto adj = [&](int a, int b) {
        return std::find(edges.begin(), edges.end(), ordered(a, b)) !=
               edges.end();
    };
    // an induced 4-cycle in the complement on vertices {a,b,c,d} is a pair
    // of disjoint G-edges with no G-edge between them, traversed as
    // complement edges; scanning unordered 4-subsets with the three pairings
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    int v[4] = {a, b, c, d};
                    static const int cyc[3][4] = {
                        {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
                    for (const auto& perm : cyc) {
                        // cycle v0-v1-v2-v3 in the complement, with both
                        // diagonals absent from the complement
                        bool cycle =
                            !adj(v[perm[0]], v[perm[1]]) &&
                            !adj(v[perm[1]], v[perm[2]]) &&
                            !adj(v[perm[2]], v[perm[3]]) &&
                            !adj(v[perm[3]], v[perm[0]]) &&
                            adj(v[perm[0]], v[perm[2]]) &&
                            adj(v[perm[1]], v[perm[3]]);
                        if (cycle) return true;
                    }
                }
    return false;
}

} // namespace monolin
