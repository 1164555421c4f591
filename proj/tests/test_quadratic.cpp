#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monolin/complexes.hpp"
#include "monolin/linearity.hpp"
#include "monolin/quadratic.hpp"

using namespace monolin;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.emplace_back(std::move(g));
    return MonomialIdeal(n, std::move(ms));
}

// exhaustive pair oracle for the indmat >= 2 decision
bool oracle_two_matching(const IdealGraph& g) {
    for (size_t a = 0; a < g.edges.size(); ++a)
        for (size_t b = a + 1; b < g.edges.size(); ++b) {
            auto [a1, a2] = g.edges[a];
            auto [b1, b2] = g.edges[b];
            if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
            bool crossing = false;
            for (int x : {a1, a2})
                for (int y : {b1, b2})
                    if (g.has_edge(x, y)) crossing = true;
            if (!crossing) return true;
        }
    return false;
}

} // namespace

TEST_CASE("graph construction") {
    auto g = graph_of_ideal(ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(g.shadows.empty());

    auto shadow = graph_of_ideal(ideal(2, {{2, 0}}));
    CHECK(shadow.shadows == std::vector<int>{1});
    CHECK(shadow.edges == std::vector<std::pair<int, int>>{{1, 3}});

    auto mixed = graph_of_ideal(ideal(2, {{1, 1}, {2, 0}}));
    CHECK(mixed.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});

    CHECK_THROWS_AS(graph_of_ideal(ideal(2, {{1, 2}})), domain_error);

    // the construction round-trips
    for (const auto& i : {ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 2, 0, 0}}),
                          ideal(3, {{2, 0, 0}, {0, 1, 1}})})
        CHECK(ideal_of_graph(graph_of_ideal(i)) == i);
}

TEST_CASE("induced matching number") {
    auto disjoint = graph_of_ideal(ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    auto rep = induced_matching_number(disjoint);
    CHECK(rep.number == 2);
    CHECK(rep.witness.size() == 2);

    auto triangle = graph_of_ideal(
        ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(induced_matching_number(triangle).number == 1);

    // path on four vertices: the outer edges are bridged by the middle one
    auto path = graph_of_ideal(
        ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
    CHECK(induced_matching_number(path).number == 1);

    IdealGraph big;
    big.n = 30;
    for (int k = 1; k <= 25; ++k) big.edges.push_back({k, k + 1});
    CHECK_THROWS_AS(induced_matching_number(big), resource_error);
}

TEST_CASE("pair-scan decision matches the full search") {
    std::vector<MonomialIdeal> corpus = {
        ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}),
        ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}),
        ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}),
        ideal(4, {{2, 0, 0, 0}, {0, 2, 0, 0}}),
        ideal(4, {{1, 1, 0, 0}, {0, 0, 2, 0}}),
    };
    for (const auto& i : corpus) {
        IdealGraph g = graph_of_ideal(i);
        CHECK(has_induced_two_matching(g) == oracle_two_matching(g));
        CHECK((induced_matching_number(g).number >= 2) ==
              has_induced_two_matching(g));
    }
}

TEST_CASE("the quadratic characterization on worked cases") {
    auto disjoint = quadratic_quasilinear_check(
        ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK_FALSE(disjoint.via_graph);
    CHECK_FALSE(disjoint.via_definition);

    auto triangle = quadratic_quasilinear_check(
        ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(triangle.via_graph);
    CHECK(triangle.via_definition);

    // two shadow edges: (x1^2, x2^2)
    auto squares = quadratic_quasilinear_check(ideal(2, {{2, 0}, {0, 2}}));
    CHECK_FALSE(squares.via_graph);
    CHECK_FALSE(squares.via_definition);
}

TEST_CASE("the two characterizations agree on every quadratic ideal, n = 3") {
    // exhaustive: all nonzero subsets of the 6 quadratic monomials on [3]
    std::vector<Monomial> quads = monomials_of_degree(3, 2);
    for (uint32_t mask = 1; mask < (uint32_t(1) << quads.size()); ++mask) {
        std::vector<Monomial> gens;
        for (size_t k = 0; k < quads.size(); ++k)
            if (mask >> k & 1) gens.push_back(quads[k]);
        auto check = quadratic_quasilinear_check(MonomialIdeal(3, gens));
        CHECK(check.via_graph == check.via_definition);
    }
}

TEST_CASE("quasi-linearity passes through polarization in degree 2") {
    std::vector<MonomialIdeal> corpus = {
        ideal(2, {{2, 0}, {0, 2}}),
        ideal(2, {{2, 0}, {1, 1}}),
        ideal(3, {{2, 0, 0}, {0, 1, 1}, {1, 1, 0}}),
        ideal(4, {{1, 1, 0, 0}, {0, 0, 2, 0}}),
    };
    for (const auto& i : corpus)
        CHECK(is_quasi_linear(i).quasi_linear ==
              is_quasi_linear(polarize(i).ideal).quasi_linear);
}

TEST_CASE("squarefree quadratics against complement four-cycles") {
    // quasi-linear iff the complement has no induced 4-cycle
    for (int n : {4, 5}) {
        auto all_edges = all_subsets_of_size(n, 2);
        // sweep a few hundred edge subsets deterministically
        for (uint32_t mask = 1; mask < (uint32_t(1) << all_edges.size());
             mask += 7) {
            std::vector<std::pair<int, int>> edges;
            std::vector<Monomial> gens;
            for (size_t k = 0; k < all_edges.size(); ++k)
                if (mask >> k & 1) {
                    edges.emplace_back(all_edges[k][0], all_edges[k][1]);
                    gens.push_back(face_monomial(n, all_edges[k]));
                }
            MonomialIdeal i(n, gens);
            CHECK(is_quasi_linear(i).quasi_linear ==
                  !complement_has_induced_four_cycle(n, edges));
        }
    }
}

TEST_CASE("variables strongly linear over edge ideals are neighborhood covers") {
    auto star_plus = edge_ideal(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}});
    // N(2) = {1,3} meets every edge
    CHECK(is_strongly_linear(mono({0, 1, 0, 0}), star_plus).strongly_linear);
    // N(4) = {1} misses the edge {2,3}
    CHECK_FALSE(is_strongly_linear(mono({0, 0, 0, 1}), star_plus)
                    .strongly_linear);

    // systematic check of the equivalence on one more graph
    auto square = edge_ideal(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    for (int v = 1; v <= 4; ++v) {
        std::vector<int> nbhd;
        for (int w = 1; w <= 4; ++w)
            if (square.contains(mono({0, 0, 0, 0}).times_var(v).times_var(w)) &&
                v != w)
                nbhd.push_back(w);
        bool covers = true;
        for (const Monomial& e : square.gens()) {
            bool hit = false;
            for (int w : nbhd)
                if (e.exponent(w) > 0) hit = true;
            covers = covers && hit;
        }
        CHECK(is_strongly_linear(Monomial::variable(4, v), square)
                  .strongly_linear == covers);
    }
}
