#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monolin/ideal.hpp"

using namespace monolin;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.emplace_back(std::move(g));
    return MonomialIdeal(n, std::move(ms));
}

// brute-force membership: w lies in the ideal iff some generator divides it
bool member(const std::vector<Monomial>& gens, const Monomial& w) {
    for (const Monomial& g : gens)
        if (g.divides(w)) return true;
    return false;
}

} // namespace

TEST_CASE("minimal generators absorb divisible monomials") {
    auto i = ideal(4, {{0, 0, 1, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}});
    CHECK(i.gens() == std::vector<Monomial>{mono({0, 0, 1, 0})});

    auto j = ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(j.num_gens() == 2); // incomparable pair

    // pairwise divisibility oracle on {x^2, xy, x^2 y}
    auto k = ideal(2, {{2, 0}, {1, 1}, {2, 1}});
    CHECK(k.gens() == std::vector<Monomial>{mono({1, 1}), mono({2, 0})});
}

TEST_CASE("minimal_generators is idempotent and membership-preserving") {
    std::vector<Monomial> raw = {mono({2, 0, 1}), mono({1, 1, 0}),
                                 mono({2, 1, 1}), mono({0, 3, 0}),
                                 mono({1, 2, 0})};
    MonomialIdeal once = minimal_generators(3, raw);
    MonomialIdeal twice = minimal_generators(3, once.gens());
    CHECK(once == twice);
    int bound = once.max_gen_degree() + 3;
    for (int d = 0; d <= bound; ++d)
        for (const Monomial& w : monomials_of_degree(3, d))
            CHECK(member(raw, w) == once.contains(w));
}

TEST_CASE("zero and unit ideals") {
    MonomialIdeal zero = MonomialIdeal::zero(3);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.contains(mono({1, 0, 0})));
    MonomialIdeal unit = MonomialIdeal::unit(3);
    CHECK(unit.is_unit());
    CHECK(unit.contains(Monomial::one(3)));
    CHECK(minimal_generators(3, {}).is_zero());
}

TEST_CASE("colon formula examples") {
    // I = (x1x2x3, x3^2x4, x3x4^2) : x1x2 = (x3)
    auto i = ideal(4, {{1, 1, 1, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}});
    CHECK(colon(i, mono({1, 1, 0, 0})) == ideal(4, {{0, 0, 1, 0}}));

    // x^2 : y^2 = (x^2)
    auto xy = ideal(2, {{2, 0}, {0, 2}});
    CHECK(colon(xy.without(mono({0, 2})), mono({0, 2})) == ideal(2, {{2, 0}}));

    // (x^2, xy): with x^2 removed, (xy) : xy includes 1; the in-ideal case
    auto lin = ideal(2, {{2, 0}, {1, 1}});
    CHECK(colon(lin.without(mono({1, 1})), mono({1, 1})) ==
          ideal(2, {{1, 0}}));

    CHECK(colon(MonomialIdeal::zero(2), mono({1, 0})).is_zero());
}

TEST_CASE("colon membership property: w in I:v iff w*v in I") {
    auto i = ideal(3, {{2, 1, 0}, {0, 1, 2}, {1, 0, 1}});
    for (const Monomial& v :
         {mono({1, 0, 0}), mono({1, 1, 0}), mono({0, 0, 2})}) {
        MonomialIdeal c = colon(i, v);
        int bound = i.max_gen_degree() + 3;
        for (int d = 0; d <= bound; ++d)
            for (const Monomial& w : monomials_of_degree(3, d))
                CHECK(c.contains(w) == i.contains(w * v));
    }
}

TEST_CASE("colon by an ideal") {
    auto i = ideal(2, {{1, 1}});
    auto j = ideal(2, {{1, 0}, {0, 1}});
    // (x1x2):(x1) meet (x1x2):(x2) = (x2) meet (x1) = (x1x2)
    CHECK(colon_ideal(i, j) == i);
    // singleton case agrees with the monomial colon
    auto k = ideal(2, {{2, 0}, {0, 2}});
    CHECK(colon_ideal(k, ideal(2, {{0, 2}})) == colon(k, mono({0, 2})));
    // I : I contains 1
    CHECK(colon_ideal(k, k).is_unit());
    CHECK_THROWS_AS(colon_ideal(k, MonomialIdeal::zero(2)), domain_error);
}

TEST_CASE("intersection") {
    CHECK(intersect(ideal(3, {{1, 1, 0}}), ideal(3, {{0, 0, 1}})) ==
          ideal(3, {{1, 1, 1}}));
    auto i = ideal(3, {{2, 0, 0}, {1, 1, 0}});
    CHECK(intersect(i, i) == i);

    // instantiates the intersection step of the strand-preserving extension:
    // I meet x1x2(x2,x3) = (x1x2x3) after minimalization
    auto big = ideal(4, {{1, 1, 1, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}});
    auto l = ideal(4, {{1, 2, 0, 0}, {1, 1, 1, 0}});
    CHECK(intersect(big, l) == ideal(4, {{1, 1, 1, 0}}));
}

TEST_CASE("intersection membership property") {
    auto i = ideal(3, {{2, 0, 0}, {0, 1, 1}});
    auto j = ideal(3, {{1, 1, 0}, {0, 0, 2}});
    MonomialIdeal meet = intersect(i, j);
    int bound = std::max(i.max_gen_degree(), j.max_gen_degree()) + 3;
    for (int d = 0; d <= bound; ++d)
        for (const Monomial& w : monomials_of_degree(3, d))
            CHECK(meet.contains(w) == (i.contains(w) && j.contains(w)));
}

TEST_CASE("generated by variables") {
    auto vars = ideal(4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
    auto rep = is_generated_by_variables(vars);
    CHECK(rep.generated_by_variables);
    CHECK(rep.variables.indices() == std::vector<int>{1, 3});

    auto deg2 = ideal(4, {{0, 0, 1, 1}});
    auto rep2 = is_generated_by_variables(deg2);
    CHECK_FALSE(rep2.generated_by_variables);
    CHECK(*rep2.witness == mono({0, 0, 1, 1}));

    CHECK(is_generated_by_variables(MonomialIdeal::zero(4))
              .generated_by_variables);

    // colon((x1x2, x3x4), x1x2) = (x3x4) is not generated by variables
    auto pair = ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto c = colon(pair.without(mono({1, 1, 0, 0})), mono({1, 1, 0, 0}));
    CHECK(c == ideal(4, {{0, 0, 1, 1}}));
    CHECK_FALSE(is_generated_by_variables(c).generated_by_variables);
}

TEST_CASE("polarization") {
    // (x^2) -> (x_{1,1} x_{1,2})
    auto p = polarize(ideal(1, {{2}}));
    CHECK(p.ideal == ideal(2, {{1, 1}}));
    CHECK(p.back_map ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});

    // squarefree ideals are fixed points up to renaming
    auto sf = ideal(3, {{1, 1, 0}, {0, 1, 1}});
    auto psf = polarize(sf);
    CHECK(psf.ideal.num_gens() == 2);
    CHECK(psf.ideal.is_squarefree());
    CHECK(psf.ideal.ambient() == 3);

    // per-variable copy counting: (x^2, xy)
    auto q = polarize(ideal(2, {{2, 0}, {1, 1}}));
    CHECK(q.ideal == ideal(3, {{1, 1, 0}, {1, 0, 1}}));
}

TEST_CASE("polarization round trips") {
    auto i = ideal(3, {{2, 1, 0}, {0, 3, 0}, {1, 0, 2}});
    auto p = polarize(i);
    CHECK(p.ideal.is_squarefree());
    // double polarization is the identity up to renaming
    auto pp = polarize(p.ideal);
    CHECK(pp.ideal.num_gens() == p.ideal.num_gens());
    CHECK(pp.ideal.is_squarefree());
    // specializing copies recovers the original generators
    std::vector<Monomial> back;
    for (const Monomial& g : p.ideal.gens())
        back.push_back(p.specialize(g, i.ambient()));
    CHECK(minimal_generators(3, back) == i);
}

TEST_CASE("cross-ambient operations never promote silently") {
    auto i = ideal(2, {{1, 0}});
    CHECK_THROWS_AS(intersect(i, ideal(3, {{1, 0, 0}})), dimension_error);
    CHECK_THROWS_AS(colon(i, mono({1, 0, 0})), dimension_error);
    CHECK_THROWS_AS(MonomialIdeal(2, {mono({1, 0, 0})}), dimension_error);
}

TEST_CASE("equigenerated degree and deletion") {
    auto i = ideal(2, {{2, 0}, {1, 1}});
    CHECK(i.equigenerated_degree() == 2);
    CHECK(ideal(2, {{2, 0}, {0, 1}}).equigenerated_degree() == std::nullopt);
    CHECK(i.without(mono({2, 0})) == ideal(2, {{1, 1}}));
    CHECK_THROWS_AS(i.without(mono({0, 2})), domain_error);
}
