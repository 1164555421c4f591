#include "monolin/random_gen.hpp"

#include <algorithm>

#include "monolin/linearity.hpp"
#include "monolin/stable.hpp"

namespace monolin {

uint64_t Rng::next() {
    // splitmix64
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
}

uint64_t Rng::derive(uint64_t seed, uint64_t label) {
    Rng mix(seed ^ (label * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return mix.next();
}

std::string kind_name(IdealKind kind) {
    switch (kind) {
    case IdealKind::equigenerated: return "equigenerated";
    case IdealKind::squarefree_equigenerated: return "squarefree-equigenerated";
    case IdealKind::stable: return "stable";
    case IdealKind::linear_quotients_built: return "linear-quotients-built";
    }
    return "?";
}

IdealKind kind_from_name(const std::string& name) {
    if (name == "equigenerated") return IdealKind::equigenerated;
    if (name == "squarefree-equigenerated")
        return IdealKind::squarefree_equigenerated;
    if (name == "stable") return IdealKind::stable;
    if (name == "linear-quotients-built")
        return IdealKind::linear_quotients_built;
    throw domain_error("unknown ideal kind: " + name);
}

namespace {

std::vector<Monomial> pick_distinct(std::vector<Monomial> basis, int count,
                                    Rng& rng) {
    // partial Fisher-Yates
    int take = std::min<int>(count, static_cast<int>(basis.size()));
    for (int k = 0; k < take; ++k) {
        size_t j = static_cast<size_t>(k) +
                   static_cast<size_t>(rng.below(basis.size() -
                                                 static_cast<size_t>(k)));
        std::swap(basis[static_cast<size_t>(k)], basis[j]);
    }
    basis.resize(static_cast<size_t>(take));
    return basis;
}

MonomialIdeal random_linear_quotients_built(const IdealBounds& bounds,
                                            Rng& rng) {
    std::vector<Monomial> basis = monomials_of_degree(bounds.n, bounds.d);
    MonomialIdeal ideal(bounds.n,
                        {basis[static_cast<size_t>(rng.below(basis.size()))]});
    int attempts = 0;
    while (ideal.num_gens() < bounds.num_gens && attempts < 400) {
        ++attempts;
        // nudge a random generator by one exchange of variables; such
        // neighbours usually have a variable-generated colon
        const Monomial& u =
            ideal.gens()[static_cast<size_t>(rng.below(ideal.gens().size()))];
        auto supp = u.support();
        int from = supp[static_cast<size_t>(rng.below(supp.size()))];
        int to = static_cast<int>(rng.below(static_cast<uint64_t>(bounds.n))) + 1;
        if (to == from) continue;
        Monomial w = u.times_var(to).div_var(from);
        if (ideal.contains(w)) continue;
        if (!is_generated_by_variables(colon(ideal, w)).generated_by_variables)
            continue;
        ideal = ideal.plus({w});
    }
    return ideal;
}

} // namespace

MonomialIdeal random_ideal(IdealKind kind, const IdealBounds& bounds,
                           uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
    case IdealKind::equigenerated: {
        auto gens = pick_distinct(monomials_of_degree(bounds.n, bounds.d),
                                  bounds.num_gens, rng);
        return MonomialIdeal(bounds.n, std::move(gens));
    }
    case IdealKind::squarefree_equigenerated: {
        std::vector<Monomial> basis;
        for (const Face& f : all_subsets_of_size(bounds.n, bounds.d))
            basis.push_back(face_monomial(bounds.n, f));
        auto gens = pick_distinct(std::move(basis), bounds.num_gens, rng);
        return MonomialIdeal(bounds.n, std::move(gens));
    }
    case IdealKind::stable: {
        auto seeds = pick_distinct(monomials_of_degree(bounds.n, bounds.d),
                                   std::max(1, bounds.num_gens / 2), rng);
        return exchange_closure(bounds.n, std::move(seeds));
    }
    case IdealKind::linear_quotients_built:
        return random_linear_quotients_built(bounds, rng);
    }
    throw domain_error("unknown ideal kind");
}

SimplicialComplex random_complex(int n, int max_facets, uint64_t seed) {
    Rng rng(seed);
    std::vector<Face> faces;
    int count = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(
                        std::max(1, max_facets))));
    for (int k = 0; k < count; ++k) {
        Face f;
        for (int v = 1; v <= n; ++v)
            if (rng.coin()) f.push_back(v);
        if (f.empty()) f.push_back(1 + static_cast<int>(rng.below(
                                       static_cast<uint64_t>(n))));
        faces.push_back(std::move(f));
    }
    return SimplicialComplex(n, std::move(faces));
}

Clutter random_clutter(int n, int d, uint64_t seed) {
    Rng rng(seed);
    std::vector<Face> all = all_subsets_of_size(n, d);
    std::vector<Face> chosen;
    for (const Face& f : all)
        if (rng.coin()) chosen.push_back(f);
    return Clutter(n, d, std::move(chosen));
}

} // namespace monolin
