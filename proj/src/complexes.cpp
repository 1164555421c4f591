#include "monolin/complexes.hpp"

#include <algorithm>
#include <map>

namespace monolin {

namespace {

bool subset_of(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face normalize_face(int n, Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
        if (v < 1 || v > n)
            throw dimension_error("vertex out of range: " + std::to_string(v));
    return f;
}

} // namespace

std::vector<Face> all_subsets_of_size(int n, int d) {
    std::vector<Face> out;
    if (d < 0 || d > n) return out;
    Face cur(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int k = d - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == n - d + k + 1) --k;
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
        for (int j = k + 1; j < d; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j) - 1] + 1;
    }
    return out;
}

Monomial face_monomial(int n, const Face& f) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int v : f) {
        if (v < 1 || v > n)
            throw dimension_error("vertex out of range: " + std::to_string(v));
        e[static_cast<size_t>(v) - 1] = 1;
    }
    return Monomial(std::move(e));
}

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> faces) : n_(n) {
    for (Face& f : faces) f = normalize_face(n, std::move(f));
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (const Face& f : faces) {
        bool maximal = std::none_of(faces.begin(), faces.end(),
                                    [&](const Face& g) {
                                        return f != g && subset_of(f, g);
                                    });
        if (maximal) facets_.push_back(f);
    }
}

int SimplicialComplex::dimension() const {
    int dim = -2;
    for (const Face& f : facets_)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

bool SimplicialComplex::pure() const {
    for (const Face& f : facets_)
        if (static_cast<int>(f.size()) - 1 != dimension()) return false;
    return true;
}

bool SimplicialComplex::has_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

bool SimplicialComplex::has_face(const Face& f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& g) { return subset_of(f, g); });
}

SimplicialComplex SimplicialComplex::without_facet(const Face& f) const {
    if (!has_facet(f))
        throw domain_error("without_facet: not a facet");
    std::vector<Face> rest;
    for (const Face& g : facets_)
        if (g != f) rest.push_back(g);
    return SimplicialComplex(n_, std::move(rest));
}

MonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex) {
    int n = complex.ambient();
    std::vector<Monomial> gens;
    for (const Face& f : complex.facets()) {
        Face comp;
        for (int v = 1; v <= n; ++v)
            if (!std::binary_search(f.begin(), f.end(), v)) comp.push_back(v);
        gens.push_back(face_monomial(n, comp));
    }
    return MonomialIdeal(n, std::move(gens));
}

namespace {

// minimal non-faces by breadth-first subset enumeration
std::vector<Face> minimal_non_faces(const SimplicialComplex& complex,
                                    int max_vertices) {
    int n = complex.ambient();
    if (n > max_vertices)
        throw resource_error("minimal non-face enumeration over too many "
                             "vertices",
                             max_vertices);
    std::vector<Face> out;
    for (int size = 0; size <= n; ++size)
        for (const Face& f : all_subsets_of_size(n, size)) {
            if (complex.has_face(f)) continue;
            bool minimal = true;
            for (size_t drop = 0; drop < f.size() && minimal; ++drop) {
                Face sub;
                for (size_t k = 0; k < f.size(); ++k)
                    if (k != drop) sub.push_back(f[k]);
                if (!complex.has_face(sub)) minimal = false;
            }
            if (minimal) out.push_back(f);
        }
    return out;
}

} // namespace

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex,
                                    int max_vertices) {
    std::vector<Monomial> gens;
    for (const Face& f : minimal_non_faces(complex, max_vertices))
        gens.push_back(face_monomial(complex.ambient(), f));
    return MonomialIdeal(complex.ambient(), std::move(gens));
}

SimplicialComplex alexander_dual_complex(const SimplicialComplex& complex,
                                         int max_vertices) {
    int n = complex.ambient();
    std::vector<Face> facets;
    for (const Face& f : minimal_non_faces(complex, max_vertices)) {
        Face comp;
        for (int v = 1; v <= n; ++v)
            if (!std::binary_search(f.begin(), f.end(), v)) comp.push_back(v);
        facets.push_back(comp);
    }
    return SimplicialComplex(n, std::move(facets));
}

bool is_shelling_move(const SimplicialComplex& complex, const Face& f) {
    Face key = normalize_face(complex.ambient(), f);
    if (!complex.has_facet(key))
        throw domain_error("is_shelling_move: not a facet");
    if (complex.num_facets() < 2)
        throw domain_error("is_shelling_move: need at least two facets");

    // maximal intersections of f with the other facets
    std::vector<Face> inters;
    for (const Face& g : complex.facets()) {
        if (g == key) continue;
        Face meet;
        std::set_intersection(key.begin(), key.end(), g.begin(), g.end(),
                              std::back_inserter(meet));
        inters.push_back(std::move(meet));
    }
    SimplicialComplex boundary(complex.ambient(), std::move(inters));
    return boundary.pure() &&
           boundary.dimension() == static_cast<int>(key.size()) - 2;
}

ShellingSearchReport shelled_over_search(const SimplicialComplex& complex,
                                         const std::vector<Face>& base_facets) {
    std::vector<Face> base;
    for (const Face& f : base_facets) {
        Face key = normalize_face(complex.ambient(), f);
        if (!complex.has_facet(key))
            throw domain_error("shelled_over_search: base facet not a facet "
                               "of the complex");
        base.push_back(key);
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());

    std::vector<Face> missing;
    for (const Face& f : complex.facets())
        if (!std::binary_search(base.begin(), base.end(), f))
            missing.push_back(f);

    // DFS over which facets have been added; feasibility depends only on
    // that set, so failed sets are memoized
    std::set<std::vector<size_t>> failed;
    std::vector<size_t> added;
    std::vector<Face> current = base;
    std::vector<Face> moves;

    auto dfs = [&](auto&& self) -> bool {
        if (added.size() == missing.size()) return true;
        std::vector<size_t> state = added;
        std::sort(state.begin(), state.end());
        if (failed.count(state)) return false;
        for (size_t k = 0; k < missing.size(); ++k) {
            if (std::find(added.begin(), added.end(), k) != added.end())
                continue;
            std::vector<Face> trial = current;
            trial.push_back(missing[k]);
            SimplicialComplex next(complex.ambient(), trial);
            // the very first facet of an empty complex needs no condition
            bool ok = next.num_facets() == 1 ||
                      is_shelling_move(next, missing[k]);
            if (!ok) continue;
            added.push_back(k);
            current.push_back(missing[k]);
            moves.push_back(missing[k]);
            if (self(self)) return true;
            added.pop_back();
            current.pop_back();
            moves.pop_back();
        }
        failed.insert(std::move(state));
        return false;
    };
    bool ok = dfs(dfs);
    return ShellingSearchReport{ok, ok ? moves : std::vector<Face>{}};
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field,
                       const BettiOptions& options) {
    int n = complex.ambient();
    MonomialIdeal sr = stanley_reisner_ideal(complex);
    // pd(R/I) = pd(I) + 1; R/0 = R itself has projective dimension 0
    int pd_quotient = 0;
    if (!sr.is_zero())
        pd_quotient =
            betti_summary(sr, field, options).projective_dimension + 1;
    int depth = n - pd_quotient;
    return depth == complex.dimension() + 1;
}

Clutter::Clutter(int n, int d, std::vector<Face> circuits) : n_(n), d_(d) {
    for (Face& f : circuits) {
        f = normalize_face(n, std::move(f));
        if (static_cast<int>(f.size()) != d)
            throw domain_error("clutter circuit of wrong size");
    }
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()),
                   circuits.end());
    circuits_ = std::move(circuits);
}

bool Clutter::has_circuit(const Face& f) const {
    return std::binary_search(circuits_.begin(), circuits_.end(), f);
}

std::vector<int> closed_neighborhood(const Clutter& clutter, const Face& e) {
    Face key = normalize_face(clutter.ambient(), e);
    if (static_cast<int>(key.size()) != clutter.uniformity() - 1)
        throw domain_error("closed_neighborhood: expected a (d-1)-subset");
    std::vector<int> nb = key;
    for (int v = 1; v <= clutter.ambient(); ++v) {
        if (std::binary_search(key.begin(), key.end(), v)) continue;
        Face ext = key;
        ext.insert(std::lower_bound(ext.begin(), ext.end(), v), v);
        if (clutter.has_circuit(ext)) nb.push_back(v);
    }
    std::sort(nb.begin(), nb.end());
    return nb;
}

bool simp_detect(const Clutter& clutter, const Face& e) {
    std::vector<int> nb = closed_neighborhood(clutter, e);
    int d = clutter.uniformity();
    if (static_cast<int>(nb.size()) < d) return false;
    for (const Face& pick :
         all_subsets_of_size(static_cast<int>(nb.size()), d)) {
        Face circuit;
        for (int pos : pick) circuit.push_back(nb[static_cast<size_t>(pos) - 1]);
        if (!clutter.has_circuit(circuit)) return false;
    }
    return true;
}

std::vector<Face> simp_set(const Clutter& clutter) {
    std::vector<Face> out;
    for (const Face& e :
         all_subsets_of_size(clutter.ambient(), clutter.uniformity() - 1))
        if (simp_detect(clutter, e)) out.push_back(e);
    return out;
}

MonomialIdeal circuit_ideal(const Clutter& clutter) {
    std::vector<Monomial> gens;
    for (const Face& f : clutter.circuits())
        gens.push_back(face_monomial(clutter.ambient(), f));
    return MonomialIdeal(clutter.ambient(), std::move(gens));
}

Clutter complement_clutter(const Clutter& clutter) {
    std::vector<Face> rest;
    for (const Face& f :
         all_subsets_of_size(clutter.ambient(), clutter.uniformity()))
        if (!clutter.has_circuit(f)) rest.push_back(f);
    return Clutter(clutter.ambient(), clutter.uniformity(), std::move(rest));
}

ClutterDeltaReport corollary_last_delta(const Clutter& clutter, const Face& e,
                                        const std::vector<Face>& removed,
                                        const FieldSpec& field,
                                        const BettiOptions& options) {
    int n = clutter.ambient();
    Face key = normalize_face(n, e);
    if (!simp_detect(clutter, key))
        throw domain_error("corollary_last_delta: e is not a simplicial "
                           "maximal subcircuit");
    if (removed.empty())
        throw domain_error("corollary_last_delta: empty removal set");
    std::vector<Face> strictly_above;
    for (Face f : removed) {
        f = normalize_face(n, std::move(f));
        if (!clutter.has_circuit(f) || !subset_of(key, f) || f == key)
            throw domain_error("corollary_last_delta: removal set must be "
                               "circuits strictly containing e");
        strictly_above.push_back(f);
    }

    std::vector<Face> remaining;
    for (const Face& f : clutter.circuits())
        if (std::find(strictly_above.begin(), strictly_above.end(), f) ==
            strictly_above.end())
            remaining.push_back(f);
    Clutter smaller(n, clutter.uniformity(), std::move(remaining));

    ClutterDeltaReport report;
    report.ideal_before = circuit_ideal(complement_clutter(clutter));
    report.ideal_after = circuit_ideal(complement_clutter(smaller));

    Monomial xe = face_monomial(n, key);
    std::vector<int> x_idx;
    for (const Face& f : strictly_above)
        for (int v : f)
            if (!std::binary_search(key.begin(), key.end(), v))
                x_idx.push_back(v);
    report.x_set = VariableSet(n, std::move(x_idx));
    auto colon_gen = is_generated_by_variables(colon(report.ideal_before, xe));
    report.y_set = colon_gen.variables;

    report.predicted =
        predicted_betti_delta(report.ideal_before, xe, report.x_set);
    report.measured = measured_betti_delta(report.ideal_before,
                                           report.ideal_after, field, options);
    return report;
}

} // namespace monolin
