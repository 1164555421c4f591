#ifndef MONOLIN_COMPLEXES_HPP
#define MONOLIN_COMPLEXES_HPP

#include <optional>
#include <set>
#include <vector>

#include "monolin/betti.hpp"
#include "monolin/ideal.hpp"
#include "monolin/linearity.hpp"

namespace monolin {

using Face = std::vector<int>; // sorted vertex subset of [n]

/// Simplicial complex on [n] given by its facets (pairwise incomparable;
/// construction keeps only the maximal faces of whatever it is handed).
class SimplicialComplex {
public:
    SimplicialComplex(int n, std::vector<Face> faces);

    int ambient() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    int num_facets() const { return static_cast<int>(facets_.size()); }
    /// -1 for the empty-face complex; the void complex has no facets at all.
    int dimension() const;
    bool pure() const;
    bool has_facet(const Face& f) const;
    bool has_face(const Face& f) const;

    SimplicialComplex without_facet(const Face& f) const;

    auto operator<=>(const SimplicialComplex&) const = default;

private:
    int n_ = 0;
    std::vector<Face> facets_;
};

/// I_{dual} = (x_{complement of F} : F facet); the full simplex yields the
/// unit ideal and the void complex yields the zero ideal.
MonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex);

/// Stanley-Reisner ideal from the minimal non-faces (cap on n).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex,
                                    int max_vertices = 12);

/// Facets are the complements of the minimal non-faces.
SimplicialComplex alexander_dual_complex(const SimplicialComplex& complex,
                                         int max_vertices = 12);

/// Removing F and putting it back is a shelling move iff the intersection
/// of <F> with the rest is pure of dimension dim(F)-1.  F must be a facet
/// and the complex must have at least two.
bool is_shelling_move(const SimplicialComplex& complex, const Face& f);

struct ShellingSearchReport {
    bool shelled = false;
    std::vector<Face> moves; // facets in the order they are added
};

/// Backtracking over orders of the missing facets; the empty subcomplex
/// case decides shellability outright.
ShellingSearchReport shelled_over_search(const SimplicialComplex& complex,
                                         const std::vector<Face>& base_facets);

/// depth K[complex] = n - pd(R/I_complex) against dim(complex)+1.
bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field,
                       const BettiOptions& options = {});

/// d-uniform clutter: a set of d-subsets of [n].
class Clutter {
public:
    Clutter(int n, int d, std::vector<Face> circuits);

    int ambient() const { return n_; }
    int uniformity() const { return d_; }
    const std::vector<Face>& circuits() const { return circuits_; }
    bool has_circuit(const Face& f) const;

    auto operator<=>(const Clutter&) const = default;

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<Face> circuits_;
};

/// e together with every vertex extending it to a circuit; e must have d-1
/// elements.
std::vector<int> closed_neighborhood(const Clutter& clutter, const Face& e);

/// Simplicial maximal subcircuit test: the closed neighborhood has at least
/// d vertices and every d-subset of it is a circuit.
bool simp_detect(const Clutter& clutter, const Face& e);

/// All simplicial maximal subcircuits, in lexicographic order.
std::vector<Face> simp_set(const Clutter& clutter);

MonomialIdeal circuit_ideal(const Clutter& clutter);
Clutter complement_clutter(const Clutter& clutter);

struct ClutterDeltaReport {
    BettiDelta predicted;
    BettiDelta measured;
    MonomialIdeal ideal_before;  // I(complement of C)
    MonomialIdeal ideal_after;   // I(complement of C minus A)
    VariableSet x_set;           // X = { i : e + i in A }
    VariableSet y_set;           // Y = support of I : x_e
};

/// Predicted-versus-measured Betti change when the circuits A above a
/// simplicial maximal subcircuit e are removed from C.
ClutterDeltaReport corollary_last_delta(const Clutter& clutter, const Face& e,
                                        const std::vector<Face>& removed,
                                        const FieldSpec& field,
                                        const BettiOptions& options = {});

/// All d-subsets of [n] in lexicographic order.
std::vector<Face> all_subsets_of_size(int n, int d);

Monomial face_monomial(int n, const Face& f);

} // namespace monolin

#endif
