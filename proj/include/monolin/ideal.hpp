#ifndef MONOLIN_IDEAL_HPP
#define MONOLIN_IDEAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monolin/monomial.hpp"

namespace monolin {

/// A monomial ideal held by its unique minimal generating set, sorted in
/// exponent-lex order.  The zero ideal has an empty generator list; the unit
/// ideal is generated by the unit monomial.  Construction minimalizes, so
/// the stored list is always G(I).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(int n) : n_(n) {}
    MonomialIdeal(int n, std::vector<Monomial> generators);

    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n);
    /// The maximal ideal power m^d = (x_1,...,x_n)^d.
    static MonomialIdeal power_of_maximal(int n, int d);

    int ambient() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_squarefree() const;

    bool contains(const Monomial& w) const;
    bool contains_ideal(const MonomialIdeal& other) const;
    bool has_generator(const Monomial& u) const;

    /// Common generator degree when equigenerated (zero ideal: nullopt).
    std::optional<int> equigenerated_degree() const;
    int max_gen_degree() const;

    /// I with the generator u removed (u must be a minimal generator).
    MonomialIdeal without(const Monomial& u) const;
    /// Minimal generators of I + (extra...).
    MonomialIdeal plus(const std::vector<Monomial>& extra) const;

    std::string str() const;

    auto operator<=>(const MonomialIdeal&) const = default;

private:
    friend MonomialIdeal minimal_generators(int n,
                                            std::vector<Monomial> monomials);

    int n_ = 0;
    std::vector<Monomial> gens_;
};

/// Inclusion-minimal subset of the given monomials, sorted; the G(I)
/// normal form every constructor funnels through.
MonomialIdeal minimal_generators(int n, std::vector<Monomial> monomials);

/// I : v, computed as the minimalized set of [u,v]/v over u in G(I).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);

/// I : J as the intersection of I : v over v in G(J).  J must be nonzero.
MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& J);

/// I intersect J via pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// True iff every minimal generator has degree one (the zero ideal counts,
/// vacuously).  When false, carries the first offending generator.
struct VariablesGeneratedReport {
    bool generated_by_variables;
    std::optional<Monomial> witness;
    /// The variable indices when generated by variables.
    VariableSet variables;
};

VariablesGeneratedReport is_generated_by_variables(const MonomialIdeal& ideal);

/// Polarization: each x_i^e expands into e distinct copy variables.  The
/// back map records, per new variable, its (original index, copy index).
struct Polarization {
    MonomialIdeal ideal;
    std::vector<std::pair<int, int>> back_map; // new var slot -> (i, copy)
    /// Substitute copies back: collapses a squarefree monomial in the
    /// expanded ring to the original ring.
    Monomial specialize(const Monomial& w, int original_n) const;
};

Polarization polarize(const MonomialIdeal& ideal);

/// All monomials of degree <= max_degree that lie in the ideal; the
/// brute-force membership view used by property tests.
std::vector<Monomial> members_up_to_degree(const MonomialIdeal& ideal,
                                           int max_degree);

} // namespace monolin

#endif
