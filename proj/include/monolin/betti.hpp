#ifndef MONOLIN_BETTI_HPP
#define MONOLIN_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monolin/gf.hpp"
#include "monolin/ideal.hpp"

namespace monolin {

/// Multidegrees are exponent tuples, i.e. monomials x^a.
using MultiDegree = Monomial;

enum class Convention {
    ideal,    // module is I
    quotient, // module is R/I
};

std::string convention_name(Convention c);

/// Multigraded Betti table; only nonzero entries are stored, keyed by
/// (homological index, multidegree).
struct BettiTable {
    int n = 0;
    FieldSpec field;
    Convention convention = Convention::ideal;
    std::map<std::pair<int, MultiDegree>, long> entries;

    long entry(int i, const MultiDegree& a) const;
    /// Sum over multidegrees of fixed total degree: (i, j) -> beta_{i,j}.
    std::map<std::pair<int, int>, long> graded() const;
    BettiTable to_convention(Convention target) const;
    /// Entrywise this - other; conventions and ambients must match.
    std::map<std::pair<int, MultiDegree>, long>
    diff(const BettiTable& other) const;
};

/// Resource guards for the engine.  max_gens is the public generator cap;
/// the others pick between the two exact backends.
struct BettiOptions {
    long max_gens = 20;
    long max_subsets = 1L << 20;  // Taylor subset-enumeration guard
    long max_strand = 900;        // Taylor strand width guard
    int max_support = 12;         // Koszul complex vertex guard
    long max_lattice = 200000;
};

enum class BettiBackend { automatic, taylor_strand, koszul_complex };

/// All lcms of nonempty generator subsets, deduplicated and sorted.
/// Enumerates subsets directly, so it carries the generator cap.
std::vector<MultiDegree> lcm_lattice(const MonomialIdeal& ideal,
                                     long max_gens = 20);

/// Same set computed by pairwise-join closure; no subset enumeration, used
/// internally for large generator counts.
std::vector<MultiDegree> lcm_lattice_closure(const MonomialIdeal& ideal,
                                             long max_lattice = 200000);

/// Exact multigraded Betti numbers over GF(p).
///
/// The reference backend computes, for each multidegree a, the homology of
/// the Taylor strand whose i-th term is spanned by the i-subsets S of G(I)
/// with lcm(S) = x^a, the differential dropping one element when the lcm is
/// preserved (dropping the k-th smallest contributes sign (-1)^(k-1)).
/// When generator counts make subset enumeration or strand widths
/// infeasible, the engine switches to the per-multidegree upper Koszul
/// complex K^a = { squarefree b : x^(a-b) in I }, whose reduced homology
/// gives the same numbers; both backends are exact and cross-checked in the
/// test suite.
BettiTable multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                             Convention convention = Convention::ideal,
                             const BettiOptions& options = {},
                             BettiBackend backend = BettiBackend::automatic);

struct BettiSummary {
    std::map<std::pair<int, int>, long> graded; // ideal convention
    int regularity = 0;
    int projective_dimension = 0;
    std::optional<int> equigenerated_degree;
    bool linear_resolution = false;
};

/// Graded table with regularity, projective dimension and the linear
/// resolution flag, all in the ideal convention.  The zero ideal is a
/// domain error (its regularity is not defined here).
BettiSummary betti_summary(const MonomialIdeal& ideal, const FieldSpec& field,
                           const BettiOptions& options = {});

/// Linear resolution with the convention that the zero ideal qualifies;
/// what generator-deletion predicates need.
bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field,
                           const BettiOptions& options = {});

/// Engine self-consistency on one ideal: the I/(R/I) shift identity and the
/// per-multidegree Euler characteristic identity (alternating Betti sums
/// against the Mobius count of the lcm lattice).  Returns a list of
/// violation descriptions; empty means consistent.
std::vector<std::string> engine_self_check(const MonomialIdeal& ideal,
                                           const FieldSpec& field,
                                           const BettiOptions& options = {});

/// Alternating subset count per multidegree via Mobius inversion over the
/// lcm lattice; equals the Euler characteristic of each Taylor strand.
std::map<MultiDegree, long>
lattice_euler_counts(const MonomialIdeal& ideal, long max_lattice = 200000);

/// Macaulay-style graded Betti diagram (rows j-i, columns i).
std::string render_betti_diagram(
    const std::map<std::pair<int, int>, long>& graded);

} // namespace monolin

#endif
