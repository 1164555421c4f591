#ifndef MONOLIN_LINEARITY_HPP
#define MONOLIN_LINEARITY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monolin/betti.hpp"
#include "monolin/ideal.hpp"

namespace monolin {

/// Quasi-linearity: the colon (G(I) minus u) : u is generated by variables
/// for every minimal generator u.  Witnesses pair each failing generator
/// with one offending colon generator of degree >= 2.
struct QuasiLinearReport {
    bool quasi_linear = true;
    std::vector<std::pair<Monomial, Monomial>> witnesses;
};

QuasiLinearReport is_quasi_linear(const MonomialIdeal& ideal);

/// Strong linearity of a degree-(d-1) monomial u over an ideal generated in
/// degree d: I : u is generated by variables.  The three equivalent
/// characterizations are evaluated independently and must agree.
struct StrongLinearityReport {
    bool strongly_linear = false;
    /// B with I : u = (x_i : i in B) when strongly linear.
    VariableSet colon_support;
    /// verdicts of the colon-shape, support-intersection and lcm-membership
    /// conditions, in that order
    bool condition_colon = false;
    bool condition_support = false;
    bool condition_lcm = false;
};

StrongLinearityReport is_strongly_linear(const Monomial& u,
                                         const MonomialIdeal& ideal);

/// I + u*(x_i : i in A), minimalized.  u must be strongly linear over I.
MonomialIdeal one_step_extension(const MonomialIdeal& ideal, const Monomial& u,
                                 const VariableSet& A);

struct LinearOverReport {
    bool linear_over = false;
    /// an ordering u_1..u_r of G(I) minus G(J) with every prefix colon
    /// generated by variables, when one exists
    std::vector<Monomial> ordering;
};

/// Subset dynamic programming over the generators to append; candidates are
/// tried in lexicographic order so the witness is deterministic.
LinearOverReport is_linear_over(const MonomialIdeal& ideal,
                                const MonomialIdeal& base, long max_gens = 20);

LinearOverReport has_linear_quotients(const MonomialIdeal& ideal,
                                      long max_gens = 20);

/// Checks one explicit ordering: every (previous generators) : next colon
/// must be generated by variables.
bool is_linear_quotients_order(const MonomialIdeal& base,
                               const std::vector<Monomial>& ordering);

/// The generators of m^d sorted descending in exponent-lex order; a linear
/// quotients order for m^d.
std::vector<Monomial> lex_order_of_power(int n, int d);

/// Critical linear: has a linear resolution but loses it on deleting any
/// single generator; the zero ideal qualifies by convention.  Evaluates both
/// the definition and the regularity form reg(I minus u) = d+1 and insists
/// they agree.
bool is_critical_linear(const MonomialIdeal& ideal, const FieldSpec& field,
                        const BettiOptions& options = {});

struct CriticalBase {
    MonomialIdeal base;
    /// deletion order reversed, a valid linear-over witness for the input
    std::vector<Monomial> ordering;
};

/// Peels lexicographically-first deletable generators while the remainder
/// keeps a linear resolution; the reached base is critical linear.
CriticalBase find_critical_base(const MonomialIdeal& ideal,
                                const FieldSpec& field,
                                const BettiOptions& options = {});

/// Predicted change of Betti numbers under a one-step strongly linear
/// extension: +1 at (s, mdeg(u) + e_T) for every (s+1)-subset T of A union B
/// not contained in B; graded deltas are the binomial difference.
struct BettiDelta {
    std::map<std::pair<int, MultiDegree>, long> entries;
    std::map<int, long> graded;
};

BettiDelta predicted_betti_delta(const MonomialIdeal& ideal, const Monomial& u,
                                 const VariableSet& A);

/// Measured difference multigraded_betti(extension) - multigraded_betti(I),
/// both in the ideal convention.
BettiDelta measured_betti_delta(const MonomialIdeal& ideal,
                                const MonomialIdeal& extension,
                                const FieldSpec& field,
                                const BettiOptions& options = {});

/// One step of a strongly linear chain: extend by u*(x_i : i in A).
struct ChainStep {
    Monomial u;
    VariableSet A;
};

struct ChainVerification {
    bool verified = false;
    /// per-step strong linearity verdicts; stops at the first failure
    std::vector<bool> step_ok;
    std::optional<int> first_failure;
    MonomialIdeal final_ideal;
};

/// Replays a chain from the base, checking strong linearity at each step.
ChainVerification verify_strongly_linear_chain(const MonomialIdeal& base,
                                               const std::vector<ChainStep>& steps);

/// Best-effort breadth-first search for a strongly linear chain from base
/// to target.  Candidate monomials are the degree-(d-1) divisors of the
/// target's lcm lattice elements, tried in lexicographic order.
std::optional<std::vector<ChainStep>>
strongly_linear_over_search(const MonomialIdeal& target,
                            const MonomialIdeal& base, int depth_limit = 12);

} // namespace monolin

#endif
