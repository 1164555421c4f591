#ifndef MONOLIN_STABLE_HPP
#define MONOLIN_STABLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "monolin/ideal.hpp"
#include "monolin/linearity.hpp"

namespace monolin {

/// Exchange condition: u x_i / x_{m(u)} lies in I for every generator u and
/// every i below the largest variable of u.  The witness is the first
/// failing (generator, variable index) pair in lexicographic scan order.
struct StableReport {
    bool stable = true;
    std::optional<std::pair<Monomial, int>> witness;
};

StableReport is_stable(const MonomialIdeal& ideal);

/// Smallest degree-(d-1) monomial v in lexicographic order with
/// (x_1,...,x_{m(v)-1}) contained in I : v and I + v*m strictly larger
/// than I.  Requires a stable, equigenerated ideal strictly between zero
/// and m^d.
Monomial find_special_monomial(const MonomialIdeal& ideal);

struct StableChainRecord {
    Monomial special;        // the monomial v driving the step
    VariableSet colon;       // I : v, an initial segment (x_1,...,x_l)
    MonomialIdeal after;     // I + v*m, minimalized
};

/// Iterates special monomials until the whole power m^d is reached.  Every
/// intermediate ideal is verified stable and every step verified strongly
/// linear; violations are internal errors, not user-facing failures.
std::vector<StableChainRecord> stable_chain_to_power(const MonomialIdeal& ideal);

/// Chain steps in the generic chain format: A = [n] minus the colon support
/// per step.
std::vector<ChainStep>
chain_steps_from_records(const std::vector<StableChainRecord>& records);

/// Closure of a monomial set under the exchange moves u -> u x_i / x_{m(u)};
/// produces a stable equigenerated ideal by construction.
MonomialIdeal exchange_closure(int n, std::vector<Monomial> seeds);

} // namespace monolin

#endif
