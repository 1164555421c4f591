#ifndef MONOLIN_RANDOM_GEN_HPP
#define MONOLIN_RANDOM_GEN_HPP

#include <cstdint>
#include <string>

#include "monolin/complexes.hpp"
#include "monolin/ideal.hpp"

namespace monolin {

/// Deterministic splittable generator: the same seed always reproduces the
/// same stream, independent of platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next();
    /// uniform in [0, bound)
    uint64_t below(uint64_t bound);
    bool coin() { return next() & 1; }

    /// child stream derived from (parent seed, label) without disturbing
    /// the parent
    static uint64_t derive(uint64_t seed, uint64_t label);

private:
    uint64_t state_;
};

enum class IdealKind {
    equigenerated,
    squarefree_equigenerated,
    stable,
    linear_quotients_built,
};

std::string kind_name(IdealKind kind);
IdealKind kind_from_name(const std::string& name);

struct IdealBounds {
    int n = 4;
    int d = 3;
    int num_gens = 5;
};

/// Deterministic under the seed.  The stable kind closes random seeds under
/// the exchange moves; the linear-quotients kind grows the ideal one
/// variable-colon step at a time, so the property holds by construction.
MonomialIdeal random_ideal(IdealKind kind, const IdealBounds& bounds,
                           uint64_t seed);

SimplicialComplex random_complex(int n, int max_facets, uint64_t seed);
Clutter random_clutter(int n, int d, uint64_t seed);

} // namespace monolin

#endif
