#ifndef MONOLIN_EXPLORE_HPP
#define MONOLIN_EXPLORE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "monolin/random_gen.hpp"

namespace monolin {

/// Everything the explorer and the CLI subcommands need to reproduce a run:
/// the seed fully determines all sampling.
struct RunConfig {
    std::vector<long> fields = {2, 32003};
    uint64_t seed = 1;
    int samples = 500;
    int max_n = 5;
    int max_d = 4;
    int max_sample_gens = 8;
    long max_gens = 20;          // Betti engine generator cap
    double timeout_seconds = 10; // soft per-sample budget, logged when blown
    int workers = 0;             // 0 = hardware concurrency
    bool json_output = false;
};

struct ExplorerFinding {
    std::string class_tag;
    std::string kind;
    int sample_index = 0;
    nlohmann::json ideal;
    nlohmann::json evidence;
};

struct ExploreResult {
    std::vector<ExplorerFinding> findings;
    long samples_evaluated = 0;
    long skipped = 0;  // samples over a resource cap, logged not fatal
    long slow = 0;     // samples over the soft time budget
    long cor_p_probes = 0;
    long cor_p_agreements = 0;
};

/// Samples ideals across all kinds, asserts the implication chain
/// linear quotients => linear resolution at every field => quasi-linear on
/// every sample (a violation is an internal error, never a finding), and
/// records strict separations as findings.  Degree-3 samples additionally
/// probe whether quasi-linearity survives polarization; outcomes are logged
/// without asserting either way.
///
/// Samples are dispatched to a worker pool; the per-sample generator is
/// derived from (seed, kind, sample index) and results are merged in sample
/// order, so output is reproducible regardless of scheduling.
ExploreResult explore(const RunConfig& config);

} // namespace monolin

#endif
