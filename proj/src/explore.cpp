#include "monolin/explore.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "monolin/betti.hpp"
#include "monolin/io.hpp"
#include "monolin/linearity.hpp"

namespace monolin {

namespace {

struct SampleOutcome {
    std::vector<ExplorerFinding> findings;
    bool evaluated = false;
    bool skipped = false;
    bool slow = false;
    bool cor_p_probe = false;
    bool cor_p_agreement = false;
    std::string violation; // nonempty = hierarchy broken, fatal
};

SampleOutcome evaluate_sample(const RunConfig& config, IdealKind kind,
                              int index) {
    SampleOutcome out;
    uint64_t label = (static_cast<uint64_t>(kind) << 32) ^
                     static_cast<uint64_t>(index);
    uint64_t seed = Rng::derive(config.seed, label);
    Rng rng(seed);

    IdealBounds bounds;
    bounds.n = 2 + static_cast<int>(rng.below(
                       static_cast<uint64_t>(config.max_n - 1)));
    bounds.d = 2 + static_cast<int>(rng.below(
                       static_cast<uint64_t>(config.max_d - 1)));
    if (kind == IdealKind::squarefree_equigenerated)
        bounds.d = std::min(bounds.d, bounds.n);
    bounds.num_gens = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(
                              config.max_sample_gens)));

    MonomialIdeal ideal = random_ideal(kind, bounds, rng.next());
    if (ideal.is_zero() || ideal.num_gens() > config.max_gens) {
        out.skipped = true;
        return out;
    }

    auto started = std::chrono::steady_clock::now();
    BettiOptions options;
    options.max_gens = config.max_gens;
    try {
        bool lq = has_linear_quotients(ideal, config.max_gens).linear_over;
        std::vector<std::pair<long, bool>> linear_at;
        std::vector<BettiTable> tables;
        for (long p : config.fields) {
            tables.push_back(multigraded_betti(ideal, FieldSpec(p),
                                               Convention::ideal, options));
            linear_at.emplace_back(
                p, betti_summary(ideal, FieldSpec(p), options)
                       .linear_resolution);
        }
        bool linear_everywhere = true, linear_somewhere = false;
        for (const auto& [p, lin] : linear_at) {
            linear_everywhere = linear_everywhere && lin;
            linear_somewhere = linear_somewhere || lin;
        }
        bool tables_agree = true;
        for (size_t k = 1; k < tables.size(); ++k)
            if (tables[k].entries != tables[0].entries) tables_agree = false;
        bool ql = is_quasi_linear(ideal).quasi_linear;

        if (lq && !linear_everywhere)
            out.violation = "linear quotients without a linear resolution: " +
                            ideal.str();
        if (linear_somewhere && !ql)
            out.violation = "linear resolution without quasi-linearity: " +
                            ideal.str();
        out.evaluated = true;

        json evidence;
        evidence["linear_quotients"] = lq;
        for (const auto& [p, lin] : linear_at)
            evidence["linear_at_" + std::to_string(p)] = lin;
        evidence["quasi_linear"] = ql;

        auto finding = [&](const std::string& tag) {
            out.findings.push_back(ExplorerFinding{
                tag, kind_name(kind), index, ideal_to_json(ideal), evidence});
        };
        if (ql && !linear_somewhere)
            finding("quasi-linear but no linear resolution");
        if (linear_somewhere && !linear_everywhere)
            finding("char-dependent linearity");
        if (!tables_agree && linear_somewhere == linear_everywhere) {
            evidence["betti_tables_differ_across_fields"] = true;
            finding("char-dependent Betti table");
        }
        if (linear_everywhere && !lq)
            finding("linear resolution without linear quotients");

        // empirical probe of the open polarization question in degree 3
        if (ideal.equigenerated_degree() == 3) {
            out.cor_p_probe = true;
            bool ql_polarized =
                is_quasi_linear(polarize(ideal).ideal).quasi_linear;
            out.cor_p_agreement = (ql == ql_polarized);
            if (!out.cor_p_agreement) {
                evidence["polarization_quasi_linear"] = ql_polarized;
                finding("degree-3 polarization/quasi-linearity disagreement");
            }
        }
    } catch (const resource_error&) {
        out.skipped = true;
        return out;
    }

    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    out.slow = elapsed > config.timeout_seconds;
    return out;
}

} // namespace

ExploreResult explore(const RunConfig& config) {
    const IdealKind kinds[] = {
        IdealKind::equigenerated,
        IdealKind::squarefree_equigenerated,
        IdealKind::stable,
        IdealKind::linear_quotients_built,
    };
    struct Task {
        IdealKind kind;
        int index;
    };
    std::vector<Task> tasks;
    for (IdealKind kind : kinds)
        for (int index = 0; index < config.samples; ++index)
            tasks.push_back(Task{kind, index});

    std::vector<SampleOutcome> outcomes(tasks.size());
    unsigned workers = config.workers > 0
                           ? static_cast<unsigned>(config.workers)
                           : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 16);

    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        while (true) {
            size_t k = cursor.fetch_add(1);
            if (k >= tasks.size()) break;
            outcomes[k] = evaluate_sample(config, tasks[k].kind,
                                          tasks[k].index);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    ExploreResult result;
    for (const SampleOutcome& out : outcomes) {
        if (!out.violation.empty())
            throw std::logic_error("hierarchy violated: " + out.violation);
        result.samples_evaluated += out.evaluated ? 1 : 0;
        result.skipped += out.skipped ? 1 : 0;
        result.slow += out.slow ? 1 : 0;
        result.cor_p_probes += out.cor_p_probe ? 1 : 0;
        result.cor_p_agreements += out.cor_p_agreement ? 1 : 0;
        for (const ExplorerFinding& f : out.findings)
            result.findings.push_back(f);
    }
    return result;
}

} // namespace monolin
