#include "monolin/linearity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

namespace monolin {

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool linear_or_zero(const MonomialIdeal& ideal, const FieldSpec& field,
                    const BettiOptions& options) {
    return has_linear_resolution(ideal, field, options);
}

} // namespace

QuasiLinearReport is_quasi_linear(const MonomialIdeal& ideal) {
    QuasiLinearReport report;
    for (const Monomial& u : ideal.gens()) {
        MonomialIdeal c = colon(ideal.without(u), u);
        auto gen = is_generated_by_variables(c);
        if (!gen.generated_by_variables) {
            report.quasi_linear = false;
            report.witnesses.emplace_back(u, *gen.witness);
        }
    }
    return report;
}

StrongLinearityReport is_strongly_linear(const Monomial& u,
                                         const MonomialIdeal& ideal) {
    if (u.ambient() != ideal.ambient())
        throw dimension_error("is_strongly_linear across ambients");
    int n = ideal.ambient();
    if (!ideal.is_zero()) {
        auto d = ideal.equigenerated_degree();
        if (!d)
            throw domain_error(
                "is_strongly_linear: ideal is not generated in a single degree");
        if (u.degree() != *d - 1)
            throw domain_error("is_strongly_linear: deg(u) = " +
                               std::to_string(u.degree()) + ", expected " +
                               std::to_string(*d - 1));
    }

    // condition (1): I : u is generated by variables
    MonomialIdeal c = colon(ideal, u);
    auto gen = is_generated_by_variables(c);
    bool cond_colon = gen.generated_by_variables;

    // A = { i : u x_i is a minimal generator }, the maximal admissible set
    // for conditions (2) and (3)
    std::vector<int> a_idx;
    for (int i = 1; i <= n; ++i)
        if (ideal.has_generator(u.times_var(i))) a_idx.push_back(i);
    VariableSet a_max(n, a_idx);

    // condition (2): supp([v,u]/u) meets A for every generator v
    bool cond_support = true;
    for (const Monomial& v : ideal.gens()) {
        bool hit = false;
        for (int i : colon_quotient(v, u).support())
            if (a_max.contains(i)) {
                hit = true;
                break;
            }
        if (!hit) {
            cond_support = false;
            break;
        }
    }

    // condition (3): [u,v] lies in u(x_i : i in A) for every generator v,
    // tested literally through monomial divisibility
    bool cond_lcm = true;
    for (const Monomial& v : ideal.gens()) {
        Monomial l = lcm(u, v);
        bool hit = false;
        for (int i : a_max.indices())
            if (u.times_var(i).divides(l)) {
                hit = true;
                break;
            }
        if (!hit) {
            cond_lcm = false;
            break;
        }
    }

    if (cond_colon != cond_support || cond_support != cond_lcm)
        throw std::logic_error(
            "is_strongly_linear: the three equivalent conditions disagree on " +
            u.str() + " over " + ideal.str());

    StrongLinearityReport report;
    report.strongly_linear = cond_colon;
    report.colon_support = cond_colon ? gen.variables : VariableSet(n, {});
    report.condition_colon = cond_colon;
    report.condition_support = cond_support;
    report.condition_lcm = cond_lcm;
    return report;
}

MonomialIdeal one_step_extension(const MonomialIdeal& ideal, const Monomial& u,
                                 const VariableSet& A) {
    auto rep = is_strongly_linear(u, ideal);
    if (!rep.strongly_linear) {
        auto gen = is_generated_by_variables(colon(ideal, u));
        throw domain_error("one_step_extension: " + u.str() +
                           " is not strongly linear over " + ideal.str() +
                           "; offending colon generator " +
                           (gen.witness ? gen.witness->str() : "?"));
    }
    std::vector<Monomial> extra;
    for (int i : A.indices()) extra.push_back(u.times_var(i));
    return ideal.plus(extra);
}

namespace {

// Transition oracle for the linear-quotients subset DP.  Appending
// candidate c to the prefix (base gens + added set S) is allowed iff the
// colon by c is generated by variables, which reduces to: every colon
// quotient of degree >= 2 must be divisible by some variable that occurs as
// a degree-1 quotient in the prefix.
struct QuotientDP {
    int m = 0;
    // degree-1 quotient variables contributed by the base, per candidate
    std::vector<uint64_t> base_contrib;
    // support masks of base quotients of degree >= 2, per candidate
    std::vector<std::vector<uint64_t>> base_needs;
    // contrib[c][k]: variable bit if quotient of added k against c has
    // degree 1, else 0;  needs[c][k]: support mask if degree >= 2, else 0
    std::vector<std::vector<uint64_t>> contrib;
    std::vector<std::vector<uint64_t>> needs;

    bool valid(uint32_t added_set, int c) const {
        uint64_t have = base_contrib[static_cast<size_t>(c)];
        for (uint32_t rest = added_set; rest; rest &= rest - 1)
            have |= contrib[static_cast<size_t>(c)]
                           [static_cast<size_t>(std::countr_zero(rest))];
        for (uint64_t need : base_needs[static_cast<size_t>(c)])
            if (!(need & have)) return false;
        for (uint32_t rest = added_set; rest; rest &= rest - 1) {
            uint64_t need = needs[static_cast<size_t>(c)]
                                 [static_cast<size_t>(std::countr_zero(rest))];
            if (need && !(need & have)) return false;
        }
        return true;
    }
};

uint64_t support_mask(const Monomial& m) {
    uint64_t mask = 0;
    for (int i : m.support()) mask |= uint64_t(1) << (i - 1);
    return mask;
}

QuotientDP build_dp(const MonomialIdeal& base,
                    const std::vector<Monomial>& added) {
    QuotientDP dp;
    dp.m = static_cast<int>(added.size());
    dp.base_contrib.assign(added.size(), 0);
    dp.base_needs.resize(added.size());
    dp.contrib.assign(added.size(), std::vector<uint64_t>(added.size(), 0));
    dp.needs.assign(added.size(), std::vector<uint64_t>(added.size(), 0));
    for (size_t c = 0; c < added.size(); ++c) {
        for (const Monomial& u : base.gens()) {
            Monomial q = colon_quotient(u, added[c]);
            if (q.degree() <= 1)
                dp.base_contrib[c] |= support_mask(q);
            else
                dp.base_needs[c].push_back(support_mask(q));
        }
        for (size_t k = 0; k < added.size(); ++k) {
            if (k == c) continue;
            Monomial q = colon_quotient(added[k], added[c]);
            if (q.degree() <= 1)
                dp.contrib[c][k] = support_mask(q);
            else
                dp.needs[c][k] = support_mask(q);
        }
    }
    return dp;
}

bool dp_search(const QuotientDP& dp, uint32_t state,
               std::vector<uint8_t>& dead, std::vector<int>& order) {
    if (static_cast<int>(order.size()) == dp.m) return true;
    if (dead[state]) return false;
    for (int c = 0; c < dp.m; ++c) {
        if (state >> c & 1) continue;
        if (!dp.valid(state, c)) continue;
        order.push_back(c);
        if (dp_search(dp, state | (uint32_t(1) << c), dead, order)) return true;
        order.pop_back();
    }
    dead[state] = 1;
    return false;
}

} // namespace

bool is_linear_quotients_order(const MonomialIdeal& base,
                               const std::vector<Monomial>& ordering) {
    MonomialIdeal cur = base;
    for (const Monomial& u : ordering) {
        if (!is_generated_by_variables(colon(cur, u)).generated_by_variables)
            return false;
        cur = cur.plus({u});
    }
    return true;
}

LinearOverReport is_linear_over(const MonomialIdeal& ideal,
                                const MonomialIdeal& base, long max_gens) {
    if (ideal.ambient() != base.ambient())
        throw dimension_error("is_linear_over across ambients");
    for (const Monomial& g : base.gens())
        if (!ideal.has_generator(g))
            throw domain_error("is_linear_over: base is not generated by a "
                               "subset of G(I)");

    std::vector<Monomial> added;
    for (const Monomial& g : ideal.gens())
        if (!base.has_generator(g)) added.push_back(g);
    std::sort(added.begin(), added.end());

    if (added.empty()) return LinearOverReport{true, {}};

    long m = static_cast<long>(added.size());
    if (m > max_gens)
        throw resource_error("is_linear_over: generator count " +
                                 std::to_string(m) + " exceeds cap",
                             max_gens);
    if (ideal.ambient() > 64)
        throw resource_error("is_linear_over: more than 64 variables", 64);

    // quick paths: ascending and descending lexicographic orders
    for (bool descending : {false, true}) {
        std::vector<Monomial> try_order = added;
        if (descending) std::reverse(try_order.begin(), try_order.end());
        if (is_linear_quotients_order(base, try_order))
            return LinearOverReport{true, std::move(try_order)};
    }

    QuotientDP dp = build_dp(base, added);
    std::vector<uint8_t> dead(size_t(1) << m, 0);
    std::vector<int> order;
    if (!dp_search(dp, 0, dead, order)) return LinearOverReport{false, {}};
    LinearOverReport report{true, {}};
    for (int c : order) report.ordering.push_back(added[static_cast<size_t>(c)]);
    return report;
}

LinearOverReport has_linear_quotients(const MonomialIdeal& ideal,
                                      long max_gens) {
    return is_linear_over(ideal, MonomialIdeal::zero(ideal.ambient()),
                          max_gens);
}

std::vector<Monomial> lex_order_of_power(int n, int d) {
    std::vector<Monomial> order = monomials_of_degree(n, d);
    std::reverse(order.begin(), order.end());
    return order;
}

bool is_critical_linear(const MonomialIdeal& ideal, const FieldSpec& field,
                        const BettiOptions& options) {
    if (ideal.is_zero()) return true;
    BettiSummary s = betti_summary(ideal, field, options);
    if (!s.linear_resolution) return false;
    int d = *s.equigenerated_degree;
    for (const Monomial& u : ideal.gens()) {
        MonomialIdeal rest = ideal.without(u);
        if (rest.is_zero()) return false; // principal ideals peel to zero
        BettiSummary sr = betti_summary(rest, field, options);
        bool still_linear = sr.linear_resolution;
        bool reg_form = sr.regularity == d + 1;
        if (still_linear == reg_form)
            throw std::logic_error("is_critical_linear: definition and "
                                   "regularity forms disagree on " +
                                   rest.str());
        if (still_linear) return false;
    }
    return true;
}

CriticalBase find_critical_base(const MonomialIdeal& ideal,
                                const FieldSpec& field,
                                const BettiOptions& options) {
    if (!ideal.is_zero()) {
        if (!ideal.equigenerated_degree())
            throw domain_error("find_critical_base: not equigenerated");
        if (!betti_summary(ideal, field, options).linear_resolution)
            throw domain_error("find_critical_base: no linear resolution");
    }
    MonomialIdeal cur = ideal;
    std::vector<Monomial> peeled;
    bool progressed = true;
    while (progressed && !cur.is_zero()) {
        progressed = false;
        for (const Monomial& u : cur.gens()) {
            MonomialIdeal rest = cur.without(u);
            if (linear_or_zero(rest, field, options)) {
                peeled.push_back(u);
                cur = rest;
                progressed = true;
                break;
            }
        }
    }
    std::reverse(peeled.begin(), peeled.end());
    return CriticalBase{cur, std::move(peeled)};
}

BettiDelta predicted_betti_delta(const MonomialIdeal& ideal, const Monomial& u,
                                 const VariableSet& A) {
    auto rep = is_strongly_linear(u, ideal);
    if (!rep.strongly_linear)
        throw domain_error("predicted_betti_delta: " + u.str() +
                           " is not strongly linear over " + ideal.str());
    VariableSet ab = set_union(A, rep.colon_support);
    long r1 = ab.size();
    long r2 = rep.colon_support.size();

    BettiDelta delta;
    const auto& idx = ab.indices();
    for (uint32_t t = 1; t < (uint32_t(1) << idx.size()); ++t) {
        bool inside_b = true;
        std::vector<int> exps = u.exponents();
        int size = 0;
        for (size_t k = 0; k < idx.size(); ++k)
            if (t >> k & 1) {
                ++size;
                if (!rep.colon_support.contains(idx[k])) inside_b = false;
                ++exps[static_cast<size_t>(idx[k]) - 1];
            }
        if (inside_b) continue; // T inside B carries no new homology
        delta.entries[{size - 1, Monomial(std::move(exps))}] += 1;
    }
    for (int s = 0;; ++s) {
        long g = binomial(r1, s + 1) - binomial(r2, s + 1);
        if (g == 0 && s + 1 > r1) break;
        if (g != 0) delta.graded[s] = g;
    }

    // the multigraded entries must sum to the binomial difference
    std::map<int, long> tally;
    for (const auto& [key, v] : delta.entries) tally[key.first] += v;
    if (tally != delta.graded)
        throw std::logic_error("predicted_betti_delta: graded tally mismatch");
    return delta;
}

BettiDelta measured_betti_delta(const MonomialIdeal& ideal,
                                const MonomialIdeal& extension,
                                const FieldSpec& field,
                                const BettiOptions& options) {
    BettiTable before =
        multigraded_betti(ideal, field, Convention::ideal, options);
    BettiTable after =
        multigraded_betti(extension, field, Convention::ideal, options);
    BettiDelta delta;
    delta.entries = after.diff(before);
    auto d = extension.equigenerated_degree();
    for (const auto& [key, v] : delta.entries)
        if (d && key.second.degree() == *d + key.first)
            delta.graded[key.first] += v;
    std::erase_if(delta.graded, [](const auto& kv) { return kv.second == 0; });
    return delta;
}

ChainVerification verify_strongly_linear_chain(
    const MonomialIdeal& base, const std::vector<ChainStep>& steps) {
    ChainVerification v{true, {}, std::nullopt, base};
    MonomialIdeal cur = base;
    for (size_t k = 0; k < steps.size(); ++k) {
        auto rep = is_strongly_linear(steps[k].u, cur);
        v.step_ok.push_back(rep.strongly_linear);
        if (!rep.strongly_linear) {
            v.verified = false;
            v.first_failure = static_cast<int>(k);
            break;
        }
        cur = one_step_extension(cur, steps[k].u, steps[k].A);
    }
    v.final_ideal = cur;
    return v;
}

std::optional<std::vector<ChainStep>>
strongly_linear_over_search(const MonomialIdeal& target,
                            const MonomialIdeal& base, int depth_limit) {
    if (target.ambient() != base.ambient())
        throw dimension_error("strongly_linear_over_search across ambients");
    for (const Monomial& g : base.gens())
        if (!target.contains(g))
            throw domain_error("strongly_linear_over_search: base not inside "
                               "the target");
    auto d = target.equigenerated_degree();
    if (!d) throw domain_error("strongly_linear_over_search: target not "
                               "equigenerated");
    if (base == target) return std::vector<ChainStep>{};

    // candidate pool: degree d-1 divisors of lcm-lattice elements
    std::set<Monomial> pool;
    for (const MultiDegree& a : lcm_lattice_closure(target))
        for (const Monomial& w : monomials_of_degree(target.ambient(), *d - 1))
            if (w.divides(a)) pool.insert(w);

    int n = target.ambient();
    std::deque<std::pair<MonomialIdeal, std::vector<ChainStep>>> queue;
    std::set<MonomialIdeal> visited{base};
    queue.emplace_back(base, std::vector<ChainStep>{});
    while (!queue.empty()) {
        auto [cur, steps] = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(steps.size()) >= depth_limit) continue;
        for (const Monomial& u : pool) {
            auto rep = is_strongly_linear(u, cur);
            if (!rep.strongly_linear) continue;
            std::vector<int> a_idx;
            for (int i = 1; i <= n; ++i)
                if (target.contains(u.times_var(i))) a_idx.push_back(i);
            if (a_idx.empty()) continue;
            VariableSet A(n, a_idx);
            MonomialIdeal next = one_step_extension(cur, u, A);
            if (next == cur || !visited.insert(next).second) continue;
            std::vector<ChainStep> next_steps = steps;
            next_steps.push_back(ChainStep{u, A});
            if (next == target) return next_steps;
            queue.emplace_back(std::move(next), std::move(next_steps));
        }
    }
    return std::nullopt;
}

} // namespace monolin
