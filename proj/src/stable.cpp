#include "monolin/stable.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace monolin {

StableReport is_stable(const MonomialIdeal& ideal) {
    for (const Monomial& u : ideal.gens()) {
        int m = u.max_var();
        for (int i = 1; i < m; ++i) {
            Monomial moved = u.times_var(i).div_var(m);
            if (!ideal.contains(moved))
                return StableReport{false, std::make_pair(u, i)};
        }
    }
    return StableReport{true, std::nullopt};
}

Monomial find_special_monomial(const MonomialIdeal& ideal) {
    auto d = ideal.equigenerated_degree();
    if (ideal.is_zero() || !d)
        throw domain_error("find_special_monomial: need a nonzero "
                           "equigenerated ideal");
    if (!is_stable(ideal).stable)
        throw domain_error("find_special_monomial: ideal is not stable");
    int n = ideal.ambient();
    MonomialIdeal power = MonomialIdeal::power_of_maximal(n, *d);
    if (ideal == power)
        throw domain_error("find_special_monomial: ideal already equals m^d");

    for (const Monomial& v : monomials_of_degree(n, *d - 1)) {
        bool initial_segment = true;
        for (int i = 1; i < v.max_var() && initial_segment; ++i)
            if (!ideal.contains(v.times_var(i))) initial_segment = false;
        if (!initial_segment) continue;
        bool grows = false;
        for (int i = 1; i <= n && !grows; ++i)
            if (!ideal.contains(v.times_var(i))) grows = true;
        if (grows) return v;
    }
    throw std::logic_error("find_special_monomial: no special monomial found "
                           "for a stable ideal strictly below m^d");
}

std::vector<StableChainRecord>
stable_chain_to_power(const MonomialIdeal& ideal) {
    auto d = ideal.equigenerated_degree();
    if (ideal.is_zero() || !d)
        throw domain_error("stable_chain_to_power: need a nonzero "
                           "equigenerated ideal");
    if (!is_stable(ideal).stable)
        throw domain_error("stable_chain_to_power: ideal is not stable");

    int n = ideal.ambient();
    MonomialIdeal power = MonomialIdeal::power_of_maximal(n, *d);
    MonomialIdeal cur = ideal;
    std::vector<StableChainRecord> records;
    while (cur != power) {
        Monomial v = find_special_monomial(cur);
        auto rep = is_strongly_linear(v, cur);
        if (!rep.strongly_linear)
            throw std::logic_error("stable_chain_to_power: special monomial "
                                   "not strongly linear");
        // the colon of a special monomial is an initial segment (x_1..x_l)
        const auto& idx = rep.colon_support.indices();
        for (size_t k = 0; k < idx.size(); ++k)
            if (idx[k] != static_cast<int>(k) + 1)
                throw std::logic_error("stable_chain_to_power: colon is not "
                                       "an initial variable segment");
        std::vector<Monomial> extra;
        for (int i = 1; i <= n; ++i) extra.push_back(v.times_var(i));
        MonomialIdeal next = cur.plus(extra);
        if (!is_stable(next).stable)
            throw std::logic_error("stable_chain_to_power: extension lost "
                                   "stability");
        records.push_back(StableChainRecord{v, rep.colon_support, next});
        cur = std::move(next);
    }
    return records;
}

std::vector<ChainStep>
chain_steps_from_records(const std::vector<StableChainRecord>& records) {
    std::vector<ChainStep> steps;
    for (const StableChainRecord& r : records) {
        int n = r.after.ambient();
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
            if (!r.colon.contains(i)) rest.push_back(i);
        steps.push_back(ChainStep{r.special, VariableSet(n, std::move(rest))});
    }
    return steps;
}

MonomialIdeal exchange_closure(int n, std::vector<Monomial> seeds) {
    std::set<Monomial> closed(seeds.begin(), seeds.end());
    std::vector<Monomial> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const Monomial& u : frontier) {
            int m = u.max_var();
            for (int i = 1; i < m; ++i) {
                Monomial moved = u.times_var(i).div_var(m);
                if (closed.insert(moved).second) next.push_back(moved);
            }
        }
        frontier = std::move(next);
    }
    return MonomialIdeal(n,
                         std::vector<Monomial>(closed.begin(), closed.end()));
}

} // namespace monolin
