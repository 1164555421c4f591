#include "monolin/ideal.hpp"

#include <algorithm>

namespace monolin {

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) {
    *this = minimal_generators(n, std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(int n) {
    return MonomialIdeal(n, {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::power_of_maximal(int n, int d) {
    return MonomialIdeal(n, monomials_of_degree(n, d));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& w) const {
    if (w.ambient() != n_)
        throw dimension_error("membership test across ambients");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(w); });
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::has_generator(const Monomial& u) const {
    return std::binary_search(gens_.begin(), gens_.end(), u);
}

std::optional<int> MonomialIdeal::equigenerated_degree() const {
    if (gens_.empty()) return std::nullopt;
    int d = gens_.front().degree();
    for (const Monomial& g : gens_)
        if (g.degree() != d) return std::nullopt;
    return d;
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal MonomialIdeal::without(const Monomial& u) const {
    if (!has_generator(u))
        throw domain_error("without: not a minimal generator: " + u.str());
    std::vector<Monomial> rest;
    rest.reserve(gens_.size() - 1);
    for (const Monomial& g : gens_)
        if (g != u) rest.push_back(g);
    // Removing one member of G(I) keeps the rest minimal and sorted.
    MonomialIdeal out(n_);
    out.gens_ = std::move(rest);
    return out;
}

MonomialIdeal MonomialIdeal::plus(const std::vector<Monomial>& extra) const {
    std::vector<Monomial> all(gens_);
    all.insert(all.end(), extra.begin(), extra.end());
    return minimal_generators(n_, std::move(all));
}

std::string MonomialIdeal::str() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (size_t k = 0; k < gens_.size(); ++k) {
        if (k) s += ", ";
        s += gens_[k].str();
    }
    return s + ")";
}

MonomialIdeal minimal_generators(int n, std::vector<Monomial> monomials) {
    for (const Monomial& m : monomials)
        if (m.ambient() != n)
            throw dimension_error("generator ambient differs from ideal ambient");
    // Sorting by total degree first makes the sweep one-directional: a
    // monomial can only be divided by one of smaller-or-equal degree.
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) {
                  int da = a.degree(), db = b.degree();
                  return da != db ? da < db : a < b;
              });
    monomials.erase(std::unique(monomials.begin(), monomials.end()),
                    monomials.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : monomials) {
        bool redundant = std::any_of(
            kept.begin(), kept.end(),
            [&](const Monomial& k) { return k.divides(m); });
        if (!redundant) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    MonomialIdeal out(n);
    out.gens_ = std::move(kept);
    return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
    if (v.ambient() != ideal.ambient())
        throw dimension_error("colon across ambients");
    std::vector<Monomial> quotients;
    quotients.reserve(ideal.gens().size());
    for (const Monomial& u : ideal.gens())
        quotients.push_back(colon_quotient(u, v));
    return minimal_generators(ideal.ambient(), std::move(quotients));
}

MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& J) {
    if (ideal.ambient() != J.ambient())
        throw dimension_error("colon across ambients");
    if (J.is_zero())
        throw domain_error("colon by the zero ideal is undefined");
    MonomialIdeal result = colon(ideal, J.gens().front());
    for (size_t k = 1; k < J.gens().size(); ++k)
        result = intersect(result, colon(ideal, J.gens()[k]));
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient())
        throw dimension_error("intersect across ambients");
    std::vector<Monomial> lcms;
    lcms.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens())
            lcms.push_back(lcm(u, v));
    return minimal_generators(a.ambient(), std::move(lcms));
}

VariablesGeneratedReport is_generated_by_variables(const MonomialIdeal& ideal) {
    std::vector<int> vars;
    for (const Monomial& g : ideal.gens()) {
        if (g.degree() != 1) {
            return VariablesGeneratedReport{false, g,
                                            VariableSet(ideal.ambient(), {})};
        }
        vars.push_back(g.max_var());
    }
    return VariablesGeneratedReport{
        true, std::nullopt, VariableSet(ideal.ambient(), std::move(vars))};
}

Polarization polarize(const MonomialIdeal& ideal) {
    int n = ideal.ambient();
    std::vector<int> max_exp(static_cast<size_t>(n), 0);
    for (const Monomial& g : ideal.gens())
        for (int i = 1; i <= n; ++i)
            max_exp[static_cast<size_t>(i) - 1] =
                std::max(max_exp[static_cast<size_t>(i) - 1], g.exponent(i));

    Polarization pol;
    std::vector<int> slot_base(static_cast<size_t>(n), 0);
    int total = 0;
    for (int i = 1; i <= n; ++i) {
        slot_base[static_cast<size_t>(i) - 1] = total;
        for (int c = 1; c <= max_exp[static_cast<size_t>(i) - 1]; ++c)
            pol.back_map.emplace_back(i, c);
        total += max_exp[static_cast<size_t>(i) - 1];
    }

    std::vector<Monomial> gens;
    for (const Monomial& g : ideal.gens()) {
        std::vector<int> e(static_cast<size_t>(total), 0);
        for (int i = 1; i <= n; ++i)
            for (int c = 0; c < g.exponent(i); ++c)
                e[static_cast<size_t>(slot_base[static_cast<size_t>(i) - 1] +
                                      c)] = 1;
        gens.emplace_back(std::move(e));
    }
    pol.ideal = minimal_generators(total, std::move(gens));
    return pol;
}

Monomial Polarization::specialize(const Monomial& w, int original_n) const {
    if (w.ambient() != static_cast<int>(back_map.size()))
        throw dimension_error("specialize: wrong ambient for this polarization");
    std::vector<int> e(static_cast<size_t>(original_n), 0);
    for (int slot = 1; slot <= w.ambient(); ++slot) {
        int orig = back_map[static_cast<size_t>(slot) - 1].first;
        e[static_cast<size_t>(orig) - 1] += w.exponent(slot);
    }
    return Monomial(std::move(e));
}

std::vector<Monomial> members_up_to_degree(const MonomialIdeal& ideal,
                                           int max_degree) {
    std::vector<Monomial> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const Monomial& w : monomials_of_degree(ideal.ambient(), d))
            if (ideal.contains(w)) out.push_back(w);
    return out;
}

} // namespace monolin
