#include "monolin/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace monolin {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_) {
        if (e < 0)
            throw domain_error("monomial exponent must be nonnegative");
    }
}

Monomial Monomial::one(int n) {
    return Monomial(std::vector<int>(static_cast<size_t>(n), 0));
}

Monomial Monomial::variable(int n, int i) {
    if (i < 1 || i > n)
        throw dimension_error("variable index out of range");
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i) - 1] = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0);
}

bool Monomial::is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < ambient(); ++i)
        if (exp_[static_cast<size_t>(i)] != 0) s.push_back(i + 1);
    return s;
}

int Monomial::support_size() const {
    return static_cast<int>(
        std::count_if(exp_.begin(), exp_.end(), [](int e) { return e != 0; }));
}

int Monomial::max_var() const {
    for (int i = ambient(); i >= 1; --i)
        if (exp_[static_cast<size_t>(i) - 1] != 0) return i;
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_ambient(*this, other);
    for (size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_ambient(*this, other);
    std::vector<int> e(exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += other.exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    require_same_ambient(*this, other);
    std::vector<int> e(exp_);
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] -= other.exp_[i];
        if (e[i] < 0) throw domain_error("inexact monomial division");
    }
    return Monomial(std::move(e));
}

Monomial Monomial::times_var(int i) const {
    if (i < 1 || i > ambient())
        throw dimension_error("variable index out of range");
    std::vector<int> e(exp_);
    ++e[static_cast<size_t>(i) - 1];
    return Monomial(std::move(e));
}

Monomial Monomial::div_var(int i) const {
    if (i < 1 || i > ambient())
        throw dimension_error("variable index out of range");
    std::vector<int> e(exp_);
    if (--e[static_cast<size_t>(i) - 1] < 0)
        throw domain_error("inexact monomial division");
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 1; i <= ambient(); ++i) {
        int e = exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<int> e(a.exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exp_[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<int> e(a.exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exp_[i]);
    return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& u, const Monomial& v) {
    return lcm(u, v) / v;
}

MonomialLatticeOps monomial_lattice_ops(const Monomial& u, const Monomial& v) {
    require_same_ambient(u, v);
    return MonomialLatticeOps{lcm(u, v), gcd(u, v), u.divides(v),
                              colon_quotient(u, v)};
}

void require_same_ambient(const Monomial& a, const Monomial& b) {
    if (a.ambient() != b.ambient())
        throw dimension_error("mismatched ambient variable counts: " +
                              std::to_string(a.ambient()) + " vs " +
                              std::to_string(b.ambient()));
}

VariableSet::VariableSet(int n, std::vector<int> indices)
    : n_(n), idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
    for (int i : idx_)
        if (i < 1 || i > n_)
            throw dimension_error("variable index out of range in VariableSet");
}

bool VariableSet::contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

std::string VariableSet::str() const {
    std::string s = "{";
    for (size_t k = 0; k < idx_.size(); ++k) {
        if (k) s += ',';
        s += "x" + std::to_string(idx_[k]);
    }
    return s + "}";
}

VariableSet set_union(const VariableSet& a, const VariableSet& b) {
    if (a.ambient() != b.ambient())
        throw dimension_error("mismatched ambient variable counts");
    std::vector<int> idx(a.indices());
    idx.insert(idx.end(), b.indices().begin(), b.indices().end());
    return VariableSet(a.ambient(), std::move(idx));
}

namespace {

void enumerate_degree(int n, int d, int var, std::vector<int>& cur,
                      std::vector<Monomial>& out) {
    if (var == n) {
        cur[static_cast<size_t>(var) - 1] = d;
        out.emplace_back(cur);
        cur[static_cast<size_t>(var) - 1] = 0;
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[static_cast<size_t>(var) - 1] = e;
        enumerate_degree(n, d - e, var + 1, cur, out);
    }
    cur[static_cast<size_t>(var) - 1] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
    if (n < 0 || d < 0) throw domain_error("monomials_of_degree: bad bounds");
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(n), 0);
    enumerate_degree(n, d, 1, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace monolin
