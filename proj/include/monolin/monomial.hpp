#ifndef MONOLIN_MONOMIAL_HPP
#define MONOLIN_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "monolin/errors.hpp"

namespace monolin {

/// A monomial in a fixed number of variables, stored as its exponent tuple.
/// The ambient variable count is the length of the tuple; the all-zero tuple
/// is the unit monomial 1.  Values are immutable once built and all
/// operations are pure.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    /// The unit monomial in n variables.
    static Monomial one(int n);
    /// The single variable x_i (1-based) in n variables.
    static Monomial variable(int n, int i);

    int ambient() const { return static_cast<int>(exp_.size()); }
    const std::vector<int>& exponents() const { return exp_; }
    int exponent(int i) const { return exp_[static_cast<size_t>(i) - 1]; }

    int degree() const;
    bool is_unit() const { return degree() == 0; }
    bool is_squarefree() const;
    /// Indices (1-based) of variables with nonzero exponent.
    std::vector<int> support() const;
    int support_size() const;
    /// Largest variable index dividing the monomial; 0 for the unit monomial.
    int max_var() const;

    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Exact division; requires other | *this.
    Monomial operator/(const Monomial& other) const;
    Monomial times_var(int i) const;
    /// Exact division by x_i; requires x_i | *this.
    Monomial div_var(int i) const;

    /// Renders as `x1^2*x3`, or `1` for the unit monomial.
    std::string str() const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    // Exponent-tuple lexicographic order; doubles as the deterministic
    // tie-break order used by every witness search.
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<int> exp_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// [u,v]/v: the generator of (u):v, equivalently u/gcd(u,v).
Monomial colon_quotient(const Monomial& u, const Monomial& v);

struct MonomialLatticeOps {
    Monomial lcm;
    Monomial gcd;
    bool divides;           // u | v
    Monomial quotient_of_lcm; // [u,v]/v
};

/// lcm, gcd, divisibility and the colon quotient of a pair in one call.
MonomialLatticeOps monomial_lattice_ops(const Monomial& u, const Monomial& v);

void require_same_ambient(const Monomial& a, const Monomial& b);

/// A subset of [n], kept sorted; stands for the ideal (x_i : i in indices).
class VariableSet {
public:
    VariableSet() = default;
    VariableSet(int n, std::vector<int> indices);

    int ambient() const { return n_; }
    const std::vector<int>& indices() const { return idx_; }
    bool contains(int i) const;
    bool empty() const { return idx_.empty(); }
    int size() const { return static_cast<int>(idx_.size()); }

    std::string str() const;

    friend VariableSet set_union(const VariableSet& a, const VariableSet& b);

    auto operator<=>(const VariableSet&) const = default;

private:
    int n_ = 0;
    std::vector<int> idx_;
};

VariableSet set_union(const VariableSet& a, const VariableSet& b);

/// All monomials of total degree d in n variables, ascending in the
/// exponent-lex order.
std::vector<Monomial> monomials_of_degree(int n, int d);

} // namespace monolin

#endif
