#ifndef MONOLIN_IO_HPP
#define MONOLIN_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "monolin/betti.hpp"
#include "monolin/complexes.hpp"
#include "monolin/ideal.hpp"
#include "monolin/linearity.hpp"
#include "monolin/quadratic.hpp"

namespace monolin {

using json = nlohmann::json;

/// Text form:
///     vars: 4
///     gens:
///     x1^2*x3
///     x3*x4^2
/// Monomials may also be separated by commas; `1` is the unit monomial.
/// JSON form: {"n": 4, "gens": [[2,0,1,0],[0,0,1,2]]}.  The parser picks
/// the format from the first non-blank character.
MonomialIdeal parse_ideal_text(const std::string& text);
MonomialIdeal parse_ideal_file(const std::string& path);

/// One monomial in `x1^2*x3` syntax; needs the ambient n.
Monomial parse_monomial(const std::string& text, int n);

std::string serialize_ideal_text(const MonomialIdeal& ideal);
json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

json betti_table_to_json(const BettiTable& table);
BettiTable betti_table_from_json(const json& j);

json chain_to_json(int d, const MonomialIdeal& base,
                   const std::vector<ChainStep>& steps);
struct ChainFile {
    int d = 0;
    MonomialIdeal base;
    std::vector<ChainStep> steps;
};
ChainFile chain_from_json(const json& j);

json clutter_to_json(const Clutter& clutter);
Clutter clutter_from_json(const json& j);

json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const json& j);

/// Debug dump; shadow vertices are rendered as negative indices.
json graph_to_json(const IdealGraph& graph);

std::string read_file(const std::string& path);

} // namespace monolin

#endif
