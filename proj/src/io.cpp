#include "monolin/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace monolin {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char next() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_spaces() {
        while (!done() && (peek() == ' ' || peek() == '\t')) next();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what, line, col);
    }
};

long read_number(Cursor& c) {
    c.skip_spaces();
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail("expected a number");
    long value = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = value * 10 + (c.next() - '0');
        if (value > 1'000'000) c.fail("number too large");
    }
    return value;
}

// x1^2*x3 syntax; `1` is the unit monomial
Monomial read_monomial(Cursor& c, int n) {
    std::vector<int> exps(static_cast<size_t>(n), 0);
    c.skip_spaces();
    if (!c.done() && c.peek() == '1') {
        c.next();
        c.skip_spaces();
        if (!c.done() && c.peek() == '*')
            c.fail("the unit monomial cannot carry factors");
        return Monomial(std::move(exps));
    }
    bool expect_factor = true;
    while (true) {
        c.skip_spaces();
        if (c.done() || c.peek() != 'x') {
            if (expect_factor) c.fail("expected a monomial factor");
            break;
        }
        c.next();
        long index = read_number(c);
        if (index < 1 || index > n)
            c.fail("variable index x" + std::to_string(index) +
                   " out of range for vars: " + std::to_string(n));
        long exp = 1;
        c.skip_spaces();
        if (!c.done() && c.peek() == '^') {
            c.next();
            c.skip_spaces();
            if (!c.done() && c.peek() == '-')
                c.fail("negative exponent");
            exp = read_number(c);
        }
        exps[static_cast<size_t>(index) - 1] += static_cast<int>(exp);
        expect_factor = false;
        c.skip_spaces();
        if (!c.done() && c.peek() == '*') {
            c.next();
            expect_factor = true;
            continue;
        }
        break;
    }
    return Monomial(std::move(exps));
}

void expect_keyword(Cursor& c, const std::string& word) {
    c.skip_spaces();
    for (char w : word) {
        if (c.done() || c.peek() != w) c.fail("expected '" + word + "'");
        c.next();
    }
}

MonomialIdeal parse_ideal_plain(const std::string& text) {
    Cursor c{text};
    // skip blank lines
    while (!c.done() && (c.peek() == '\n' || c.peek() == ' ' ||
                         c.peek() == '\t' || c.peek() == '\r'))
        c.next();
    expect_keyword(c, "vars:");
    long n = read_number(c);
    if (n < 0 || n > 64) c.fail("vars out of supported range [0, 64]");
    c.skip_spaces();
    if (!c.done() && c.peek() == '\r') c.next();
    if (!c.done() && c.peek() == '\n') c.next();
    expect_keyword(c, "gens:");

    std::vector<Monomial> gens;
    while (true) {
        c.skip_spaces();
        if (c.done()) break;
        char ch = c.peek();
        if (ch == '\n' || ch == '\r' || ch == ',') {
            c.next();
            continue;
        }
        gens.push_back(read_monomial(c, static_cast<int>(n)));
    }
    return MonomialIdeal(static_cast<int>(n), std::move(gens));
}

} // namespace

Monomial parse_monomial(const std::string& text, int n) {
    Cursor c{text};
    Monomial m = read_monomial(c, n);
    c.skip_spaces();
    if (!c.done() && c.peek() != '\n' && c.peek() != '\r')
        c.fail("trailing characters after monomial");
    return m;
}

MonomialIdeal parse_ideal_text(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return ideal_from_json(json::parse(text));
        break;
    }
    return parse_ideal_plain(text);
}

MonomialIdeal parse_ideal_file(const std::string& path) {
    return parse_ideal_text(read_file(path));
}

std::string serialize_ideal_text(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "vars: " << ideal.ambient() << "\n";
    out << "gens:\n";
    for (const Monomial& g : ideal.gens()) out << g.str() << "\n";
    return out.str();
}

json ideal_to_json(const MonomialIdeal& ideal) {
    json j;
    j["n"] = ideal.ambient();
    j["gens"] = json::array();
    for (const Monomial& g : ideal.gens()) j["gens"].push_back(g.exponents());
    return j;
}

MonomialIdeal ideal_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("gens"))
        throw parse_error("ideal JSON needs keys 'n' and 'gens'", 1, 1);
    int n = j.at("n").get<int>();
    if (n < 0 || n > 64)
        throw parse_error("vars out of supported range [0, 64]", 1, 1);
    std::vector<Monomial> gens;
    for (const auto& entry : j.at("gens")) {
        std::vector<int> exps = entry.get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != n)
            throw parse_error("exponent tuple has wrong length", 1, 1);
        for (int e : exps)
            if (e < 0) throw parse_error("negative exponent", 1, 1);
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(n, std::move(gens));
}

json betti_table_to_json(const BettiTable& table) {
    json j;
    j["field"] = table.field.characteristic;
    j["convention"] = convention_name(table.convention);
    j["n"] = table.n;
    j["entries"] = json::array();
    for (const auto& [key, beta] : table.entries) {
        json entry;
        entry["i"] = key.first;
        entry["a"] = key.second.exponents();
        entry["beta"] = beta;
        j["entries"].push_back(entry);
    }
    return j;
}

BettiTable betti_table_from_json(const json& j) {
    BettiTable table;
    table.field = FieldSpec(j.at("field").get<long>());
    table.convention = j.at("convention").get<std::string>() == "I"
                           ? Convention::ideal
                           : Convention::quotient;
    table.n = j.at("n").get<int>();
    for (const auto& entry : j.at("entries")) {
        Monomial a(entry.at("a").get<std::vector<int>>());
        table.entries[{entry.at("i").get<int>(), a}] =
            entry.at("beta").get<long>();
    }
    return table;
}

json chain_to_json(int d, const MonomialIdeal& base,
                   const std::vector<ChainStep>& steps) {
    json j;
    j["d"] = d;
    j["base"] = ideal_to_json(base);
    j["steps"] = json::array();
    for (const ChainStep& s : steps) {
        json step;
        step["u"] = s.u.exponents();
        step["A"] = s.A.indices();
        j["steps"].push_back(step);
    }
    return j;
}

ChainFile chain_from_json(const json& j) {
    ChainFile chain;
    chain.d = j.at("d").get<int>();
    chain.base = ideal_from_json(j.at("base"));
    int n = chain.base.ambient();
    for (const auto& step : j.at("steps")) {
        Monomial u(step.at("u").get<std::vector<int>>());
        VariableSet a(n, step.at("A").get<std::vector<int>>());
        chain.steps.push_back(ChainStep{u, a});
    }
    return chain;
}

json clutter_to_json(const Clutter& clutter) {
    json j;
    j["n"] = clutter.ambient();
    j["d"] = clutter.uniformity();
    j["circuits"] = json::array();
    for (const Face& f : clutter.circuits()) j["circuits"].push_back(f);
    return j;
}

Clutter clutter_from_json(const json& j) {
    std::vector<Face> circuits;
    for (const auto& f : j.at("circuits"))
        circuits.push_back(f.get<Face>());
    return Clutter(j.at("n").get<int>(), j.at("d").get<int>(),
                   std::move(circuits));
}

json complex_to_json(const SimplicialComplex& complex) {
    json j;
    j["n"] = complex.ambient();
    j["facets"] = json::array();
    for (const Face& f : complex.facets()) j["facets"].push_back(f);
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<Face>());
    return SimplicialComplex(j.at("n").get<int>(), std::move(facets));
}

json graph_to_json(const IdealGraph& graph) {
    json j;
    j["n"] = graph.n;
    j["shadows"] = graph.shadows;
    j["edges"] = json::array();
    for (const auto& [a, b] : graph.edges) {
        // shadow vertices render as negative indices
        int bb = graph.is_shadow(b) ? -(b - graph.n) : b;
        j["edges"].push_back(std::vector<int>{a, bb});
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file: " + path, 1, 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace monolin
