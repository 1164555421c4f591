#include "monolin/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_map>

namespace monolin {

std::string convention_name(Convention c) {
    return c == Convention::ideal ? "I" : "R/I";
}

long BettiTable::entry(int i, const MultiDegree& a) const {
    auto it = entries.find({i, a});
    return it == entries.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, long> BettiTable::graded() const {
    std::map<std::pair<int, int>, long> g;
    for (const auto& [key, beta] : entries)
        g[{key.first, key.second.degree()}] += beta;
    return g;
}

BettiTable BettiTable::to_convention(Convention target) const {
    if (target == convention) return *this;
    BettiTable out;
    out.n = n;
    out.field = field;
    out.convention = target;
    if (target == Convention::quotient) {
        for (const auto& [key, beta] : entries)
            out.entries[{key.first + 1, key.second}] = beta;
        out.entries[{0, Monomial::one(n)}] = 1;
    } else {
        for (const auto& [key, beta] : entries) {
            if (key.first == 0) continue; // beta_{0,0}(R/I) = 1
            out.entries[{key.first - 1, key.second}] = beta;
        }
    }
    return out;
}

std::map<std::pair<int, MultiDegree>, long>
BettiTable::diff(const BettiTable& other) const {
    if (n != other.n || convention != other.convention)
        throw domain_error("Betti table diff: incompatible tables");
    std::map<std::pair<int, MultiDegree>, long> d;
    for (const auto& [key, beta] : entries) d[key] += beta;
    for (const auto& [key, beta] : other.entries) d[key] -= beta;
    std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
    return d;
}

std::vector<MultiDegree> lcm_lattice(const MonomialIdeal& ideal,
                                     long max_gens) {
    long m = ideal.num_gens();
    if (m > max_gens || m > 30)
        throw resource_error("lcm_lattice: generator count " +
                                 std::to_string(m) + " exceeds cap",
                             std::min(max_gens, 30L));
    std::set<MultiDegree> seen;
    const auto& gens = ideal.gens();
    for (uint64_t mask = 1; mask < (uint64_t(1) << m); ++mask) {
        Monomial l = Monomial::one(ideal.ambient());
        for (int k = 0; k < m; ++k)
            if (mask >> k & 1) l = lcm(l, gens[static_cast<size_t>(k)]);
        seen.insert(l);
    }
    return {seen.begin(), seen.end()};
}

std::vector<MultiDegree> lcm_lattice_closure(const MonomialIdeal& ideal,
                                             long max_lattice) {
    std::set<MultiDegree> lattice(ideal.gens().begin(), ideal.gens().end());
    std::vector<MultiDegree> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<MultiDegree> next;
        for (const MultiDegree& a : frontier)
            for (const Monomial& g : ideal.gens()) {
                Monomial b = lcm(a, g);
                if (lattice.insert(b).second) next.push_back(b);
                if (static_cast<long>(lattice.size()) > max_lattice)
                    throw resource_error("lcm lattice too large", max_lattice);
            }
        frontier = std::move(next);
    }
    return {lattice.begin(), lattice.end()};
}

namespace {

// ---------------------------------------------------------------- Taylor

// Subset lcms live in one flat array, n entries per mask.
struct SubsetLcms {
    int n;
    std::vector<int32_t> flat;

    const int32_t* of(size_t mask) const {
        return flat.data() + mask * static_cast<size_t>(n);
    }
    bool equal(size_t mask, const int32_t* target) const {
        return std::equal(of(mask), of(mask) + n, target);
    }
};

// Homology dimensions of one strand: H_i = |C_i| - rank d_i - rank d_{i+1}.
// by_size buckets the strand's subset masks by popcount; a drop stays in
// the strand exactly when its lcm still equals the strand multidegree.
std::map<int, long> strand_homology(
    const std::vector<std::vector<uint32_t>>& by_size, long p,
    const SubsetLcms& lcms, const int32_t* target) {
    int levels = static_cast<int>(by_size.size());
    std::vector<std::unordered_map<uint32_t, int>> index(
        static_cast<size_t>(levels));
    for (int i = 0; i < levels; ++i)
        for (size_t k = 0; k < by_size[static_cast<size_t>(i)].size(); ++k)
            index[static_cast<size_t>(i)][by_size[static_cast<size_t>(i)][k]] =
                static_cast<int>(k);

    std::vector<int> ranks(static_cast<size_t>(levels) + 1, 0);
    for (int i = 1; i < levels; ++i) {
        const auto& ci = by_size[static_cast<size_t>(i)];
        const auto& lo = by_size[static_cast<size_t>(i) - 1];
        if (ci.empty() || lo.empty()) continue;
        GfMatrix mat(static_cast<int>(lo.size()), static_cast<int>(ci.size()),
                     p);
        for (size_t col = 0; col < ci.size(); ++col) {
            uint32_t mask = ci[col];
            int k = 0; // 1-based position of the dropped bit, smallest first
            for (uint32_t rest = mask; rest; rest &= rest - 1) {
                ++k;
                uint32_t dropped = mask ^ (rest & (0u - rest));
                if (!lcms.equal(dropped, target)) continue;
                mat.add(index[static_cast<size_t>(i) - 1].at(dropped),
                        static_cast<int>(col), k % 2 == 1 ? 1 : p - 1);
            }
        }
        ranks[static_cast<size_t>(i)] = mat.rank();
    }

    std::map<int, long> h;
    for (int i = 0; i < levels; ++i) {
        long dim = static_cast<long>(by_size[static_cast<size_t>(i)].size()) -
                   ranks[static_cast<size_t>(i)] -
                   ranks[static_cast<size_t>(i) + 1];
        if (dim != 0) h[i] = dim;
    }
    return h;
}

// R/I-convention table by Taylor strands.  Returns nullopt when a strand
// exceeds the width guard.
std::optional<BettiTable> taylor_table(const MonomialIdeal& ideal,
                                       const FieldSpec& field,
                                       const BettiOptions& opt) {
    int m = ideal.num_gens();
    int n = ideal.ambient();
    const auto& gens = ideal.gens();
    size_t total = size_t(1) << m;

    // lcm of every subset, incrementally from the subset without its top bit
    SubsetLcms lcms{n, std::vector<int32_t>(total * static_cast<size_t>(n), 0)};
    for (size_t mask = 1; mask < total; ++mask) {
        size_t top = static_cast<size_t>(std::bit_width(mask)) - 1;
        const int32_t* base = lcms.of(mask ^ (size_t(1) << top));
        const auto& ge = gens[top].exponents();
        int32_t* cur = lcms.flat.data() + mask * static_cast<size_t>(n);
        for (int i = 0; i < n; ++i)
            cur[i] = std::max(base[i], static_cast<int32_t>(
                                           ge[static_cast<size_t>(i)]));
    }

    // group masks by lcm: sort mask indices by their lcm vectors
    std::vector<uint32_t> order(total);
    for (size_t k = 0; k < total; ++k) order[k] = static_cast<uint32_t>(k);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return std::lexicographical_compare(lcms.of(a), lcms.of(a) + n,
                                            lcms.of(b), lcms.of(b) + n);
    });

    BettiTable table;
    table.n = n;
    table.field = field;
    table.convention = Convention::quotient;
    size_t run = 0;
    while (run < total) {
        size_t end = run + 1;
        const int32_t* target = lcms.of(order[run]);
        while (end < total && lcms.equal(order[end], target)) ++end;

        std::vector<std::vector<uint32_t>> by_size;
        for (size_t k = run; k < end; ++k) {
            uint32_t mask = order[k];
            int size = std::popcount(mask);
            if (static_cast<int>(by_size.size()) <= size)
                by_size.resize(static_cast<size_t>(size) + 1);
            auto& bucket = by_size[static_cast<size_t>(size)];
            bucket.push_back(mask);
            if (static_cast<long>(bucket.size()) > opt.max_strand)
                return std::nullopt;
        }

        auto h = strand_homology(by_size, field.characteristic, lcms, target);
        if (!h.empty()) {
            Monomial a(std::vector<int>(target, target + n));
            for (const auto& [i, dim] : h) table.entries[{i, a}] = dim;
        }
        run = end;
    }
    return table;
}

// ---------------------------------------------------------------- Koszul

// Reduced homology dimensions of the upper Koszul complex
// K^a = { b subset of supp(a) : x^(a-b) in I }, reported as
// beta_{i,a}(I) = dim H~_{i-1}, i.e. indexed by subset size.
std::map<int, long> koszul_homology(const MonomialIdeal& ideal,
                                    const MultiDegree& a, long p,
                                    const BettiOptions& opt) {
    std::vector<int> supp = a.support();
    int s = static_cast<int>(supp.size());
    if (s > opt.max_support)
        throw resource_error(
            "multidegree support too large for the Koszul backend",
            opt.max_support);

    // b is a face iff some generator g <= x^a avoids b on the coordinates
    // where g is tight against a.
    std::vector<uint32_t> tight;
    for (const Monomial& g : ideal.gens()) {
        if (!g.divides(a)) continue;
        uint32_t t = 0;
        for (int k = 0; k < s; ++k)
            if (g.exponent(supp[static_cast<size_t>(k)]) ==
                a.exponent(supp[static_cast<size_t>(k)]))
                t |= uint32_t(1) << k;
        tight.push_back(t);
    }

    std::vector<std::vector<uint32_t>> faces(static_cast<size_t>(s) + 1);
    for (uint32_t b = 0; b < (uint32_t(1) << s); ++b) {
        bool face = false;
        for (uint32_t t : tight)
            if ((t & b) == 0) {
                face = true;
                break;
            }
        if (face) faces[static_cast<size_t>(std::popcount(b))].push_back(b);
    }

    std::vector<std::unordered_map<uint32_t, int>> index(
        static_cast<size_t>(s) + 1);
    for (size_t lvl = 0; lvl <= static_cast<size_t>(s); ++lvl)
        for (size_t k = 0; k < faces[lvl].size(); ++k)
            index[lvl][faces[lvl][k]] = static_cast<int>(k);

    std::vector<int> ranks(static_cast<size_t>(s) + 2, 0);
    for (int lvl = 1; lvl <= s; ++lvl) {
        const auto& ci = faces[static_cast<size_t>(lvl)];
        const auto& lo = faces[static_cast<size_t>(lvl) - 1];
        if (ci.empty() || lo.empty()) continue;
        GfMatrix mat(static_cast<int>(lo.size()), static_cast<int>(ci.size()),
                     p);
        for (size_t col = 0; col < ci.size(); ++col) {
            uint32_t b = ci[col];
            int k = 0;
            for (uint32_t rest = b; rest; rest &= rest - 1) {
                ++k;
                uint32_t sub = b ^ (rest & (uint32_t)-(int32_t)rest);
                // subsets of faces are faces
                mat.add(index[static_cast<size_t>(lvl) - 1].at(sub),
                        static_cast<int>(col), k % 2 == 1 ? 1 : p - 1);
            }
        }
        ranks[static_cast<size_t>(lvl)] = mat.rank();
    }

    std::map<int, long> h;
    for (int lvl = 0; lvl <= s; ++lvl) {
        long dim = static_cast<long>(faces[static_cast<size_t>(lvl)].size()) -
                   ranks[static_cast<size_t>(lvl)] -
                   ranks[static_cast<size_t>(lvl) + 1];
        if (dim != 0) h[lvl] = dim;
    }
    return h;
}

BettiTable koszul_table(const MonomialIdeal& ideal, const FieldSpec& field,
                        const BettiOptions& opt) {
    BettiTable table;
    table.n = ideal.ambient();
    table.field = field;
    table.convention = Convention::ideal;
    for (const MultiDegree& a : lcm_lattice_closure(ideal, opt.max_lattice)) {
        auto h = koszul_homology(ideal, a, field.characteristic, opt);
        for (const auto& [i, dim] : h) table.entries[{i, a}] = dim;
    }
    return table;
}

} // namespace

BettiTable multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                             Convention convention, const BettiOptions& options,
                             BettiBackend backend) {
    long m = ideal.num_gens();
    if (m > options.max_gens)
        throw resource_error("multigraded_betti: generator count " +
                                 std::to_string(m) + " exceeds cap",
                             options.max_gens);

    BettiTable table;
    table.n = ideal.ambient();
    table.field = field;
    if (ideal.is_zero()) {
        // I = 0: empty table; R/0 = R is free with beta_{0,0} = 1.
        table.convention = Convention::ideal;
        return table.to_convention(convention);
    }
    if (ideal.is_unit()) {
        // I = R is free; R/I = 0 has no Betti numbers at all.
        if (convention == Convention::ideal) {
            table.convention = Convention::ideal;
            table.entries[{0, Monomial::one(ideal.ambient())}] = 1;
        } else {
            table.convention = Convention::quotient;
        }
        return table;
    }

    bool try_taylor = backend != BettiBackend::koszul_complex &&
                      m <= 30 && (long(1) << m) <= options.max_subsets;
    if (try_taylor) {
        auto t = taylor_table(ideal, field, options);
        if (t) return t->to_convention(convention);
        if (backend == BettiBackend::taylor_strand)
            throw resource_error("Taylor strand width exceeds cap",
                                 options.max_strand);
    } else if (backend == BettiBackend::taylor_strand) {
        throw resource_error("subset count exceeds cap for Taylor backend",
                             options.max_subsets);
    }
    return koszul_table(ideal, field, options).to_convention(convention);
}

BettiSummary betti_summary(const MonomialIdeal& ideal, const FieldSpec& field,
                           const BettiOptions& options) {
    if (ideal.is_zero())
        throw domain_error("betti_summary: regularity of the zero ideal "
                           "is undefined");
    BettiTable table =
        multigraded_betti(ideal, field, Convention::ideal, options);
    BettiSummary s;
    s.graded = table.graded();
    s.regularity = 0;
    s.projective_dimension = 0;
    for (const auto& [ij, beta] : s.graded) {
        s.regularity = std::max(s.regularity, ij.second - ij.first);
        s.projective_dimension = std::max(s.projective_dimension, ij.first);
    }
    s.equigenerated_degree = ideal.equigenerated_degree();
    s.linear_resolution = s.equigenerated_degree.has_value() &&
                          s.regularity == *s.equigenerated_degree;
    return s;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field,
                           const BettiOptions& options) {
    if (ideal.is_zero()) return true;
    return betti_summary(ideal, field, options).linear_resolution;
}

std::map<MultiDegree, long> lattice_euler_counts(const MonomialIdeal& ideal,
                                                 long max_lattice) {
    std::vector<MultiDegree> lattice = lcm_lattice_closure(ideal, max_lattice);
    // include the empty-subset element x^0
    lattice.insert(lattice.begin(), Monomial::one(ideal.ambient()));
    std::sort(lattice.begin(), lattice.end(),
              [](const MultiDegree& a, const MultiDegree& b) {
                  int da = a.degree(), db = b.degree();
                  return da != db ? da < db : a < b;
              });
    lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());

    // Mobius recurrence: sum of E(b) over lattice b dividing a equals
    // (1-1)^{#gens dividing x^a}.
    std::map<MultiDegree, long> counts;
    for (const MultiDegree& a : lattice) {
        long dividing_gens = static_cast<long>(std::count_if(
            ideal.gens().begin(), ideal.gens().end(),
            [&](const Monomial& g) { return g.divides(a); }));
        long target = dividing_gens == 0 ? 1 : 0;
        long below = 0;
        for (const auto& [b, e] : counts)
            if (b != a && b.divides(a)) below += e;
        counts[a] = target - below;
    }
    return counts;
}

std::vector<std::string> engine_self_check(const MonomialIdeal& ideal,
                                           const FieldSpec& field,
                                           const BettiOptions& options) {
    std::vector<std::string> violations;
    BettiTable ti =
        multigraded_betti(ideal, field, Convention::ideal, options);
    BettiTable tq =
        multigraded_betti(ideal, field, Convention::quotient, options);

    if (!ideal.is_zero() && !ideal.is_unit()) {
        // shift identity beta_{i,a}(I) = beta_{i+1,a}(R/I)
        for (const auto& [key, beta] : ti.entries)
            if (tq.entry(key.first + 1, key.second) != beta)
                violations.push_back("shift identity fails at i=" +
                                     std::to_string(key.first) + ", a=" +
                                     key.second.str());
        long quotient_extras = 0;
        for (const auto& [key, beta] : tq.entries) {
            if (key.first == 0) {
                ++quotient_extras;
                continue;
            }
            if (ti.entry(key.first - 1, key.second) != beta)
                violations.push_back("shift identity fails (R/I side) at i=" +
                                     std::to_string(key.first) + ", a=" +
                                     key.second.str());
        }
        if (quotient_extras != 1)
            violations.push_back("R/I table must have exactly one i=0 entry");
    }

    // Euler characteristic per multidegree
    std::map<MultiDegree, long> euler;
    for (const auto& [key, beta] : tq.entries)
        euler[key.second] += (key.first % 2 == 0 ? beta : -beta);
    std::map<MultiDegree, long> expected =
        lattice_euler_counts(ideal, options.max_lattice);
    for (auto* side : {&euler, &expected})
        std::erase_if(*side, [](const auto& kv) { return kv.second == 0; });
    if (euler != expected)
        violations.push_back("Euler/Hilbert alternating-sum identity fails");
    return violations;
}

std::string render_betti_diagram(
    const std::map<std::pair<int, int>, long>& graded) {
    if (graded.empty()) return "(empty Betti table)\n";
    int max_i = 0, min_row = 1 << 20, max_row = 0;
    for (const auto& [ij, beta] : graded) {
        max_i = std::max(max_i, ij.first);
        min_row = std::min(min_row, ij.second - ij.first);
        max_row = std::max(max_row, ij.second - ij.first);
    }
    std::vector<size_t> width(static_cast<size_t>(max_i) + 1, 1);
    for (const auto& [ij, beta] : graded)
        width[static_cast<size_t>(ij.first)] =
            std::max(width[static_cast<size_t>(ij.first)],
                     std::to_string(beta).size());

    std::ostringstream out;
    out << "      ";
    for (int i = 0; i <= max_i; ++i) {
        std::string head = std::to_string(i);
        out << std::string(width[static_cast<size_t>(i)] + 1 - head.size(), ' ')
            << head;
    }
    out << '\n';
    for (int row = min_row; row <= max_row; ++row) {
        std::string label = std::to_string(row) + ":";
        out << std::string(6 - std::min<size_t>(6, label.size()), ' ') << label;
        for (int i = 0; i <= max_i; ++i) {
            auto it = graded.find({i, i + row});
            std::string cell =
                it == graded.end() ? "." : std::to_string(it->second);
            out << std::string(width[static_cast<size_t>(i)] + 1 - cell.size(),
                               ' ')
                << cell;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace monolin
