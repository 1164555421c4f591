#include "monolin/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "monolin/io.hpp"
#include "monolin/linearity.hpp"
#include "monolin/quadratic.hpp"
#include "monolin/stable.hpp"

namespace monolin {

namespace {

MonomialIdeal load_ideal(const CommandRequest& req) {
    if (!req.file.empty()) return parse_ideal_file(req.file);
    if (!req.inline_text.empty()) return parse_ideal_text(req.inline_text);
    throw parse_error("no input given (expected FILE)", 1, 1);
}

json load_json(const CommandRequest& req) {
    std::string text = !req.file.empty() ? read_file(req.file)
                                         : req.inline_text;
    if (text.empty()) throw parse_error("no input given (expected FILE)", 1, 1);
    return json::parse(text);
}

std::vector<long> fields_of(const CommandRequest& req) {
    return req.fields.empty() ? std::vector<long>{32003} : req.fields;
}

BettiOptions options_of(const CommandRequest& req) {
    BettiOptions opt;
    opt.max_gens = req.max_gens;
    return opt;
}

json graded_to_json(const std::map<std::pair<int, int>, long>& graded) {
    json rows = json::array();
    for (const auto& [ij, beta] : graded)
        rows.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    return rows;
}

json delta_to_json(const BettiDelta& delta) {
    json j;
    j["entries"] = json::array();
    for (const auto& [key, v] : delta.entries)
        j["entries"].push_back(
            {{"s", key.first}, {"a", key.second.exponents()}, {"delta", v}});
    j["graded"] = json::array();
    for (const auto& [s, v] : delta.graded)
        j["graded"].push_back({{"s", s}, {"delta", v}});
    return j;
}

void cmd_betti(const CommandRequest& req, json& report, std::ostream& text) {
    MonomialIdeal ideal = load_ideal(req);
    report["input"] = ideal_to_json(ideal);
    report["results"] = json::array();
    for (long p : fields_of(req)) {
        BettiSummary s = betti_summary(ideal, FieldSpec(p), options_of(req));
        BettiTable table = multigraded_betti(ideal, FieldSpec(p),
                                             Convention::ideal,
                                             options_of(req));
        json r;
        r["field"] = p;
        r["graded"] = graded_to_json(s.graded);
        r["regularity"] = s.regularity;
        r["projective_dimension"] = s.projective_dimension;
        if (s.equigenerated_degree)
            r["equigenerated_degree"] = *s.equigenerated_degree;
        r["linear_resolution"] = s.linear_resolution;
        r["table"] = betti_table_to_json(table);
        report["results"].push_back(r);

        text << "ideal " << ideal.str() << ", GF(" << p << ")\n"
             << render_betti_diagram(s.graded) << "regularity " << s.regularity
             << ", projective dimension " << s.projective_dimension
             << ", linear resolution: " << (s.linear_resolution ? "yes" : "no")
             << "\n";
    }
}

void cmd_quasilinear(const CommandRequest& req, json& report,
                     std::ostream& text) {
    MonomialIdeal ideal = load_ideal(req);
    QuasiLinearReport r = is_quasi_linear(ideal);
    report["input"] = ideal_to_json(ideal);
    report["quasi_linear"] = r.quasi_linear;
    report["witnesses"] = json::array();
    for (const auto& [u, v] : r.witnesses)
        report["witnesses"].push_back(
            {{"generator", u.exponents()}, {"colon_generator", v.exponents()}});
    text << "ideal " << ideal.str() << "\nquasi-linear: "
         << (r.quasi_linear ? "yes" : "no") << "\n";
    for (const auto& [u, v] : r.witnesses)
        text << "  witness: generator " << u.str()
             << " has colon generator " << v.str() << "\n";
}

void cmd_linquot(const CommandRequest& req, json& report, std::ostream& text) {
    MonomialIdeal ideal = load_ideal(req);
    LinearOverReport r = has_linear_quotients(ideal, req.max_gens);
    report["input"] = ideal_to_json(ideal);
    report["linear_quotients"] = r.linear_over;
    report["ordering"] = json::array();
    for (const Monomial& u : r.ordering)
        report["ordering"].push_back(u.exponents());
    text << "ideal " << ideal.str() << "\nlinear quotients: "
         << (r.linear_over ? "yes" : "no") << "\n";
    if (r.linear_over) {
        text << "  ordering:";
        for (const Monomial& u : r.ordering) text << " " << u.str();
        text << "\n";
    }
}

void cmd_critical(const CommandRequest& req, json& report,
                  std::ostream& text) {
    MonomialIdeal ideal = load_ideal(req);
    report["input"] = ideal_to_json(ideal);
    long p = fields_of(req).front();
    bool critical = is_critical_linear(ideal, FieldSpec(p), options_of(req));
    report["field"] = p;
    report["critical_linear"] = critical;
    text << "ideal " << ideal.str() << ", GF(" << p << ")\ncritical linear: "
         << (critical ? "yes" : "no") << "\n";
    bool linear = has_linear_resolution(ideal, FieldSpec(p), options_of(req));
    report["linear_resolution"] = linear;
    if (linear) {
        CriticalBase base =
            find_critical_base(ideal, FieldSpec(p), options_of(req));
        report["critical_base"] = ideal_to_json(base.base);
        report["peeled_ordering"] = json::array();
        for (const Monomial& u : base.ordering)
            report["peeled_ordering"].push_back(u.exponents());
        text << "critical base: " << base.base.str() << "\n";
    }
}

void cmd_stronglin(const CommandRequest& req, json& report,
                   std::ostream& text) {
    MonomialIdeal ideal = load_ideal(req);
    if (req.monomial.empty())
        throw parse_error("stronglin needs --monomial", 1, 1);
    Monomial u = parse_monomial(req.monomial, ideal.ambient());
    StrongLinearityReport r = is_strongly_linear(u, ideal);
    report["input"] = ideal_to_json(ideal);
    report["monomial"] = u.exponents();
    report["strongly_linear"] = r.strongly_linear;
    report["colon_support"] = r.colon_support.indices();
    report["conditions"] = {r.condition_colon, r.condition_support,
                            r.condition_lcm};
    text << u.str() << " strongly linear over " << ideal.str() << ": "
         << (r.strongly_linear ? "yes" : "no") << "\n";
    if (r.strongly_linear)
        text << "  colon support " << r.colon_support.str() << "\n";
}

void cmd_extend(const CommandRequest& req, json& report, std::ostream& text) {
    MonomialIdeal ideal = load_ideal(req);
    if (req.monomial.empty())
        throw parse_error("extend needs --monomial", 1, 1);
    Monomial u = parse_monomial(req.monomial, ideal.ambient());
    VariableSet a(ideal.ambient(), req.variables);
    MonomialIdeal extension = one_step_extension(ideal, u, a);
    BettiDelta predicted = predicted_betti_delta(ideal, u, a);
    report["input"] = ideal_to_json(ideal);
    report["monomial"] = u.exponents();
    report["vars"] = a.indices();
    report["extension"] = ideal_to_json(extension);
    report["predicted_delta"] = delta_to_json(predicted);
    report["measured"] = json::array();
    for (long p : fields_of(req)) {
        BettiDelta measured = measured_betti_delta(ideal, extension,
                                                   FieldSpec(p),
                                                   options_of(req));
        report["measured"].push_back(
            {{"field", p}, {"delta", delta_to_json(measured)}});
    }
    text << "extension " << extension.str() << "\npredicted delta entries: "
         << predicted.entries.size() << "\n";
}

void cmd_stable_chain(const CommandRequest& req, json& report,
                      std::ostream& text) {
    MonomialIdeal ideal = load_ideal(req);
    report["input"] = ideal_to_json(ideal);
    StableReport st = is_stable(ideal);
    report["stable"] = st.stable;
    if (!st.stable) {
        report["witness"] = {{"generator", st.witness->first.exponents()},
                             {"variable", st.witness->second}};
        text << "ideal " << ideal.str() << " is not stable: exchange of "
             << st.witness->first.str() << " by x"
             << st.witness->second << " leaves the ideal\n";
        return;
    }
    auto records = stable_chain_to_power(ideal);
    auto steps = chain_steps_from_records(records);
    report["chain"] =
        chain_to_json(ideal.equigenerated_degree().value_or(0), ideal, steps);
    report["steps"] = json::array();
    text << "stable ideal " << ideal.str() << "\n";
    for (const auto& r : records) {
        report["steps"].push_back({{"special", r.special.exponents()},
                                   {"colon", r.colon.indices()},
                                   {"after", ideal_to_json(r.after)}});
        text << "  colon by " << r.special.str() << " = " << r.colon.str()
             << ", extend to " << r.after.num_gens() << " generators\n";
    }
    text << "reached the full power in " << records.size() << " steps\n";
}

void cmd_clutter(const CommandRequest& req, json& report, std::ostream& text) {
    Clutter clutter = clutter_from_json(load_json(req));
    report["input"] = clutter_to_json(clutter);
    MonomialIdeal dual_circuit = circuit_ideal(complement_clutter(clutter));
    report["complement_circuit_ideal"] = ideal_to_json(dual_circuit);
    report["simplicial_subcircuits"] = json::array();
    text << "clutter on [" << clutter.ambient() << "], "
         << clutter.circuits().size() << " circuits\n";
    for (const Face& e : simp_set(clutter)) {
        Monomial xe = face_monomial(clutter.ambient(), e);
        bool strong = is_strongly_linear(xe, dual_circuit).strongly_linear;
        report["simplicial_subcircuits"].push_back(
            {{"e", e}, {"strongly_linear", strong}});
        text << "  simplicial maximal subcircuit {";
        for (size_t k = 0; k < e.size(); ++k)
            text << (k ? "," : "") << e[k];
        text << "}, x_e strongly linear over the complement ideal: "
             << (strong ? "yes" : "no") << "\n";
    }
}

void cmd_complex(const CommandRequest& req, json& report, std::ostream& text) {
    SimplicialComplex complex = complex_from_json(load_json(req));
    report["input"] = complex_to_json(complex);
    report["dual_ideal"] = ideal_to_json(alexander_dual_ideal(complex));
    report["stanley_reisner"] = ideal_to_json(stanley_reisner_ideal(complex));
    report["shelling_moves"] = json::array();
    text << "complex with " << complex.num_facets() << " facets, dimension "
         << complex.dimension() << "\n";
    if (complex.num_facets() >= 2)
        for (const Face& f : complex.facets())
            report["shelling_moves"].push_back(
                {{"facet", f}, {"move", is_shelling_move(complex, f)}});
    ShellingSearchReport shelling = shelled_over_search(complex, {});
    report["shellable"] = shelling.shelled;
    text << "shellable: " << (shelling.shelled ? "yes" : "no") << "\n";
    for (long p : fields_of(req)) {
        bool cm = is_cohen_macaulay(complex, FieldSpec(p), options_of(req));
        report["cohen_macaulay"].push_back({{"field", p}, {"verdict", cm}});
        text << "Cohen-Macaulay over GF(" << p << "): " << (cm ? "yes" : "no")
             << "\n";
    }
}

void cmd_explore(const CommandRequest& req, json& report, std::ostream& text) {
    RunConfig config;
    config.fields = fields_of(req);
    if (config.fields.size() == 1) config.fields = {2, config.fields[0]};
    std::sort(config.fields.begin(), config.fields.end());
    config.fields.erase(
        std::unique(config.fields.begin(), config.fields.end()),
        config.fields.end());
    config.seed = req.seed;
    config.samples = req.samples;
    config.max_gens = req.max_gens;
    config.timeout_seconds = req.timeout_seconds;
    ExploreResult result = explore(config);

    report["seed"] = config.seed;
    report["samples_per_kind"] = config.samples;
    report["samples_evaluated"] = result.samples_evaluated;
    report["skipped"] = result.skipped;
    report["slow"] = result.slow;
    report["cor_p_probes"] = result.cor_p_probes;
    report["cor_p_agreements"] = result.cor_p_agreements;
    report["findings"] = json::array();
    for (const ExplorerFinding& f : result.findings) {
        json jf;
        jf["class"] = f.class_tag;
        jf["kind"] = f.kind;
        jf["sample"] = f.sample_index;
        jf["ideal"] = f.ideal;
        jf["evidence"] = f.evidence;
        report["findings"].push_back(jf);
    }
    if (!req.findings_path.empty()) {
        std::ofstream out(req.findings_path, std::ios::app);
        for (const auto& jf : report["findings"]) out << jf.dump() << "\n";
        report["findings_log"] = req.findings_path;
    }
    text << "evaluated " << result.samples_evaluated << " samples ("
         << result.skipped << " skipped, " << result.slow
         << " over the soft time budget)\n"
         << "hierarchy held on every sample\n"
         << result.findings.size() << " findings; degree-3 polarization "
         << "probes: " << result.cor_p_probes << ", agreements: "
         << result.cor_p_agreements << "\n";
    std::map<std::string, int> per_class;
    for (const ExplorerFinding& f : result.findings) ++per_class[f.class_tag];
    for (const auto& [tag, count] : per_class)
        text << "  " << tag << ": " << count << "\n";
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "betti",    "quasilinear", "linquot",      "critical", "stronglin",
        "extend",   "stable-chain", "clutter",     "complex",  "explore"};
    return names;
}

CommandResult run_command(const CommandRequest& request) {
    CommandResult result;
    std::ostringstream text;
    auto started = std::chrono::steady_clock::now();
    result.report["command"] = request.name;
    try {
        if (request.name == "betti")
            cmd_betti(request, result.report, text);
        else if (request.name == "quasilinear")
            cmd_quasilinear(request, result.report, text);
        else if (request.name == "linquot")
            cmd_linquot(request, result.report, text);
        else if (request.name == "critical")
            cmd_critical(request, result.report, text);
        else if (request.name == "stronglin")
            cmd_stronglin(request, result.report, text);
        else if (request.name == "extend")
            cmd_extend(request, result.report, text);
        else if (request.name == "stable-chain")
            cmd_stable_chain(request, result.report, text);
        else if (request.name == "clutter")
            cmd_clutter(request, result.report, text);
        else if (request.name == "complex")
            cmd_complex(request, result.report, text);
        else if (request.name == "explore")
            cmd_explore(request, result.report, text);
        else
            throw parse_error("unknown command: " + request.name, 1, 1);
        result.exit_code = 0;
    } catch (const resource_error& e) {
        result.exit_code = 3;
        result.report["error"] = e.what();
        text << "resource cap exceeded: " << e.what() << "\n";
    } catch (const parse_error& e) {
        result.exit_code = 2;
        result.report["error"] = e.what();
        text << "input error: " << e.what() << "\n";
    } catch (const dimension_error& e) {
        result.exit_code = 2;
        result.report["error"] = e.what();
        text << "input error: " << e.what() << "\n";
    } catch (const domain_error& e) {
        result.exit_code = 2;
        result.report["error"] = e.what();
        text << "input error: " << e.what() << "\n";
    } catch (const json::exception& e) {
        result.exit_code = 2;
        result.report["error"] = e.what();
        text << "input error: " << e.what() << "\n";
    }
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    result.report["wall_ms"] = wall_ms;
    result.text = text.str();
    return result;
}

} // namespace monolin
