#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "monolin/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"monolin: exact linearity toolkit for monomial ideals"};
    app.require_subcommand(1);

    monolin::CommandRequest request;
    for (const std::string& name : monolin::command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option_function<long>(
               "--field",
               [&request](const long& p) { request.fields.push_back(p); },
               "field characteristic (repeatable, default 32003)")
            ->trigger_on_parse();
        sub->add_flag("--json", request.json_output, "emit a JSON report");
        sub->add_option("--seed", request.seed, "random seed");
        sub->add_option("--samples", request.samples,
                        "explorer samples per kind");
        sub->add_option("--max-gens", request.max_gens,
                        "generator cap for the Betti engine and searches");
        sub->add_option("--timeout", request.timeout_seconds,
                        "soft per-task time budget in seconds");
        if (name == "stronglin" || name == "extend")
            sub->add_option("--monomial", request.monomial,
                            "monomial in x1^2*x3 syntax");
        if (name == "extend")
            sub->add_option_function<int>(
                   "--vars",
                   [&request](const int& v) {
                       request.variables.push_back(v);
                   },
                   "variable index for the set A (repeatable)")
                ->trigger_on_parse();
        if (name == "explore")
            sub->add_option("--out", request.findings_path,
                            "append findings to this JSON-lines file");
        if (name != "explore")
            sub->add_option("file", request.file, "input file");
        sub->callback([&request, name]() { request.name = name; });
    }

    CLI11_PARSE(app, argc, argv);

    monolin::CommandResult result = monolin::run_command(request);
    if (request.json_output)
        std::cout << result.report.dump(2) << std::endl;
    else
        std::cout << result.text;
    return result.exit_code;
}
