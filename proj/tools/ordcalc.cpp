// ordcalc: command-line calculator for ordinals, Euclidean integers and point-set numerosities.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ordcalc/cli.hpp>

namespace {

int emit(const ordcalc::cli::Output& out, bool json, const std::string& where) {
    if (out.exit_code != ordcalc::cli::kOk) {
        std::cerr << where << out.text << '\n';
        return out.exit_code;
    }
    if (json)
        std::cout << out.json.dump() << '\n';
    else
        std::cout << out.text << '\n';
    return 0;
}

int run_stream(std::istream& in, bool json, const ordcalc::Universe& u) {
    int first = 0;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        int code = emit(ordcalc::cli::run(line, u), json, "line " + std::to_string(n) + ": ");
        if (code != 0 && first == 0) first = code;
    }
    return first;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordcalc: ordinals, Euclidean integers and numerosities"};
    bool json = false;
    std::string script;
    unsigned long long budget = 0;
    std::vector<std::string> words;
    app.add_flag("--json", json, "Emit one JSON object per result");
    app.add_option("-f,--file", script, "Run the commands in a script file")->check(CLI::ExistingFile);
    app.add_option("--budget", budget, "Work budget in elementary steps (overrides ORDCALC_BUDGET)");
    app.add_option("command", words, "verb and arguments, e.g. cmp 2*P(w)-3 P(w)");
    app.allow_extras(false);
    app.positionals_at_end(true);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : ordcalc::cli::kSyntax;
    }

    ordcalc::Universe u = ordcalc::cli::universe_from_env();
    if (budget > 0) u.work_budget = budget;

    if (!script.empty()) {
        std::ifstream in(script);
        return run_stream(in, json, u);
    }
    if (words.empty()) return run_stream(std::cin, json, u);
    std::string line;
    for (const auto& w : words) line += (line.empty() ? "" : " ") + w;
    return emit(ordcalc::cli::run(line, u), json, "");
}
