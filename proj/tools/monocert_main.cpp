#include <CLI11.hpp>

#include <iostream>

#include "monocert/scenarios.hpp"

int main(int argc, char** argv) {
    CLI::App app{"monocert - exact certification runner for pathological "
                 "monotone-operator constructions on sequence spaces"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "List the scenario catalogue");
    bool list_json = false;
    list_cmd->add_flag("--json", list_json, "machine-readable listing");

    auto* run_cmd = app.add_subcommand("run", "Run a certification scenario");
    std::string config_path, scenario, alpha_text, tol_text, format, out_path;
    int trunc = -1;
    std::uint64_t seed = 0;
    bool have_seed = false;
    run_cmd->add_option("--config", config_path, "flat key = value config file");
    run_cmd->add_option("--scenario", scenario, "scenario name (see `list`)");
    run_cmd->add_option("--alpha", alpha_text, "\"e\" or \"prefix;tail\", e.g. \"2;1\"");
    run_cmd->add_option("--trunc", trunc, "truncation index bound, >= 2");
    run_cmd->add_option("--seed", seed, "seed for the deterministic generator")
        ->each([&](const std::string&) { have_seed = true; });
    run_cmd->add_option("--tol", tol_text, "tolerance \"p/q\" for float-fallback paths");
    run_cmd->add_option("--format", format, "json (default) or markdown");
    run_cmd->add_option("--out", out_path, "report file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list_cmd) {
            if (list_json) {
                std::cout << "[";
                bool first = true;
                for (const auto& s : monocert::list_scenarios()) {
                    std::cout << (first ? "" : ",") << "\n  {\"name\": \"" << s.name
                              << "\", \"anchor\": \"" << s.anchor << "\"}";
                    first = false;
                }
                std::cout << "\n]\n";
            } else {
                for (const auto& s : monocert::list_scenarios())
                    std::cout << s.name << "\n    " << s.anchor << "\n";
            }
            return 0;
        }

        monocert::ScenarioConfig cfg;
        if (!config_path.empty()) cfg = monocert::ScenarioConfig::from_file(config_path);
        if (!scenario.empty()) cfg.scenario = scenario;
        if (!alpha_text.empty()) cfg.alpha = monocert::AlphaSpec::parse(alpha_text);
        if (trunc >= 0) cfg.N = trunc;
        if (have_seed) cfg.seed = seed;
        if (!tol_text.empty()) cfg.tol = monocert::rat_parse(tol_text);
        if (!format.empty()) cfg.format = format;
        if (!out_path.empty()) cfg.out = out_path;
        if (cfg.scenario.empty()) {
            std::cerr << "error: no scenario given (use --scenario or a config file)\n";
            return 2;
        }

        monocert::CertReport rep = monocert::run_scenario(cfg);
        if (cfg.out.empty()) std::cout << monocert::render_report(rep, cfg.format);
        return rep.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
