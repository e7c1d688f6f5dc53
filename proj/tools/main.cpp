#include "CLI11.hpp"
#include "commands.hpp"
#include "dsp/version.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Deligne-Simpson verdicts and spectral-curve witnesses"};
    app.set_version_flag("--version", dsp::kVersion);
    app.require_subcommand(1);

    dsp::cli::RunConfig cfg;
    int genus = -1;
    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* opt = sub->add_option("input", cfg.input, "JSON file, inline JSON object, or - for stdin");
        if (needs_input) opt->required();
        sub->add_option("--seed", cfg.seed, "seed for the random free values")->default_val(0);
        sub->add_option("--retries", cfg.retries, "re-seeded attempts after the first")->default_val(8);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->default_val("json");
        sub->add_option("--genus", genus, "override the genus given in the input");
    };
    add_common(app.add_subcommand("verdict", "criterion verdict for a list of conjugacy classes"), true);
    add_common(app.add_subcommand("witness", "construct and verify a spectral-curve witness"), true);
    add_common(app.add_subcommand("dimensions", "OK rows and expected vs computed dimension"), true);
    add_common(app.add_subcommand("sweep", "OK condition against the Simpson criterion, all tuples"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (genus >= 0) cfg.genus = genus;

    dsp::cli::CommandResult res = dsp::cli::run(cfg);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
