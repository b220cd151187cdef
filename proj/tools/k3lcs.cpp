// Command-line front end: one JSON record per input line, one result per output line.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "k3lcs/cli.hpp"
#include "k3lcs/error.hpp"

int main(int argc, char** argv) {
    using namespace k3lcs;

    CLI::App app{"Exact computations for Type II boundary points of elliptic K3 period domains"};
    app.fallthrough();
    app.require_subcommand(1);

    cli::Options opt;
    std::string frame = "e8e8";
    std::string format = "json";
    std::string input = "-";

    app.add_option("--frame", frame, "Lattice frame")
        ->check(CLI::IsMember({"e8e8", "d16plus"}, CLI::ignore_case))
        ->envname("K3LCS_FRAME");
    app.add_option("--input", input, "Input file, or - for stdin")->envname("K3LCS_INPUT");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->envname("K3LCS_FORMAT");
    app.add_option("--box-bound", opt.box_bound, "Bound on |a_i|, |b_i| in the general root search")
        ->check(CLI::NonNegativeNumber)
        ->envname("K3LCS_BOX_BOUND");
    app.add_option("--c-norm-bound", opt.c_norm_bound, "Bound on -(c,c) in the general root search")
        ->check(CLI::NonNegativeNumber)
        ->envname("K3LCS_C_NORM_BOUND");
    app.add_option("--seed", opt.seed, "Seed for selftest sampling")->envname("K3LCS_SEED");

    const std::map<std::string, std::string> commands = {
        {"reduce-tau", "SL(2,Z) reduction of tau: {\"tau\"}"},
        {"coords", "All charts of a period point; optional y1/y2 basis and lemma test vector r"},
        {"lcs-test", "Large complex structure test on a period point"},
        {"act", "Apply a parabolic element (or \"h_block_swap\") given as \"g\" to a period point"},
        {"ade-type", "Root system, ADE decomposition and Kodaira candidates at a period point"},
        {"classify-v", "Type of V^perp/V for a primitive isotropic plane {\"basis\": [e1, e2]}"},
        {"fiber-scan", "Root system constancy along {\"tau\", \"z\", \"u_tilde_samples\"}"},
        {"selftest", "Run the built-in invariant suites"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->callback([&opt, name = name] { opt.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitValidation;
    }

    opt.frame = parse_frame_kind(frame);
    opt.format = format == "text" ? cli::Format::Text : cli::Format::Json;

    std::ios::sync_with_stdio(false);
    if (input == "-" || opt.command == "selftest") return cli::run(opt, std::cin, std::cout);
    std::ifstream file(input);
    if (!file) {
        std::cerr << "cannot open input file '" << input << "'\n";
        return cli::kExitRuntime;
    }
    return cli::run(opt, file, std::cout);
}
