#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "qpchar/cli.hpp"

// Thin argument-parsing wrapper: everything after flag parsing lives in the
// library's run_* functions. Exit codes: 0 success or verified equal, 1
// verification mismatch, 2 usage or configuration error.

namespace {

struct RawArgs {
    std::string family;
    int rank = 0;
    std::string level = "verma";
    int qmax = 0;
    std::string method;
    std::string method_a;
    std::string method_b;
    std::string format = "text";
    std::string output;
    bool specialize = false;
    int threads = 1;
};

void add_common(CLI::App* sub, RawArgs& raw, bool needs_level_qmax) {
    sub->add_option("--family", raw.family, "Algebra family: A, B, or C")->required();
    sub->add_option("--rank", raw.rank, "Number of simple roots")->required();
    if (needs_level_qmax) {
        sub->add_option("--level", raw.level, "Level k >= 1 or 'verma'")->required();
        sub->add_option("--qmax", raw.qmax, "Truncation order in q (>= 0)")->required();
    }
    sub->add_option("--format", raw.format, "Output format: json, csv, or text");
    sub->add_option("--output", raw.output, "Write to this file instead of stdout");
    sub->add_flag("--specialize-y", raw.specialize, "Substitute y_i = 1 after computing");
    sub->add_option("--threads", raw.threads,
                    "Worker count hint; output bytes do not depend on it");
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded dimensions of principal subspaces: series, identities, bases, roots"};
    app.require_subcommand(1);

    RawArgs raw;
    CLI::App* cmd_char =
        app.add_subcommand("char", "Compute a character series by one method");
    add_common(cmd_char, raw, true);
    cmd_char->add_option("--method", raw.method, "direct, fermionic, bosonic, or pbw")
        ->required();

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Compute a series two ways and compare exactly");
    add_common(cmd_verify, raw, true);
    cmd_verify->add_option("--method-a", raw.method_a, "First method")->required();
    cmd_verify->add_option("--method-b", raw.method_b, "Second method")->required();

    CLI::App* cmd_enum =
        app.add_subcommand("enum", "List admissible quasi-particle monomials");
    add_common(cmd_enum, raw, true);

    CLI::App* cmd_roots = app.add_subcommand("roots", "List positive roots");
    add_common(cmd_roots, raw, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the parser's message to stderr
        return 2;
    }

    qpchar::RunConfig cfg;
    if (cmd_char->parsed()) {
        cfg.command = qpchar::Command::character;
    } else if (cmd_verify->parsed()) {
        cfg.command = qpchar::Command::verify;
    } else if (cmd_enum->parsed()) {
        cfg.command = qpchar::Command::enumerate_basis;
    } else {
        cfg.command = qpchar::Command::roots;
    }

    const auto family = qpchar::parse_family(raw.family);
    if (!family) {
        return usage_error("unknown family: " + raw.family);
    }
    cfg.family = *family;
    cfg.rank = raw.rank;

    if (cfg.command != qpchar::Command::roots) {
        const auto level = qpchar::parse_level(raw.level);
        if (!level) {
            return usage_error("level must be a positive integer or 'verma': " + raw.level);
        }
        cfg.level = *level;
        cfg.qmax = raw.qmax;
    }

    const auto format = qpchar::parse_format(raw.format);
    if (!format) {
        return usage_error("unknown format: " + raw.format);
    }
    cfg.format = *format;

    if (cmd_char->parsed()) {
        cfg.method = qpchar::parse_method(raw.method);
        if (!cfg.method) {
            return usage_error("unknown method: " + raw.method);
        }
    }
    if (cmd_verify->parsed()) {
        cfg.method_a = qpchar::parse_method(raw.method_a);
        cfg.method_b = qpchar::parse_method(raw.method_b);
        if (!cfg.method_a) {
            return usage_error("unknown method: " + raw.method_a);
        }
        if (!cfg.method_b) {
            return usage_error("unknown method: " + raw.method_b);
        }
    }

    if (!raw.output.empty()) {
        cfg.output_path = raw.output;
    }
    cfg.specialize = raw.specialize;
    cfg.threads = raw.threads;

    return qpchar::run_command(cfg, std::cout, std::cerr);
}
