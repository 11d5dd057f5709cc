#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cissa/errors.hpp"
#include "cissa/io.hpp"
#include "cissa/version.hpp"

namespace cissa {

namespace {

struct DecomposeArgs {
    std::string input;
    std::string format = "auto";
    int column = 1;
    bool log_transform = false;
    long long window = 0;
    std::string extension = "ar";
    int ar_order = 0; // 0 = use the default order
    std::string out;
};

struct GroupArgs {
    std::string decomposition;
    std::string spec;
    std::string out;
};

void add_decompose_options(CLI::App* cmd, DecomposeArgs& args) {
    cmd->add_option("--input", args.input, "Input file (CSV or PCM16 mono WAV)")
        ->required();
    cmd->add_option("--format", args.format, "Input format (default: by extension)")
        ->check(CLI::IsMember({"auto", "csv", "wav"}));
    cmd->add_option("--column", args.column, "1-based CSV column (default 1)");
    cmd->add_flag("--log", args.log_transform, "Apply a natural log to the input");
    cmd->add_option("-L,--window", args.window, "Window length, 1 < L < T/2")
        ->required();
    cmd->add_option("--extension", args.extension,
                    "Boundary extension: ar|mirror|none (default ar)")
        ->check(CLI::IsMember({"ar", "mirror", "none"}));
    cmd->add_option("--ar-order", args.ar_order,
                    "AR order for the ar extension (default floor(T/3))");
    cmd->add_option("--out", args.out, "Output directory")->required();
}

InputSpec input_spec_from(const DecomposeArgs& args) {
    InputSpec spec;
    spec.path = args.input;
    if (args.format == "csv") {
        spec.format = InputFormat::Csv;
    } else if (args.format == "wav") {
        spec.format = InputFormat::Wav;
    }
    spec.column = args.column;
    spec.log_transform = args.log_transform;
    return spec;
}

RunConfig run_config_from(const DecomposeArgs& args, const std::string& spec) {
    RunConfig config;
    config.L = args.window;
    if (args.extension == "mirror") {
        config.extension = ExtensionMode::mirror();
    } else if (args.extension == "none") {
        config.extension = ExtensionMode::none();
    } else {
        std::optional<int> order;
        if (args.ar_order > 0) {
            order = args.ar_order;
        }
        config.extension = ExtensionMode::ar(order);
    }
    if (!spec.empty()) {
        config.group_spec = spec;
    }
    config.output_dir = args.out;
    return config;
}

Decomposition run_decompose(const InputSpec& input, const RunConfig& config) {
    const TimeSeries ts = read_series(input);
    Decomposition dec = cissa(ts.values, config.L, config.extension);

    Eigen::Index negatives = 0;
    for (Eigen::Index i = 0; i < dec.psd.window(); ++i) {
        if (dec.psd.lambda[i] < 0.0) {
            ++negatives;
        }
    }
    if (negatives > 0) {
        std::cerr << "warning: " << negatives
                  << " psd estimates are negative (lag-window estimator); "
                     "reported as-is\n";
    }

    write_decomposition(dec, config.output_dir);
    return dec;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Circulant singular spectrum analysis: exact decomposition of a "
                 "series into components by frequency, plus signal grouping"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    DecomposeArgs dec_args;
    auto* dec_cmd = app.add_subcommand(
        "decompose", "Decompose a series and write components.csv/psd.csv/meta.json");
    add_decompose_options(dec_cmd, dec_args);

    GroupArgs grp_args;
    auto* grp_cmd = app.add_subcommand(
        "group", "Group a stored decomposition and write groups.csv/shares.csv/kg.json");
    grp_cmd->add_option("--decomposition", grp_args.decomposition,
                        "Directory written by 'decompose'")
        ->required();
    grp_cmd->add_option("--spec", grp_args.spec,
                        "economic:12 | manual:@groups.json | share:0.80 | percentile:0.95")
        ->required();
    grp_cmd->add_option("--out", grp_args.out, "Output directory")->required();

    DecomposeArgs run_args;
    std::string run_spec;
    auto* run_cmd = app.add_subcommand("run", "Decompose and group in one pass");
    add_decompose_options(run_cmd, run_args);
    run_cmd->add_option("--spec", run_spec,
                        "economic:12 | manual:@groups.json | share:0.80 | percentile:0.95")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[ARG] " << e.what() << "\n";
        std::cerr << app.help() << std::flush;
        return 2;
    }

    try {
        if (dec_cmd->parsed()) {
            run_decompose(input_spec_from(dec_args), run_config_from(dec_args, ""));
        } else if (grp_cmd->parsed()) {
            const Decomposition dec = read_decomposition(grp_args.decomposition);
            const GroupingResult gr = group(dec, parse_group_spec(grp_args.spec));
            write_grouping(gr, grp_args.out);
        } else if (run_cmd->parsed()) {
            const RunConfig config = run_config_from(run_args, run_spec);
            const GroupingSpec spec = parse_group_spec(*config.group_spec); // fail fast
            const Decomposition dec = run_decompose(input_spec_from(run_args), config);
            write_grouping(group(dec, spec), config.output_dir);
        }
        return 0;
    } catch (const ParameterError& e) {
        std::cerr << "error[ARG] " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error[PARSE] " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "error[NUM] " << e.what() << "\n";
        return 4;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error[PARSE] " << e.what() << "\n";
        return 3;
    }
}

} // namespace cissa
