#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bhepn/classify.hpp"
#include "bhepn/epn.hpp"
#include "bhepn/hubbard.hpp"
#include "bhepn/io.hpp"
#include "bhepn/verify.hpp"

namespace bhepn::cli {

namespace {

struct CommonOptions {
    std::string config_text;  // file path or inline JSON
    int bare_n = 0;
    std::string format;
    std::string out_path;
    double gamma = 0.0;
    std::string gamma_range;
    bool force = false;
};

// --config accepts either a path or inline JSON; anything that parses as JSON
// (object or bare integer) is taken inline.
ModelConfig load_config(const CommonOptions& opts) {
    if (opts.bare_n != 0) {
        return ModelConfig::single_block(opts.bare_n);
    }
    if (opts.config_text.empty()) {
        throw ConfigError("no model given: pass --config <file|inline-json> or --n <int>");
    }
    const std::string& text = opts.config_text;
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos &&
        (text[first] == '{' || std::isdigit(static_cast<unsigned char>(text[first])))) {
        return io::config_from_json_text(text);
    }
    std::ifstream file(text);
    if (!file) {
        throw ConfigError("cannot open config file: " + text);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return io::config_from_json_text(buffer.str());
}

io::SweepRequest parse_gamma_range(const ModelConfig& config, const std::string& spec) {
    io::SweepRequest request;
    request.config = config;
    const size_t c1 = spec.find(':');
    const size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ConfigError("--gamma-range must look like <min>:<max>:<steps>, got \"" + spec +
                          "\"");
    }
    try {
        request.gamma_min = std::stod(spec.substr(0, c1));
        request.gamma_max = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        request.steps = std::stoi(spec.substr(c2 + 1));
    } catch (const std::exception&) {
        throw ConfigError("--gamma-range must look like <min>:<max>:<steps>, got \"" + spec +
                          "\"");
    }
    request.validate();
    return request;
}

int emit(const std::string& payload, const CommonOptions& opts, std::ostream& out,
         std::ostream& err) {
    if (opts.out_path.empty()) {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write to " << opts.out_path << "\n";
        return kExitValidation;
    }
    file << payload;
    return kExitOk;
}

int cmd_build(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const ModelConfig config = load_config(opts);
    const hubbard::DirectSumResult result =
        hubbard::build_direct_sum(config, opts.gamma, opts.force);
    const std::string payload = opts.format == "csv"
                                    ? io::build_dump_csv(config, opts.gamma, result)
                                    : io::build_dump_json(config, opts.gamma, result);
    return emit(payload, opts, out, err);
}

int cmd_sweep(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const ModelConfig config = load_config(opts);
    const io::SweepRequest request = parse_gamma_range(config, opts.gamma_range);
    return emit(io::sweep_csv(request), opts, out, err);
}

int cmd_enumerate(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.bare_n < 2) {
        throw ConfigError("enumerate needs --n <int> with n >= 2");
    }
    if (opts.bare_n > 20) {
        throw ConfigError("enumerate is limited to n <= 20");
    }
    std::string payload;
    if (opts.format == "json") {
        payload = io::enumerate_json(opts.bare_n);
    } else if (opts.format == "csv") {
        payload = io::enumerate_csv(opts.bare_n);
    } else {
        payload = io::enumerate_plain(opts.bare_n);
    }
    return emit(payload, opts, out, err);
}

int cmd_jordan(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const ModelConfig config = load_config(opts);
    const epn::JordanReport report = epn::transition_matrix(config);
    return emit(io::jordan_report_json(report), opts, out, err);
}

int cmd_verify(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const int n_max = opts.bare_n == 0 ? 12 : opts.bare_n;
    if (n_max > 20) {
        throw ConfigError("verify is limited to n <= 20");
    }
    const auto results = verify::run_verification(n_max);
    std::string payload;
    for (const auto& check : results) {
        payload += check.passed ? "PASS  " : "FAIL  ";
        payload += check.name + ": " + check.detail + "\n";
    }
    payload += verify::all_passed(results)
                   ? "all checks passed (N <= " + std::to_string(n_max) + ")\n"
                   : "verification FAILED\n";
    const int emit_code = emit(payload, opts, out, err);
    if (emit_code != kExitOk) return emit_code;
    return verify::all_passed(results) ? kExitOk : kExitNumerical;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"PT-symmetric Bose-Hubbard direct-sum toolkit"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto add_common = [&](CLI::App* cmd, bool with_model, bool with_gamma) {
        if (with_model) {
            cmd->add_option("--config", opts.config_text,
                            "model as a file path or inline JSON "
                            "{\"N\":..,\"partition\":[..],\"scales\":[..]}");
        }
        cmd->add_option("--n", opts.bare_n, "dimension N (K=1 block shorthand)");
        if (with_gamma) {
            cmd->add_option("--gamma", opts.gamma, "coupling parameter")->required();
        }
        cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    };

    CLI::App* build = app.add_subcommand("build", "construct a Hamiltonian and dump it");
    add_common(build, true, true);
    build->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");
    build->add_flag("--force", opts.force, "allow inadmissible configs (tagged in output)");

    CLI::App* sweep = app.add_subcommand("sweep", "spectral flow over a gamma grid (CSV)");
    add_common(sweep, true, false);
    sweep->add_option("--gamma-range", opts.gamma_range, "<min>:<max>:<steps>, inclusive")
        ->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list admissible models at N");
    add_common(enumerate, false, false);
    enumerate->add_option("--format", opts.format, "json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->default_val("plain");

    CLI::App* jordan = app.add_subcommand("jordan", "EPN Jordan analysis of a model");
    add_common(jordan, true, false);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-validation suite");
    add_common(verify_cmd, false, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (build->parsed()) return cmd_build(opts, out, err);
        if (sweep->parsed()) return cmd_sweep(opts, out, err);
        if (enumerate->parsed()) return cmd_enumerate(opts, out, err);
        if (jordan->parsed()) return cmd_jordan(opts, out, err);
        if (verify_cmd->parsed()) return cmd_verify(opts, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ConvergenceError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitValidation;
}

}  // namespace bhepn::cli
