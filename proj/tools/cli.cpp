#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace cogmap::cli {
namespace {

std::string slurp(const std::string& path) {
    // "fixture:<id>" loads a bundled matrix instead of a file.
    if (path.rfind("fixture:", 0) == 0) {
        return std::string(fixture_text(path.substr(8)));
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit_report(std::ostream& out, const RunReport& report, const std::string& format,
                 bool header) {
    if (format == "md") {
        if (header) {
            out << "| seed | kind | pattern | iters |\n";
            out << "|---|---|---|---|\n";
        }
        out << "| " << report.name << " | " << report.pattern_kind << " | "
            << report.rendering << " | " << report.iterations << " |\n";
    } else {
        out << report.name << '\t' << report.pattern_kind << '\t' << report.rendering
            << "\titers=" << report.iterations << '\n';
    }
    for (const std::string& line : report.score_lines) out << line << '\n';
    for (const std::string& line : report.trace_lines) out << line << '\n';
}

int cmd_run(const std::string& model_path, const std::string& scenario_path, bool want_trace,
            const std::string& format, std::ostream& out) {
    const ModelDocument doc = parse_model(slurp(model_path));
    const Scenario scenario = parse_scenario(slurp(scenario_path), doc);
    const RunReport report = run_scenario(doc, scenario, want_trace);
    emit_report(out, report, format, true);
    return exit_ok;
}

int cmd_sweep(const std::string& model_path, const std::string& value, bool want_trace,
              const std::string& format, std::ostream& out) {
    const ModelDocument doc = parse_model(slurp(model_path));
    const std::vector<RunReport> reports = run_sweep(doc, value, want_trace);
    bool first = true;
    for (const RunReport& report : reports) {
        emit_report(out, report, format, first);
        first = false;
    }
    return exit_ok;
}

int cmd_combine(const std::string& out_path, bool special,
                const std::vector<std::string>& inputs, std::ostream&) {
    std::vector<FcmModel> models;
    models.reserve(inputs.size());
    for (const std::string& path : inputs) {
        ModelDocument doc = parse_model(slurp(path));
        if (doc.kind != ModelKind::fcm) {
            throw StructuralError("'" + path + "' is a " + std::string(to_string(doc.kind)) +
                                  " model; combine expects FCM models");
        }
        if (!models.empty() && doc.fcm().matrix.kind() != models.front().matrix.kind()) {
            throw StructuralError("'" + path + "' has kind " +
                                  std::string(to_string(doc.fcm().matrix.kind())) +
                                  "; all inputs must share one kind");
        }
        models.push_back(doc.fcm());
    }
    const FcmModel combined = special ? special_fcm(models) : combine_fcms(models);
    const ModelDocument result{ModelKind::fcm, combined, ""};
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw StructuralError("cannot write '" + out_path + "'");
    file << serialize_model(result);
    return exit_ok;
}

int cmd_check(const std::string& model_path, std::ostream& out) {
    const ModelDocument doc = parse_model(slurp(model_path));
    out << "OK kind=" << to_string(doc.kind);
    switch (doc.kind) {
        case ModelKind::fcm:
            out << " n=" << doc.fcm().space().size();
            break;
        case ModelKind::flcm:
            out << " n=" << doc.flcm().space().size();
            break;
        case ModelKind::frm:
            out << " n=" << doc.frm().domain().size() << " m=" << doc.frm().range().size();
            break;
        case ModelKind::flrm:
            out << " n=" << doc.flrm().domain().size() << " m=" << doc.flrm().range().size();
            break;
        case ModelKind::fcrm:
            out << " n=" << doc.fcrm().first.space().size()
                << " p=" << doc.fcrm().second.domain().size()
                << " m=" << doc.fcrm().second.range().size();
            break;
    }
    out << '\n';
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hidden-pattern engines for cognitive and relational causal maps"};
    app.require_subcommand(1);

    std::string model_path;
    std::string scenario_path;
    std::string out_path;
    std::string value;
    std::string format = "tsv";
    bool want_trace = false;
    bool sum_flag = false;
    bool special_flag = false;
    std::vector<std::string> inputs;

    CLI::App* run = app.add_subcommand("run", "Evaluate one scenario against a model");
    run->add_option("--model", model_path, "Model file")->required();
    run->add_option("--scenario", scenario_path, "Scenario file")->required();
    run->add_flag("--trace", want_trace, "Emit every visited state");
    run->add_option("--format", format, "tsv (default) or md")
        ->check(CLI::IsMember({"tsv", "md"}));

    CLI::App* sweep = app.add_subcommand("sweep", "Seed every concept singly and report each run");
    sweep->add_option("--model", model_path, "Model file")->required();
    sweep->add_option("--value", value, "Seed term (linguistic models)");
    sweep->add_flag("--trace", want_trace, "Emit every visited state");
    sweep->add_option("--format", format, "tsv (default) or md")
        ->check(CLI::IsMember({"tsv", "md"}));

    CLI::App* combine = app.add_subcommand("combine", "Sum or majority-combine expert models");
    combine->add_option("--out", out_path, "Output model file")->required();
    combine->add_flag("--sum", sum_flag, "Entrywise sum (combined model)");
    combine->add_flag("--special", special_flag, "Majority at one half (positive models)");
    combine->add_option("files", inputs, "Input model files")->required();

    CLI::App* check = app.add_subcommand("check", "Parse and validate a model");
    check->add_option("--model", model_path, "Model file")->required();

    try {
        std::vector<std::string> mutable_args(args.rbegin(), args.rend()); // CLI11 pops from the back
        app.parse(std::move(mutable_args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (run->parsed()) return cmd_run(model_path, scenario_path, want_trace, format, out);
        if (sweep->parsed()) return cmd_sweep(model_path, value, want_trace, format, out);
        if (combine->parsed()) {
            if (sum_flag == special_flag) {
                err << "combine: exactly one of --sum or --special is required\n";
                return exit_usage;
            }
            return cmd_combine(out_path, special_flag, inputs, out);
        }
        if (check->parsed()) return cmd_check(model_path, out);
        err << "no command given\n";
        return exit_usage;
    } catch (const IterationCapError& e) {
        err << "error: " << e.what() << '\n';
        return exit_iteration_cap;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_data;
    }
}

} // namespace cogmap::cli
