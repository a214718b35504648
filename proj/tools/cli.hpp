#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cogmap/modelio.hpp"

namespace cogmap::cli {

// Exit codes. Reports go to `out`; diagnostics go to `err`, never to `out`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;
inline constexpr int exit_iteration_cap = 70;

/// One evaluated seed: the record line plus optional score and trace blocks.
struct RunReport {
    std::string name;
    ModelKind model_kind;
    std::string pattern_kind;
    std::string rendering; // loss-free: states are reconstructible from it
    std::size_t iterations = 0;
    std::vector<std::string> score_lines;
    std::vector<std::string> trace_lines;
};

RunReport run_scenario(const ModelDocument& doc, const Scenario& scenario, bool want_trace);

/// One report per concept, seeded singly, in declaration order. Linguistic
/// models require the seed term.
std::vector<RunReport> run_sweep(const ModelDocument& doc, const std::string& value,
                                 bool want_trace);

/// Entry point behind main(); `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cogmap::cli
