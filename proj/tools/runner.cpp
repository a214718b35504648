#include <map>
#include <sstream>

#include "cli.hpp"

namespace cogmap::cli {
namespace {

std::string bits(const StateVector& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out += s.value(i) ? '1' : '0';
    return out;
}

std::string terms(const LinguisticState& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s.term(i);
    }
    return out;
}

template <class State, class Render>
std::string pattern_string(const BasicHiddenPattern<State>& p, Render render) {
    if (p.kind == PatternKind::fixed_point) return render(p.states.front());
    std::string out = "cycle[" + std::to_string(p.period()) + "]=";
    for (std::size_t i = 0; i < p.states.size(); ++i) {
        if (i) out += '|';
        out += render(p.states[i]);
    }
    return out;
}

template <class State, class Render>
std::string pair_string(const BasicHiddenPair<State>& p, Render render) {
    return "domain=" + pattern_string(p.domain_pattern, render) +
           ";range=" + pattern_string(p.range_pattern, render);
}

template <class State>
const char* pair_kind_name(const BasicHiddenPair<State>& p) {
    return p.is_fixed_pair() ? "fixed_pair" : "limit_cycle_pair";
}

std::map<std::size_t, std::string> linguistic_assignments(const Scenario& scenario,
                                                          const std::string& qualifier) {
    std::map<std::size_t, std::string> out;
    for (const Scenario::Assignment& a : scenario.assignments) {
        if (a.qualifier == qualifier) out.emplace(a.index, a.term);
    }
    return out;
}

std::vector<std::size_t> crisp_indices(const Scenario& scenario, const std::string& qualifier) {
    std::vector<std::size_t> out;
    for (const Scenario::Assignment& a : scenario.assignments) {
        if (a.qualifier == qualifier) out.push_back(a.index);
    }
    return out;
}

void append_score_profile(RunReport& report, const FcmModel& model, const StateVector& seed,
                          std::size_t max_iters) {
    const ScoreProfile profile = score_profile(model, seed, max_iters);
    std::ostringstream score;
    score << "score\t";
    for (std::size_t i = 0; i < profile.raw_scores.size(); ++i) {
        if (i) score << ' ';
        score << profile.raw_scores.score(i);
    }
    score << "\tmax=" << model.space().label(profile.ranking.front());
    report.score_lines.push_back(score.str());
    std::ostringstream ranking;
    ranking << "ranking\t";
    for (std::size_t i = 0; i < profile.ranking.size(); ++i) {
        if (i) ranking << ' ';
        ranking << model.space().label(profile.ranking[i]);
    }
    report.score_lines.push_back(ranking.str());
}

RunReport run_fcm(const ModelDocument& doc, const Scenario& scenario, bool want_trace) {
    const FcmModel& model = doc.fcm();
    StateVector seed = StateVector::seed(model.space(), crisp_indices(scenario, ""));
    const std::size_t cap = scenario.max_iters.value_or(0);
    HiddenPattern p = hidden_pattern(model, seed, cap);

    RunReport report;
    report.pattern_kind = p.kind == PatternKind::fixed_point ? "fixed_point" : "limit_cycle";
    report.rendering = pattern_string(p, bits);
    report.iterations = p.iterations();
    if (model.matrix.kind() == MatrixKind::combined && p.kind == PatternKind::fixed_point) {
        append_score_profile(report, model, seed, cap);
    }
    if (want_trace) {
        for (std::size_t i = 0; i < p.trace.size(); ++i) {
            report.trace_lines.push_back("trace\t" + std::to_string(i) + "\t" + bits(p.trace[i]));
        }
    }
    return report;
}

RunReport run_frm(const ModelDocument& doc, const Scenario& scenario, bool want_trace) {
    const FrmModel& model = doc.frm();
    const bool domain_side = !crisp_indices(scenario, "frm.domain").empty();
    StateVector seed = domain_side
                           ? StateVector::seed(model.domain(), crisp_indices(scenario, "frm.domain"))
                           : StateVector::seed(model.range(), crisp_indices(scenario, "frm.range"));
    HiddenPair p = hidden_pair(model, seed, scenario.max_iters.value_or(0));

    RunReport report;
    report.pattern_kind = pair_kind_name(p);
    report.rendering = pair_string(p, bits);
    report.iterations = p.iterations();
    if (want_trace) {
        for (std::size_t i = 0; i < p.domain_pattern.trace.size(); ++i) {
            report.trace_lines.push_back("trace\t" + std::to_string(i) + "\tdomain=" +
                                         bits(p.domain_pattern.trace[i]) + ";range=" +
                                         bits(p.range_pattern.trace[i]));
        }
    }
    return report;
}

RunReport run_fcrm(const ModelDocument& doc, const Scenario& scenario, bool want_trace) {
    const FcrmBimodel& model = doc.fcrm();
    const std::vector<std::size_t> fcm_on = crisp_indices(scenario, "fcm");
    const std::vector<std::size_t> dom_on = crisp_indices(scenario, "frm.domain");
    const std::vector<std::size_t> rng_on = crisp_indices(scenario, "frm.range");
    const Side side = rng_on.empty() ? Side::domain : Side::range;
    StateBivector seed{
        StateVector::seed(model.first.space(), fcm_on),
        side == Side::domain ? StateVector::seed(model.second.domain(), dom_on)
                             : StateVector::seed(model.second.range(), rng_on),
        side};
    BihiddenPattern p = bihidden_pattern(model, seed, scenario.max_iters.value_or(0));

    RunReport report;
    report.pattern_kind =
        p.kind == BiPatternKind::fixed_bipoint ? "fixed_bipoint" : "limit_bicycle";
    report.rendering = "fcm=" + pattern_string(p.first, bits) + ";" +
                       pair_string(p.second, bits);
    report.iterations = std::max(p.first.iterations(), p.second.iterations());
    if (want_trace) {
        for (std::size_t i = 0; i < p.steps.size(); ++i) {
            const auto& step = p.steps[i];
            report.trace_lines.push_back("trace\t" + std::to_string(i) + "\tfcm=" +
                                         bits(step.fcm) + ";frm." +
                                         std::string(to_string(step.frm_side)) + "=" +
                                         bits(step.frm));
        }
    }
    return report;
}

RunReport run_flcm(const ModelDocument& doc, const Scenario& scenario, bool want_trace) {
    const FlcmModel& model = doc.flcm();
    LinguisticState seed = LinguisticState::seed(model.space(), model.chain(),
                                                 linguistic_assignments(scenario, ""));
    LinguisticHiddenPattern p = flcm_hidden_pattern(model, seed, scenario.operator_or_default(),
                                                    scenario.max_iters.value_or(0));

    RunReport report;
    report.pattern_kind = p.kind == PatternKind::fixed_point ? "fixed_point" : "limit_cycle";
    report.rendering = pattern_string(p, terms);
    report.iterations = p.iterations();
    if (want_trace) {
        for (std::size_t i = 0; i < p.trace.size(); ++i) {
            report.trace_lines.push_back("trace\t" + std::to_string(i) + "\t" + terms(p.trace[i]));
        }
    }
    return report;
}

RunReport run_flrm(const ModelDocument& doc, const Scenario& scenario, bool want_trace) {
    const FlrmModel& model = doc.flrm();
    const auto dom = linguistic_assignments(scenario, "frm.domain");
    const auto rng = linguistic_assignments(scenario, "frm.range");
    LinguisticState seed = dom.empty()
                               ? LinguisticState::seed(model.range(), model.chain(), rng)
                               : LinguisticState::seed(model.domain(), model.chain(), dom);
    LinguisticHiddenPair p = flrm_hidden_pair(model, seed, scenario.operator_or_default(),
                                              scenario.max_iters.value_or(0));

    RunReport report;
    report.pattern_kind = pair_kind_name(p);
    report.rendering = pair_string(p, terms);
    report.iterations = p.iterations();
    if (want_trace) {
        for (std::size_t i = 0; i < p.domain_pattern.trace.size(); ++i) {
            report.trace_lines.push_back("trace\t" + std::to_string(i) + "\tdomain=" +
                                         terms(p.domain_pattern.trace[i]) + ";range=" +
                                         terms(p.range_pattern.trace[i]));
        }
    }
    return report;
}

} // namespace

RunReport run_scenario(const ModelDocument& doc, const Scenario& scenario, bool want_trace) {
    RunReport report;
    switch (doc.kind) {
        case ModelKind::fcm: report = run_fcm(doc, scenario, want_trace); break;
        case ModelKind::frm: report = run_frm(doc, scenario, want_trace); break;
        case ModelKind::fcrm: report = run_fcrm(doc, scenario, want_trace); break;
        case ModelKind::flcm: report = run_flcm(doc, scenario, want_trace); break;
        case ModelKind::flrm: report = run_flrm(doc, scenario, want_trace); break;
    }
    report.name = scenario.name;
    report.model_kind = doc.kind;
    return report;
}

std::vector<RunReport> run_sweep(const ModelDocument& doc, const std::string& value,
                                 bool want_trace) {
    const bool linguistic = doc.kind == ModelKind::flcm || doc.kind == ModelKind::flrm;
    if (linguistic && value.empty()) {
        throw UsageError("linguistic sweeps need --value TERM");
    }

    // (qualifier, label) pairs in declaration order.
    std::vector<std::pair<std::string, std::string>> seeds;
    switch (doc.kind) {
        case ModelKind::fcm:
            for (const auto& l : doc.fcm().space().labels()) seeds.emplace_back("", l);
            break;
        case ModelKind::flcm:
            for (const auto& l : doc.flcm().space().labels()) seeds.emplace_back("", l);
            break;
        case ModelKind::frm:
            for (const auto& l : doc.frm().domain().labels()) seeds.emplace_back("frm.domain", l);
            for (const auto& l : doc.frm().range().labels()) seeds.emplace_back("frm.range", l);
            break;
        case ModelKind::flrm:
            for (const auto& l : doc.flrm().domain().labels()) seeds.emplace_back("frm.domain", l);
            for (const auto& l : doc.flrm().range().labels()) seeds.emplace_back("frm.range", l);
            break;
        case ModelKind::fcrm:
            for (const auto& l : doc.fcrm().first.space().labels()) seeds.emplace_back("fcm", l);
            for (const auto& l : doc.fcrm().second.domain().labels())
                seeds.emplace_back("frm.domain", l);
            for (const auto& l : doc.fcrm().second.range().labels())
                seeds.emplace_back("frm.range", l);
            break;
    }

    std::vector<RunReport> reports;
    reports.reserve(seeds.size());
    for (const auto& [qualifier, label] : seeds) {
        Scenario scenario;
        const std::string shown = qualifier.empty() ? label : qualifier + ":" + label;
        scenario.name = shown;
        std::size_t index = 0;
        switch (doc.kind) {
            case ModelKind::fcm: index = doc.fcm().space().index(label); break;
            case ModelKind::flcm: index = doc.flcm().space().index(label); break;
            case ModelKind::frm:
                index = qualifier == "frm.domain" ? doc.frm().domain().index(label)
                                                  : doc.frm().range().index(label);
                break;
            case ModelKind::flrm:
                index = qualifier == "frm.domain" ? doc.flrm().domain().index(label)
                                                  : doc.flrm().range().index(label);
                break;
            case ModelKind::fcrm:
                index = qualifier == "fcm" ? doc.fcrm().first.space().index(label)
                        : qualifier == "frm.domain" ? doc.fcrm().second.domain().index(label)
                                                    : doc.fcrm().second.range().index(label);
                break;
        }
        scenario.assignments.push_back(
            Scenario::Assignment{qualifier, label, linguistic ? value : "", index});
        // For the two-space kinds the bare label is unambiguous; show it plain.
        if (doc.kind == ModelKind::frm || doc.kind == ModelKind::flrm) {
            scenario.name = label;
        }
        RunReport report = run_scenario(doc, scenario, want_trace);
        report.name = scenario.name;
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace cogmap::cli
