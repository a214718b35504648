#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cogmap/fcrm.hpp"
#include "cogmap/linguistic.hpp"

namespace cogmap {

enum class ModelKind { fcm, frm, fcrm, flcm, flrm };

std::string_view to_string(ModelKind kind);

/// A parsed, fully validated model of any of the five kinds.
///
/// Text format (UTF-8, line oriented, `#` starts a comment, blank lines
/// ignored):
///
///   MODEL FCM|FRM|FCRM|FLCM|FLRM
///   KIND simple|positive|combined      (optional; inferred from entries)
///   ALLOW_DIAGONAL                     (optional, crisp square models)
///   CHAIN 0 < t1 < ... < tk            (FLCM/FLRM, before CONCEPTS/DOMAIN)
///   CONCEPTS l1 ... ln                 (FCM/FLCM)
///   DOMAIN d1 ... dn                   (FRM/FLRM)
///   RANGE r1 ... rm                    (FRM/FLRM)
///   ROW li: e1 ... en                  (one per row label, any order)
///
/// FCRM wraps two blocks:
///
///   MODEL FCRM
///   BEGIN FCM ... END
///   BEGIN FRM ... END
///   IDENTIFY                           (optional)
struct ModelDocument {
    ModelKind kind;
    std::variant<FcmModel, FrmModel, FcrmBimodel, FlcmModel, FlrmModel> model;
    std::string note; // leading comment block, kept for provenance

    const FcmModel& fcm() const { return std::get<FcmModel>(model); }
    const FrmModel& frm() const { return std::get<FrmModel>(model); }
    const FcrmBimodel& fcrm() const { return std::get<FcrmBimodel>(model); }
    const FlcmModel& flcm() const { return std::get<FlcmModel>(model); }
    const FlrmModel& flrm() const { return std::get<FlrmModel>(model); }

    bool structurally_equal(const ModelDocument& other) const;
};

/// Parses and validates a model document. Diagnostics carry line and column.
ModelDocument parse_model(std::string_view text);

/// Canonical text: fixed directive order, single spaces, rows in concept
/// order, comments dropped. parse(serialize(m)) is structurally equal to m.
std::string serialize_model(const ModelDocument& doc);

/// A named what-if seed for one model:
///
///   SCENARIO name
///   ON label              (crisp kinds; FCRM labels carry fcm: /
///                          frm.domain: / frm.range: prefixes)
///   SET label=term        (linguistic kinds)
///   OPERATOR max-min|min-min|max-max|min-max   (linguistic, default max-min)
///   MAXITERS k
struct Scenario {
    struct Assignment {
        std::string qualifier; // "", "fcm", "frm.domain", "frm.range"
        std::string label;
        std::string term;  // empty for crisp seeds
        std::size_t index; // resolved position in its space
    };

    std::string name;
    std::vector<Assignment> assignments;
    std::optional<CompositionOperator> op;
    std::optional<std::size_t> max_iters;

    CompositionOperator operator_or_default() const {
        return op.value_or(CompositionOperator::max_min());
    }
};

/// Parses a scenario and validates every label and term against `model`.
Scenario parse_scenario(std::string_view text, const ModelDocument& model);

/// Bundled reference matrices. Unknown ids raise UnknownFixtureError.
ModelDocument load_fixture(std::string_view id);

/// Raw fixture text, exactly as bundled.
std::string_view fixture_text(std::string_view id);

std::vector<std::string_view> fixture_ids();

} // namespace cogmap
