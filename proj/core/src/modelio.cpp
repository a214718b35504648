#include "cogmap/modelio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace cogmap {
namespace {

struct Token {
    std::string text;
    std::size_t column = 1; // 1-based
};

struct Line {
    std::size_t number = 1; // 1-based
    std::vector<Token> tokens;

    const std::string& directive() const { return tokens.front().text; }
};

// Comment-stripped, tokenized significant lines.
std::vector<Line> scan(std::string_view text) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        Line out;
        out.number = line_no;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            out.tokens.push_back(Token{std::string(line.substr(i, j - i)), i + 1});
            i = j;
        }
        if (!out.tokens.empty()) lines.push_back(std::move(out));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& msg) {
    throw ParseError(line.number, column, msg);
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
    fail(line, line.tokens.front().column, msg);
}

std::int64_t parse_int(const Line& line, const Token& tok) {
    std::int64_t value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        fail(line, tok.column, "entry '" + tok.text + "' is not an integer in range");
    }
    return value;
}

std::vector<std::string> tail_labels(const Line& line) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) labels.push_back(line.tokens[i].text);
    if (labels.empty()) fail(line, line.directive() + " needs at least one label");
    return labels;
}

ConceptSpace make_space(const Line& line, std::vector<std::string> labels) {
    try {
        return ConceptSpace(std::move(labels));
    } catch (const StructuralError& e) {
        fail(line, e.what());
    }
}

// ROW <label>: entries...  The colon may be glued to the label.
struct RowHead {
    std::string label;
    std::size_t first_entry; // token index
};

RowHead parse_row_head(const Line& line) {
    if (line.tokens.size() < 2) fail(line, "ROW needs a label and entries");
    std::string label = line.tokens[1].text;
    std::size_t first = 2;
    if (label.size() > 1 && label.back() == ':') {
        label.pop_back();
    } else {
        if (line.tokens.size() < 3 || line.tokens[2].text != ":") {
            fail(line, line.tokens[1].column, "expected ':' after row label");
        }
        first = 3;
    }
    return RowHead{std::move(label), first};
}

struct RowTable {
    std::map<std::string, std::vector<Token>> rows;
    std::map<std::string, Line> row_lines;
};

void add_row(RowTable& table, const Line& line, const ConceptSpace& space,
             std::size_t expected_entries) {
    const RowHead head = parse_row_head(line);
    if (!space.find(head.label)) {
        fail(line, line.tokens[1].column, "row label '" + head.label + "' is not a declared concept");
    }
    if (table.rows.count(head.label)) {
        fail(line, line.tokens[1].column, "duplicate row for '" + head.label + "'");
    }
    const std::size_t given = line.tokens.size() - head.first_entry;
    if (given != expected_entries) {
        fail(line, "row '" + head.label + "' has " + std::to_string(given) +
                       " entries, expected " + std::to_string(expected_entries));
    }
    std::vector<Token> entries(line.tokens.begin() + static_cast<std::ptrdiff_t>(head.first_entry),
                               line.tokens.end());
    table.rows.emplace(head.label, std::move(entries));
    table.row_lines.emplace(head.label, line);
}

void require_complete(const RowTable& table, const Line& anchor, const ConceptSpace& space) {
    for (const std::string& l : space.labels()) {
        if (!table.rows.count(l)) fail(anchor, "no ROW for concept '" + l + "'");
    }
}

std::optional<MatrixKind> parse_kind_word(const std::string& word) {
    if (word == "simple") return MatrixKind::simple;
    if (word == "positive") return MatrixKind::positive;
    if (word == "combined") return MatrixKind::combined;
    return std::nullopt;
}

MatrixKind infer_square_kind(const std::vector<std::int64_t>& entries) {
    bool positive = true;
    bool simple = true;
    for (std::int64_t v : entries) {
        if (v < 0 || v > 1) positive = false;
        if (v < -1 || v > 1) simple = false;
    }
    if (positive) return MatrixKind::positive;
    if (simple) return MatrixKind::simple;
    return MatrixKind::combined;
}

LinguisticChain parse_chain(const Line& line) {
    // CHAIN t0 < t1 < ... < tk
    std::vector<std::string> terms;
    bool expect_term = true;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const Token& tok = line.tokens[i];
        if (expect_term) {
            if (tok.text == "<") fail(line, tok.column, "expected a term, found '<'");
            terms.push_back(tok.text);
        } else if (tok.text != "<") {
            fail(line, tok.column, "expected '<' between chain terms");
        }
        expect_term = !expect_term;
    }
    if (terms.empty()) fail(line, "CHAIN needs at least the bottom term \"0\"");
    if (expect_term) fail(line, "CHAIN ends with a dangling '<'");
    try {
        return LinguisticChain(std::move(terms));
    } catch (const StructuralError& e) {
        fail(line, e.what());
    }
}

// ---------------------------------------------------------------------------
// Block parsers. `lines` is the full document; `i` advances past what each
// parser consumes.
// ---------------------------------------------------------------------------

struct SquareBlock {
    ConnectionMatrix matrix;
};

// Parses CONCEPTS/ROW (and KIND/ALLOW_DIAGONAL) until `stop` or end of input.
SquareBlock parse_square_block(const std::vector<Line>& lines, std::size_t& i,
                               const std::string& stop) {
    std::optional<ConceptSpace> space;
    std::optional<Line> concepts_line;
    std::optional<MatrixKind> declared_kind;
    bool allow_diagonal = false;
    RowTable table;

    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& d = line.directive();
        if (!stop.empty() && d == stop) break;
        if (d == "KIND") {
            if (line.tokens.size() != 2) fail(line, "KIND needs one of simple|positive|combined");
            declared_kind = parse_kind_word(line.tokens[1].text);
            if (!declared_kind) fail(line, line.tokens[1].column, "unknown matrix kind '" + line.tokens[1].text + "'");
        } else if (d == "ALLOW_DIAGONAL") {
            allow_diagonal = true;
        } else if (d == "CONCEPTS") {
            if (space) fail(line, "duplicate CONCEPTS directive");
            space = make_space(line, tail_labels(line));
            concepts_line = line;
        } else if (d == "ROW") {
            if (!space) fail(line, "ROW before CONCEPTS");
            add_row(table, line, *space, space->size());
        } else {
            fail(line, "unknown directive '" + d + "'");
        }
    }
    if (!space) {
        throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing CONCEPTS directive");
    }
    require_complete(table, *concepts_line, *space);

    const std::size_t n = space->size();
    std::vector<std::int64_t> entries(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& tokens = table.rows.at(space->label(r));
        const Line& row_line = table.row_lines.at(space->label(r));
        for (std::size_t c = 0; c < n; ++c) {
            entries[r * n + c] = parse_int(row_line, tokens[c]);
        }
    }
    const MatrixKind kind = declared_kind.value_or(infer_square_kind(entries));
    // Re-anchor construction failures (entry range, diagonal rule) on rows.
    for (std::size_t r = 0; r < n; ++r) {
        const Line& row_line = table.row_lines.at(space->label(r));
        try {
            std::vector<std::int64_t> probe(entries.begin() + static_cast<std::ptrdiff_t>(r * n),
                                            entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
            for (std::size_t c = 0; c < n; ++c) {
                if (kind == MatrixKind::simple && (probe[c] < -1 || probe[c] > 1)) {
                    throw StructuralError("entry " + std::to_string(probe[c]) +
                                          " is outside {-1, 0, 1}");
                }
                if (kind == MatrixKind::positive && (probe[c] < 0 || probe[c] > 1)) {
                    throw StructuralError("entry " + std::to_string(probe[c]) +
                                          " is outside {0, 1}");
                }
            }
            if (kind != MatrixKind::combined && !allow_diagonal && probe[r] != 0) {
                throw StructuralError("diagonal entry must be 0 for " +
                                      std::string(to_string(kind)) +
                                      " connection matrices (add ALLOW_DIAGONAL to permit)");
            }
        } catch (const StructuralError& e) {
            fail(row_line, e.what());
        }
    }
    return SquareBlock{ConnectionMatrix(*space, kind, std::move(entries), allow_diagonal)};
}

struct RectBlock {
    RelationalMatrix matrix;
};

RectBlock parse_rect_block(const std::vector<Line>& lines, std::size_t& i,
                           const std::string& stop) {
    std::optional<ConceptSpace> domain;
    std::optional<ConceptSpace> range;
    std::optional<Line> domain_line;
    std::optional<MatrixKind> declared_kind;
    RowTable table;

    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& d = line.directive();
        if (!stop.empty() && d == stop) break;
        if (d == "KIND") {
            if (line.tokens.size() != 2) fail(line, "KIND needs one of simple|combined");
            declared_kind = parse_kind_word(line.tokens[1].text);
            if (!declared_kind || *declared_kind == MatrixKind::positive) {
                fail(line, line.tokens[1].column, "relational matrices are simple or combined");
            }
        } else if (d == "DOMAIN") {
            if (domain) fail(line, "duplicate DOMAIN directive");
            domain = make_space(line, tail_labels(line));
            domain_line = line;
        } else if (d == "RANGE") {
            if (range) fail(line, "duplicate RANGE directive");
            range = make_space(line, tail_labels(line));
        } else if (d == "ROW") {
            if (!domain) fail(line, "ROW before DOMAIN");
            if (!range) fail(line, "ROW before RANGE");
            add_row(table, line, *domain, range->size());
        } else {
            fail(line, "unknown directive '" + d + "'");
        }
    }
    if (!domain) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing DOMAIN directive");
    if (!range) throw ParseError(lines.back().number, 1, "missing RANGE directive");
    require_complete(table, *domain_line, *domain);

    const std::size_t n = domain->size();
    const std::size_t m = range->size();
    std::vector<std::int64_t> entries(n * m, 0);
    bool simple = true;
    for (std::size_t r = 0; r < n; ++r) {
        const auto& tokens = table.rows.at(domain->label(r));
        const Line& row_line = table.row_lines.at(domain->label(r));
        for (std::size_t c = 0; c < m; ++c) {
            entries[r * m + c] = parse_int(row_line, tokens[c]);
            if (entries[r * m + c] < -1 || entries[r * m + c] > 1) simple = false;
        }
    }
    const MatrixKind kind = declared_kind.value_or(simple ? MatrixKind::simple
                                                          : MatrixKind::combined);
    try {
        return RectBlock{RelationalMatrix(*domain, *range, std::move(entries), kind)};
    } catch (const StructuralError& e) {
        fail(*domain_line, e.what());
    }
}

struct LinguisticSquareBlock {
    LinguisticMatrix matrix;
};

LinguisticSquareBlock parse_linguistic_square(const std::vector<Line>& lines, std::size_t& i) {
    std::optional<LinguisticChain> chain;
    std::optional<ConceptSpace> space;
    std::optional<Line> concepts_line;
    RowTable table;

    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& d = line.directive();
        if (d == "CHAIN") {
            if (chain) fail(line, "duplicate CHAIN directive");
            chain = parse_chain(line);
        } else if (d == "CONCEPTS") {
            if (!chain) fail(line, "missing CHAIN before CONCEPTS in a linguistic model");
            if (space) fail(line, "duplicate CONCEPTS directive");
            space = make_space(line, tail_labels(line));
            concepts_line = line;
        } else if (d == "ROW") {
            if (!space) fail(line, "ROW before CONCEPTS");
            add_row(table, line, *space, space->size());
        } else {
            fail(line, "unknown directive '" + d + "'");
        }
    }
    if (!chain) throw ParseError(lines.back().number, 1, "missing CHAIN directive");
    if (!space) throw ParseError(lines.back().number, 1, "missing CONCEPTS directive");
    require_complete(table, *concepts_line, *space);

    const std::size_t n = space->size();
    std::vector<std::size_t> entries(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& tokens = table.rows.at(space->label(r));
        const Line& row_line = table.row_lines.at(space->label(r));
        for (std::size_t c = 0; c < n; ++c) {
            if (!chain->contains(tokens[c].text)) {
                fail(row_line, tokens[c].column,
                     "term '" + tokens[c].text + "' is not in the chain");
            }
            entries[r * n + c] = chain->position(tokens[c].text);
        }
    }
    return LinguisticSquareBlock{LinguisticMatrix(*space, *space, *chain, std::move(entries))};
}

struct LinguisticRectBlock {
    LinguisticMatrix matrix;
};

LinguisticRectBlock parse_linguistic_rect(const std::vector<Line>& lines, std::size_t& i) {
    std::optional<LinguisticChain> chain;
    std::optional<ConceptSpace> domain;
    std::optional<ConceptSpace> range;
    std::optional<Line> domain_line;
    RowTable table;

    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& d = line.directive();
        if (d == "CHAIN") {
            if (chain) fail(line, "duplicate CHAIN directive");
            chain = parse_chain(line);
        } else if (d == "DOMAIN") {
            if (!chain) fail(line, "missing CHAIN before DOMAIN in a linguistic model");
            if (domain) fail(line, "duplicate DOMAIN directive");
            domain = make_space(line, tail_labels(line));
            domain_line = line;
        } else if (d == "RANGE") {
            if (range) fail(line, "duplicate RANGE directive");
            range = make_space(line, tail_labels(line));
        } else if (d == "ROW") {
            if (!domain) fail(line, "ROW before DOMAIN");
            if (!range) fail(line, "ROW before RANGE");
            add_row(table, line, *domain, range->size());
        } else {
            fail(line, "unknown directive '" + d + "'");
        }
    }
    if (!chain) throw ParseError(lines.back().number, 1, "missing CHAIN directive");
    if (!domain) throw ParseError(lines.back().number, 1, "missing DOMAIN directive");
    if (!range) throw ParseError(lines.back().number, 1, "missing RANGE directive");
    require_complete(table, *domain_line, *domain);

    const std::size_t n = domain->size();
    const std::size_t m = range->size();
    std::vector<std::size_t> entries(n * m, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& tokens = table.rows.at(domain->label(r));
        const Line& row_line = table.row_lines.at(domain->label(r));
        for (std::size_t c = 0; c < m; ++c) {
            if (!chain->contains(tokens[c].text)) {
                fail(row_line, tokens[c].column,
                     "term '" + tokens[c].text + "' is not in the chain");
            }
            entries[r * m + c] = chain->position(tokens[c].text);
        }
    }
    return LinguisticRectBlock{LinguisticMatrix(*domain, *range, *chain, std::move(entries))};
}

// Leading comment block of the original text, used as a provenance note.
std::string leading_note(std::string_view text) {
    std::string note;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) {
            // blank line inside the header comment: keep going
        } else if (line[i] == '#') {
            std::string_view body = line.substr(i + 1);
            while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            if (!note.empty()) note += '\n';
            note += std::string(body);
        } else {
            break;
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return note;
}

} // namespace

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::fcm: return "FCM";
        case ModelKind::frm: return "FRM";
        case ModelKind::fcrm: return "FCRM";
        case ModelKind::flcm: return "FLCM";
        case ModelKind::flrm: return "FLRM";
    }
    return "?";
}

bool ModelDocument::structurally_equal(const ModelDocument& other) const {
    return kind == other.kind && model == other.model;
}

ModelDocument parse_model(std::string_view text) {
    const std::vector<Line> lines = scan(text);
    if (lines.empty()) throw ParseError(1, 1, "empty model document");
    const Line& head = lines.front();
    if (head.directive() != "MODEL" || head.tokens.size() != 2) {
        fail(head, "document must start with 'MODEL FCM|FRM|FCRM|FLCM|FLRM'");
    }
    const std::string& kind_word = head.tokens[1].text;
    std::size_t i = 1;

    ModelDocument doc{ModelKind::fcm, FcmModel{ConnectionMatrix(
                          ConceptSpace({"x"}), MatrixKind::simple, {0})},
                      leading_note(text)};

    if (kind_word == "FCM") {
        SquareBlock block = parse_square_block(lines, i, "");
        doc.kind = ModelKind::fcm;
        doc.model = FcmModel{std::move(block.matrix)};
    } else if (kind_word == "FRM") {
        RectBlock block = parse_rect_block(lines, i, "");
        doc.kind = ModelKind::frm;
        doc.model = FrmModel{std::move(block.matrix)};
    } else if (kind_word == "FLCM") {
        LinguisticSquareBlock block = parse_linguistic_square(lines, i);
        doc.kind = ModelKind::flcm;
        doc.model = make_flcm(std::move(block.matrix));
    } else if (kind_word == "FLRM") {
        LinguisticRectBlock block = parse_linguistic_rect(lines, i);
        doc.kind = ModelKind::flrm;
        try {
            doc.model = make_flrm(std::move(block.matrix));
        } catch (const StructuralError& e) {
            fail(head, e.what());
        }
    } else if (kind_word == "FCRM") {
        std::optional<SquareBlock> fcm_block;
        std::optional<RectBlock> frm_block;
        bool identify = false;
        std::optional<Line> identify_line;
        while (i < lines.size()) {
            const Line& line = lines[i];
            const std::string& d = line.directive();
            if (d == "BEGIN") {
                if (line.tokens.size() != 2) fail(line, "BEGIN needs FCM or FRM");
                const std::string& what = line.tokens[1].text;
                ++i;
                if (what == "FCM") {
                    if (fcm_block) fail(line, "duplicate BEGIN FCM block");
                    fcm_block = parse_square_block(lines, i, "END");
                } else if (what == "FRM") {
                    if (frm_block) fail(line, "duplicate BEGIN FRM block");
                    frm_block = parse_rect_block(lines, i, "END");
                } else {
                    fail(line, line.tokens[1].column, "BEGIN needs FCM or FRM, got '" + what + "'");
                }
                if (i >= lines.size() || lines[i].directive() != "END") {
                    fail(line, "BEGIN " + what + " block is missing its END");
                }
                ++i; // consume END
            } else if (d == "IDENTIFY") {
                identify = true;
                identify_line = line;
                ++i;
            } else {
                fail(line, "unknown directive '" + d + "'");
            }
        }
        if (!fcm_block) throw ParseError(lines.back().number, 1, "FCRM is missing its BEGIN FCM block");
        if (!frm_block) throw ParseError(lines.back().number, 1, "FCRM is missing its BEGIN FRM block");
        try {
            doc.model = build_bimodel(FcmModel{std::move(fcm_block->matrix)},
                                      FrmModel{std::move(frm_block->matrix)}, identify);
        } catch (const StructuralError& e) {
            if (identify_line) fail(*identify_line, e.what());
            fail(head, e.what());
        }
        doc.kind = ModelKind::fcrm;
    } else {
        fail(head, head.tokens[1].column, "unknown model kind '" + kind_word + "'");
    }
    return doc;
}

namespace {

void write_labels(std::ostream& out, const char* directive,
                  const std::vector<std::string>& labels) {
    out << directive;
    for (const std::string& l : labels) out << ' ' << l;
    out << '\n';
}

void write_square(std::ostream& out, const ConnectionMatrix& m) {
    out << "KIND " << to_string(m.kind()) << '\n';
    if (m.allow_diagonal()) out << "ALLOW_DIAGONAL\n";
    write_labels(out, "CONCEPTS", m.space().labels());
    for (std::size_t r = 0; r < m.size(); ++r) {
        out << "ROW " << m.space().label(r) << ':';
        for (std::size_t c = 0; c < m.size(); ++c) out << ' ' << m.at(r, c);
        out << '\n';
    }
}

void write_rect(std::ostream& out, const RelationalMatrix& m) {
    out << "KIND " << to_string(m.kind()) << '\n';
    write_labels(out, "DOMAIN", m.domain().labels());
    write_labels(out, "RANGE", m.range().labels());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "ROW " << m.domain().label(r) << ':';
        for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << m.at(r, c);
        out << '\n';
    }
}

void write_chain(std::ostream& out, const LinguisticChain& chain) {
    out << "CHAIN";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out << " <";
        out << ' ' << chain.term(i);
    }
    out << '\n';
}

void write_linguistic(std::ostream& out, const LinguisticMatrix& m, bool rect) {
    write_chain(out, m.chain());
    if (rect) {
        write_labels(out, "DOMAIN", m.row_space().labels());
        write_labels(out, "RANGE", m.col_space().labels());
    } else {
        write_labels(out, "CONCEPTS", m.row_space().labels());
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "ROW " << m.row_space().label(r) << ':';
        for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << m.term_at(r, c);
        out << '\n';
    }
}

} // namespace

std::string serialize_model(const ModelDocument& doc) {
    std::ostringstream out;
    out << "MODEL " << to_string(doc.kind) << '\n';
    switch (doc.kind) {
        case ModelKind::fcm:
            write_square(out, doc.fcm().matrix);
            break;
        case ModelKind::frm:
            write_rect(out, doc.frm().matrix);
            break;
        case ModelKind::flcm:
            write_linguistic(out, doc.flcm().matrix, false);
            break;
        case ModelKind::flrm:
            write_linguistic(out, doc.flrm().matrix, true);
            break;
        case ModelKind::fcrm: {
            const FcrmBimodel& b = doc.fcrm();
            out << "BEGIN FCM\n";
            write_square(out, b.first.matrix);
            out << "END\n";
            out << "BEGIN FRM\n";
            write_rect(out, b.second.matrix);
            out << "END\n";
            if (b.identified) out << "IDENTIFY\n";
            break;
        }
    }
    return out.str();
}

namespace {

bool model_is_linguistic(const ModelDocument& doc) {
    return doc.kind == ModelKind::flcm || doc.kind == ModelKind::flrm;
}

// Splits "fcm:poor_economy" into its qualifier and label.
std::pair<std::string, std::string> split_qualifier(const std::string& token) {
    const std::size_t colon = token.rfind(':');
    if (colon == std::string::npos) return {"", token};
    return {token.substr(0, colon), token.substr(colon + 1)};
}

struct ResolvedSeed {
    std::string qualifier;
    std::size_t index;
};

ResolvedSeed resolve_label(const Line& line, std::size_t column, const ModelDocument& doc,
                           const std::string& qualifier, const std::string& label) {
    switch (doc.kind) {
        case ModelKind::fcm:
        case ModelKind::flcm: {
            if (!qualifier.empty()) fail(line, column, "this model kind takes unqualified labels");
            const ConceptSpace& space =
                doc.kind == ModelKind::fcm ? doc.fcm().space() : doc.flcm().space();
            if (auto idx = space.find(label)) return {"", *idx};
            fail(line, column, "unknown concept '" + label + "'");
        }
        case ModelKind::frm:
        case ModelKind::flrm: {
            if (!qualifier.empty()) fail(line, column, "this model kind takes unqualified labels");
            const ConceptSpace& domain =
                doc.kind == ModelKind::frm ? doc.frm().domain() : doc.flrm().domain();
            const ConceptSpace& range =
                doc.kind == ModelKind::frm ? doc.frm().range() : doc.flrm().range();
            if (auto idx = domain.find(label)) return {"frm.domain", *idx};
            if (auto idx = range.find(label)) return {"frm.range", *idx};
            fail(line, column, "label '" + label + "' is in neither the domain nor the range");
        }
        case ModelKind::fcrm: {
            const FcrmBimodel& b = doc.fcrm();
            if (qualifier == "fcm") {
                if (auto idx = b.first.space().find(label)) return {"fcm", *idx};
                fail(line, column, "unknown connection concept '" + label + "'");
            }
            if (qualifier == "frm.domain") {
                if (auto idx = b.second.domain().find(label)) return {"frm.domain", *idx};
                fail(line, column, "unknown domain concept '" + label + "'");
            }
            if (qualifier == "frm.range") {
                if (auto idx = b.second.range().find(label)) return {"frm.range", *idx};
                fail(line, column, "unknown range concept '" + label + "'");
            }
            fail(line, column,
                 "FCRM seeds need a fcm: / frm.domain: / frm.range: prefix, got '" +
                     (qualifier.empty() ? label : qualifier + ":" + label) + "'");
        }
    }
    fail(line, column, "unreachable");
}

} // namespace

Scenario parse_scenario(std::string_view text, const ModelDocument& model) {
    const std::vector<Line> lines = scan(text);
    if (lines.empty()) throw ParseError(1, 1, "empty scenario document");
    const Line& head = lines.front();
    if (head.directive() != "SCENARIO" || head.tokens.size() < 2) {
        fail(head, "document must start with 'SCENARIO <name>'");
    }
    Scenario scenario;
    scenario.name = head.tokens[1].text;
    for (std::size_t t = 2; t < head.tokens.size(); ++t) {
        scenario.name += ' ' + head.tokens[t].text;
    }

    const bool linguistic = model_is_linguistic(model);
    std::set<std::pair<std::string, std::size_t>> seen;
    std::string frm_side; // which relational side this scenario seeds, if any

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& d = line.directive();
        if (d == "ON") {
            if (linguistic) fail(line, "linguistic models take 'SET label=term'");
            if (line.tokens.size() != 2) fail(line, "ON needs exactly one label");
            auto [qualifier, label] = split_qualifier(line.tokens[1].text);
            ResolvedSeed seed = resolve_label(line, line.tokens[1].column, model, qualifier, label);
            if (!seen.emplace(seed.qualifier, seed.index).second) {
                fail(line, line.tokens[1].column, "duplicate seed for '" + label + "'");
            }
            if (seed.qualifier == "frm.domain" || seed.qualifier == "frm.range") {
                if (frm_side.empty()) {
                    frm_side = seed.qualifier;
                } else if (frm_side != seed.qualifier) {
                    fail(line, line.tokens[1].column,
                         "seeds cannot span both the domain and the range");
                }
            }
            scenario.assignments.push_back(
                Scenario::Assignment{seed.qualifier, label, "", seed.index});
        } else if (d == "SET") {
            if (!linguistic) fail(line, "crisp models take 'ON label'");
            if (line.tokens.size() < 2) fail(line, "SET needs label=term");
            // Accept "SET a=b", "SET a = b" and "SET a= b".
            std::string joined;
            for (std::size_t t = 1; t < line.tokens.size(); ++t) joined += line.tokens[t].text;
            const std::size_t eq = joined.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= joined.size()) {
                fail(line, line.tokens[1].column, "SET needs label=term");
            }
            const std::string raw_label = joined.substr(0, eq);
            const std::string term = joined.substr(eq + 1);
            auto [qualifier, label] = split_qualifier(raw_label);
            ResolvedSeed seed = resolve_label(line, line.tokens[1].column, model, qualifier, label);
            const LinguisticChain& chain =
                model.kind == ModelKind::flcm ? model.flcm().chain() : model.flrm().chain();
            if (!chain.contains(term)) {
                fail(line, line.tokens[1].column, "term '" + term + "' is not in the chain");
            }
            if (term == "0") fail(line, line.tokens[1].column, "seeding the bottom term has no effect");
            if (!seen.emplace(seed.qualifier, seed.index).second) {
                fail(line, line.tokens[1].column, "duplicate seed for '" + label + "'");
            }
            if (seed.qualifier == "frm.domain" || seed.qualifier == "frm.range") {
                if (frm_side.empty()) {
                    frm_side = seed.qualifier;
                } else if (frm_side != seed.qualifier) {
                    fail(line, line.tokens[1].column,
                         "seeds cannot span both the domain and the range");
                }
            }
            scenario.assignments.push_back(
                Scenario::Assignment{seed.qualifier, label, term, seed.index});
        } else if (d == "OPERATOR") {
            if (!linguistic) fail(line, "OPERATOR applies to linguistic models only");
            if (line.tokens.size() != 2) fail(line, "OPERATOR needs one of max-min|min-min|max-max|min-max");
            if (scenario.op) fail(line, "duplicate OPERATOR directive");
            try {
                scenario.op = parse_operator(line.tokens[1].text);
            } catch (const UsageError& e) {
                fail(line, line.tokens[1].column, e.what());
            }
        } else if (d == "MAXITERS") {
            if (line.tokens.size() != 2) fail(line, "MAXITERS needs a positive integer");
            if (scenario.max_iters) fail(line, "duplicate MAXITERS directive");
            const std::int64_t v = parse_int(line, line.tokens[1]);
            if (v <= 0) fail(line, line.tokens[1].column, "MAXITERS must be positive");
            scenario.max_iters = static_cast<std::size_t>(v);
        } else {
            fail(line, "unknown directive '" + d + "'");
        }
    }
    if (scenario.assignments.empty()) {
        fail(head, "scenario seeds nothing (add ON or SET lines)");
    }
    return scenario;
}

} // namespace cogmap
