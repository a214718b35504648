#include "cogmap/core.hpp"

#include <algorithm>
#include <cctype>

namespace cogmap {
namespace {

bool valid_label_char(char c) {
    if (c == '#' || c == ':' || c == '=' || c == '<') return false;
    return !std::isspace(static_cast<unsigned char>(c));
}

std::vector<std::size_t> normalize_indices(std::vector<std::size_t> idx, std::size_t n,
                                           const char* what) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (!idx.empty() && idx.back() >= n) {
        throw StructuralError(std::string(what) + " index " + std::to_string(idx.back()) +
                              " out of bounds for dimension " + std::to_string(n));
    }
    return idx;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("64-bit score overflow while adding " + std::to_string(a) +
                            " and " + std::to_string(b));
    }
    return out;
}

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(a, b, &prod)) {
        throw OverflowError("64-bit score overflow in product");
    }
    return checked_add(acc, prod);
}

void check_entry_range(MatrixKind kind, std::int64_t v, std::size_t row, std::size_t col) {
    if (kind == MatrixKind::simple && (v < -1 || v > 1)) {
        throw StructuralError("simple matrix entry (" + std::to_string(row) + "," +
                              std::to_string(col) + ") = " + std::to_string(v) +
                              " is outside {-1, 0, 1}");
    }
    if (kind == MatrixKind::positive && (v < 0 || v > 1)) {
        throw StructuralError("positive matrix entry (" + std::to_string(row) + "," +
                              std::to_string(col) + ") = " + std::to_string(v) +
                              " is outside {0, 1}");
    }
}

void require_same_space(const ConceptSpace& a, const ConceptSpace& b, const char* lhs,
                        const char* rhs) {
    if (a != b) {
        throw StructuralError(std::string(lhs) + " space " + a.describe() +
                              " does not match " + rhs + " space " + b.describe());
    }
}

} // namespace

ConceptSpace::ConceptSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw StructuralError("concept space must have at least one label");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const std::string& l = labels_[i];
        if (l.empty()) throw StructuralError("empty concept label at position " + std::to_string(i));
        for (char c : l) {
            if (!valid_label_char(c)) {
                throw StructuralError("label '" + l + "' contains whitespace or a reserved character");
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (labels_[j] == l) throw StructuralError("duplicate concept label '" + l + "'");
        }
    }
}

std::size_t ConceptSpace::index(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw StructuralError("unknown concept label '" + std::string(label) + "' in space " +
                          describe());
}

std::optional<std::size_t> ConceptSpace::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

std::string ConceptSpace::describe() const {
    std::string out = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) out += ", ";
        out += labels_[i];
    }
    out += "}";
    return out;
}

StateVector::StateVector(ConceptSpace space, std::vector<std::uint8_t> values,
                         std::vector<std::size_t> clamped)
    : space_(std::move(space)), values_(std::move(values)), clamped_(std::move(clamped)) {
    if (values_.size() != space_.size()) {
        throw StructuralError("state has " + std::to_string(values_.size()) +
                              " values for space " + space_.describe());
    }
    for (std::uint8_t v : values_) {
        if (v > 1) throw StructuralError("state values must be 0 or 1");
    }
    clamped_ = normalize_indices(std::move(clamped_), values_.size(), "clamp");
    for (std::size_t i : clamped_) {
        if (values_[i] != 1) {
            throw StructuralError("clamped coordinate " + space_.label(i) + " must be on");
        }
    }
}

StateVector StateVector::seed(ConceptSpace space, std::vector<std::size_t> on) {
    std::vector<std::uint8_t> values(space.size(), 0);
    on = normalize_indices(std::move(on), space.size(), "seed");
    for (std::size_t i : on) values[i] = 1;
    return StateVector(std::move(space), std::move(values), std::move(on));
}

std::vector<std::size_t> StateVector::on_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i]) out.push_back(i);
    }
    return out;
}

bool StateVector::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](std::uint8_t v) { return v == 0; });
}

RawVector::RawVector(ConceptSpace space, std::vector<std::int64_t> scores)
    : space_(std::move(space)), scores_(std::move(scores)) {
    if (scores_.size() != space_.size()) {
        throw StructuralError("raw vector has " + std::to_string(scores_.size()) +
                              " scores for space " + space_.describe());
    }
}

std::string_view to_string(Side side) {
    return side == Side::domain ? "domain" : "range";
}

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::simple: return "simple";
        case MatrixKind::positive: return "positive";
        case MatrixKind::combined: return "combined";
    }
    return "?";
}

ConnectionMatrix::ConnectionMatrix(ConceptSpace space, MatrixKind kind,
                                   std::vector<std::int64_t> entries, bool allow_diagonal)
    : space_(std::move(space)), kind_(kind), entries_(std::move(entries)),
      allow_diagonal_(allow_diagonal) {
    const std::size_t n = space_.size();
    if (entries_.size() != n * n) {
        throw StructuralError("connection matrix over " + space_.describe() + " needs " +
                              std::to_string(n * n) + " entries, got " +
                              std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            check_entry_range(kind_, entries_[i * n + j], i, j);
        }
        if (kind_ != MatrixKind::combined && !allow_diagonal_ && entries_[i * n + i] != 0) {
            throw StructuralError("diagonal entry must be 0 for " + std::string(to_string(kind_)) +
                                  " connection matrices (concept " + space_.label(i) + ")");
        }
    }
}

std::int64_t ConnectionMatrix::at(std::size_t row, std::size_t col) const {
    const std::size_t n = space_.size();
    if (row >= n || col >= n) throw StructuralError("matrix index out of bounds");
    return entries_[row * n + col];
}

RelationalMatrix::RelationalMatrix(ConceptSpace domain, ConceptSpace range,
                                   std::vector<std::int64_t> entries, MatrixKind kind)
    : domain_(std::move(domain)), range_(std::move(range)), kind_(kind),
      entries_(std::move(entries)) {
    if (kind_ == MatrixKind::positive) {
        throw StructuralError("relational matrices are simple or combined");
    }
    if (entries_.size() != rows() * cols()) {
        throw StructuralError("relational matrix " + std::to_string(rows()) + "x" +
                              std::to_string(cols()) + " needs " +
                              std::to_string(rows() * cols()) + " entries, got " +
                              std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            if (kind_ == MatrixKind::simple) check_entry_range(kind_, entries_[i * cols() + j], i, j);
        }
    }
    for (const std::string& d : domain_.labels()) {
        if (range_.find(d)) {
            throw StructuralError("label '" + d + "' appears in both domain and range");
        }
    }
}

std::int64_t RelationalMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows() || col >= cols()) throw StructuralError("matrix index out of bounds");
    return entries_[row * cols() + col];
}

RawVector mul_state_matrix(const StateVector& state, const ConnectionMatrix& matrix) {
    require_same_space(state.space(), matrix.space(), "state", "matrix");
    const std::size_t n = matrix.size();
    std::vector<std::int64_t> scores(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!state.value(i)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            scores[j] = checked_add(scores[j], matrix.at(i, j));
        }
    }
    return RawVector(matrix.space(), std::move(scores));
}

RawVector mul_raw_matrix(const RawVector& vec, const ConnectionMatrix& matrix) {
    require_same_space(vec.space(), matrix.space(), "vector", "matrix");
    const std::size_t n = matrix.size();
    std::vector<std::int64_t> scores(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t v = vec.score(i);
        if (v == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            scores[j] = checked_mul_add(scores[j], v, matrix.at(i, j));
        }
    }
    return RawVector(matrix.space(), std::move(scores));
}

StateVector threshold_update(const RawVector& raw, const std::vector<std::size_t>& clamped) {
    std::vector<std::uint8_t> values(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        values[j] = raw.score(j) >= 1 ? 1 : 0;
    }
    auto idx = normalize_indices(clamped, raw.size(), "clamp");
    for (std::size_t i : idx) values[i] = 1;
    return StateVector(raw.space(), std::move(values), std::move(idx));
}

ConnectionMatrix transpose(const ConnectionMatrix& matrix) {
    const std::size_t n = matrix.size();
    std::vector<std::int64_t> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries[j * n + i] = matrix.at(i, j);
        }
    }
    return ConnectionMatrix(matrix.space(), matrix.kind(), std::move(entries),
                            matrix.allow_diagonal());
}

RelationalMatrix transpose(const RelationalMatrix& matrix) {
    std::vector<std::int64_t> entries(matrix.rows() * matrix.cols());
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            entries[j * matrix.rows() + i] = matrix.at(i, j);
        }
    }
    return RelationalMatrix(matrix.range(), matrix.domain(), std::move(entries), matrix.kind());
}

ConnectionMatrix add_matrices(std::span<const ConnectionMatrix> matrices) {
    if (matrices.empty()) throw UsageError("add_matrices needs at least one matrix");
    const ConceptSpace& space = matrices.front().space();
    std::vector<std::int64_t> sum(space.size() * space.size(), 0);
    for (const ConnectionMatrix& m : matrices) {
        require_same_space(space, m.space(), "first matrix", "matrix");
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] = checked_add(sum[k], m.entries()[k]);
        }
    }
    return ConnectionMatrix(space, MatrixKind::combined, std::move(sum));
}

RelationalMatrix add_matrices(std::span<const RelationalMatrix> matrices) {
    if (matrices.empty()) throw UsageError("add_matrices needs at least one matrix");
    const RelationalMatrix& first = matrices.front();
    std::vector<std::int64_t> sum(first.entries().size(), 0);
    for (const RelationalMatrix& m : matrices) {
        require_same_space(first.domain(), m.domain(), "first matrix domain", "matrix domain");
        require_same_space(first.range(), m.range(), "first matrix range", "matrix range");
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] = checked_add(sum[k], m.entries()[k]);
        }
    }
    return RelationalMatrix(first.domain(), first.range(), std::move(sum), MatrixKind::combined);
}

std::size_t default_iteration_cap(std::size_t dimension) {
    constexpr std::size_t hard_cap = 1000000;
    if (dimension >= 20) return hard_cap;
    return std::min<std::size_t>(hard_cap, std::size_t{1} << dimension);
}

} // namespace cogmap
