#include "cogmap/linguistic.hpp"

#include <algorithm>
#include <cctype>

#include "iterate.hpp"

namespace cogmap {
namespace {

// Chain states over an n-dim space: |chain|^n distinct values, capped.
std::size_t linguistic_cap(std::size_t chain_size, std::size_t dimension) {
    constexpr std::size_t hard_cap = 1000000;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        if (total > hard_cap / chain_size) return hard_cap;
        total *= chain_size;
    }
    return std::min(total, hard_cap);
}

const std::vector<std::size_t>& state_key(const LinguisticState& s) { return s.values(); }

} // namespace

LinguisticChain::LinguisticChain(std::vector<std::string> terms) : terms_(std::move(terms)) {
    if (terms_.empty() || terms_.front() != "0") {
        throw StructuralError("a linguistic chain must start with the bottom term \"0\"");
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const std::string& t = terms_[i];
        if (t.empty()) throw StructuralError("empty linguistic term at position " + std::to_string(i));
        for (char c : t) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ':' ||
                c == '=' || c == '<') {
                throw StructuralError("term '" + t + "' contains whitespace or a reserved character");
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (terms_[j] == t) throw StructuralError("duplicate linguistic term '" + t + "'");
        }
    }
}

std::size_t LinguisticChain::position(std::string_view term) const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i] == term) return i;
    }
    throw UnknownTermError("term '" + std::string(term) + "' is not in the chain");
}

bool LinguisticChain::contains(std::string_view term) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const std::string& t) { return t == term; });
}

std::strong_ordering compare_terms(const LinguisticChain& chain, std::string_view a,
                                   std::string_view b) {
    return chain.position(a) <=> chain.position(b);
}

const std::string& chain_min(const LinguisticChain& chain, std::string_view a,
                             std::string_view b) {
    return chain.term(std::min(chain.position(a), chain.position(b)));
}

const std::string& chain_max(const LinguisticChain& chain, std::string_view a,
                             std::string_view b) {
    return chain.term(std::max(chain.position(a), chain.position(b)));
}

LinguisticMatrix::LinguisticMatrix(ConceptSpace rows, ConceptSpace cols, LinguisticChain chain,
                                   std::vector<std::size_t> entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), chain_(std::move(chain)),
      entries_(std::move(entries)) {
    if (entries_.size() != rows_.size() * cols_.size()) {
        throw StructuralError("linguistic matrix " + std::to_string(rows_.size()) + "x" +
                              std::to_string(cols_.size()) + " needs " +
                              std::to_string(rows_.size() * cols_.size()) + " entries, got " +
                              std::to_string(entries_.size()));
    }
    for (std::size_t p : entries_) {
        if (p >= chain_.size()) {
            throw StructuralError("matrix entry position " + std::to_string(p) +
                                  " exceeds the chain");
        }
    }
}

LinguisticMatrix LinguisticMatrix::from_terms(ConceptSpace rows, ConceptSpace cols,
                                              LinguisticChain chain,
                                              const std::vector<std::string>& terms) {
    std::vector<std::size_t> entries;
    entries.reserve(terms.size());
    for (const std::string& t : terms) entries.push_back(chain.position(t));
    return LinguisticMatrix(std::move(rows), std::move(cols), std::move(chain),
                            std::move(entries));
}

std::size_t LinguisticMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows() || col >= cols()) throw StructuralError("matrix index out of bounds");
    return entries_[row * cols() + col];
}

const std::string& LinguisticMatrix::term_at(std::size_t row, std::size_t col) const {
    return chain_.term(at(row, col));
}

LinguisticMatrix transpose(const LinguisticMatrix& matrix) {
    std::vector<std::size_t> entries(matrix.entries().size());
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            entries[j * matrix.rows() + i] = matrix.at(i, j);
        }
    }
    return LinguisticMatrix(matrix.col_space(), matrix.row_space(), matrix.chain(),
                            std::move(entries));
}

LinguisticState::LinguisticState(ConceptSpace space, LinguisticChain chain,
                                 std::vector<std::size_t> values,
                                 std::map<std::size_t, std::size_t> clamped)
    : space_(std::move(space)), chain_(std::move(chain)), values_(std::move(values)),
      clamped_(std::move(clamped)) {
    if (values_.size() != space_.size()) {
        throw StructuralError("linguistic state has " + std::to_string(values_.size()) +
                              " values for space " + space_.describe());
    }
    for (std::size_t p : values_) {
        if (p >= chain_.size()) {
            throw StructuralError("state value position " + std::to_string(p) +
                                  " exceeds the chain");
        }
    }
    for (const auto& [idx, pos] : clamped_) {
        if (idx >= values_.size()) {
            throw StructuralError("clamp index " + std::to_string(idx) + " out of bounds");
        }
        if (pos >= chain_.size()) {
            throw StructuralError("clamp term position exceeds the chain");
        }
        if (values_[idx] < pos) {
            throw StructuralError("clamped coordinate " + space_.label(idx) +
                                  " holds a term below its seed");
        }
    }
}

LinguisticState LinguisticState::seed(ConceptSpace space, LinguisticChain chain,
                                      const std::map<std::size_t, std::string>& assignments) {
    std::vector<std::size_t> values(space.size(), 0);
    std::map<std::size_t, std::size_t> clamped;
    for (const auto& [idx, term] : assignments) {
        if (idx >= values.size()) {
            throw StructuralError("seed index " + std::to_string(idx) + " out of bounds");
        }
        const std::size_t pos = chain.position(term);
        values[idx] = pos;
        clamped.emplace(idx, pos);
    }
    return LinguisticState(std::move(space), std::move(chain), std::move(values),
                           std::move(clamped));
}

bool LinguisticState::is_bottom() const {
    return std::all_of(values_.begin(), values_.end(), [](std::size_t p) { return p == 0; });
}

std::string to_string(CompositionOperator op) {
    std::string out = op.outer == Bound::max ? "max" : "min";
    out += '-';
    out += op.inner == Bound::max ? "max" : "min";
    return out;
}

CompositionOperator parse_operator(std::string_view text) {
    if (text == "max-min") return CompositionOperator::max_min();
    if (text == "min-min") return CompositionOperator::min_min();
    if (text == "max-max") return CompositionOperator::max_max();
    if (text == "min-max") return CompositionOperator::min_max();
    throw UsageError("unknown operator '" + std::string(text) +
                     "' (expected max-min, min-min, max-max or min-max)");
}

LinguisticState compose(const LinguisticState& state, const LinguisticMatrix& matrix,
                        CompositionOperator op) {
    if (state.space() != matrix.row_space()) {
        throw StructuralError("state space " + state.space().describe() +
                              " does not match matrix row space " +
                              matrix.row_space().describe());
    }
    if (state.chain() != matrix.chain()) {
        throw StructuralError("state and matrix use different chains");
    }
    const std::size_t n = matrix.rows();
    const std::size_t m = matrix.cols();
    std::vector<std::size_t> out(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t inner = op.inner == Bound::min
                                          ? std::min(state.value(i), matrix.at(i, j))
                                          : std::max(state.value(i), matrix.at(i, j));
            if (i == 0) {
                acc = inner;
            } else {
                acc = op.outer == Bound::min ? std::min(acc, inner) : std::max(acc, inner);
            }
        }
        out[j] = acc;
    }
    // A clamp record names coordinates of the state's own space, so it can
    // only ride through a square composition; across a rectangular matrix
    // the output space is different and starts unclamped.
    if (matrix.square()) {
        for (const auto& [idx, pos] : state.clamped()) {
            out[idx] = std::max(out[idx], pos);
        }
        return LinguisticState(matrix.col_space(), matrix.chain(), std::move(out),
                               state.clamped());
    }
    return LinguisticState(matrix.col_space(), matrix.chain(), std::move(out), {});
}

FlcmModel make_flcm(LinguisticMatrix matrix) {
    if (!matrix.square()) {
        throw StructuralError("a linguistic cognitive model needs equal row and column spaces");
    }
    return FlcmModel{std::move(matrix)};
}

FlrmModel make_flrm(LinguisticMatrix matrix) {
    for (const std::string& d : matrix.row_space().labels()) {
        if (matrix.col_space().find(d)) {
            throw StructuralError("label '" + d + "' appears in both domain and range");
        }
    }
    return FlrmModel{std::move(matrix)};
}

LinguisticHiddenPattern flcm_hidden_pattern(const FlcmModel& model, const LinguisticState& seed,
                                            CompositionOperator op, std::size_t max_iters) {
    if (seed.space() != model.space()) {
        throw StructuralError("seed space " + seed.space().describe() +
                              " does not match model space " + model.space().describe());
    }
    if (seed.chain() != model.chain()) {
        throw StructuralError("seed and model use different chains");
    }
    if (seed.is_bottom()) throw UsageError("seed must hold at least one non-\"0\" term");
    if (max_iters == 0) max_iters = linguistic_cap(model.chain().size(), model.space().size());
    auto step = [&](const LinguisticState& x) { return compose(x, model.matrix, op); };
    return detail::iterate_pattern(seed, step, state_key, max_iters);
}

namespace detail {

LinguisticHiddenPair flrm_hidden_pair_allow_bottom(const FlrmModel& model,
                                                   const LinguisticState& seed, Side side,
                                                   CompositionOperator op,
                                                   std::size_t max_iters) {
    if (seed.chain() != model.chain()) {
        throw StructuralError("seed and model use different chains");
    }
    if (max_iters == 0) max_iters = linguistic_cap(model.chain().size(), model.domain().size());

    const LinguisticMatrix& fwd_matrix = model.matrix;
    const LinguisticMatrix bwd_matrix = transpose(model.matrix);

    // Only the seeded side is clamped: after composing into that side, every
    // seeded coordinate is raised back to at least its seeded term.
    auto clamp_seeded = [&](LinguisticState s) {
        auto values = s.values();
        for (const auto& [idx, pos] : seed.clamped()) {
            values[idx] = std::max(values[idx], pos);
        }
        return LinguisticState(s.space(), s.chain(), std::move(values), seed.clamped());
    };
    auto fwd_step = [&](const LinguisticState& x) {
        LinguisticState y = compose(x, fwd_matrix, op);
        return side == Side::range ? clamp_seeded(std::move(y)) : y;
    };
    auto bwd_step = [&](const LinguisticState& y) {
        LinguisticState x = compose(y, bwd_matrix, op);
        return side == Side::domain ? clamp_seeded(std::move(x)) : x;
    };

    LinguisticState d0 = side == Side::domain
                             ? LinguisticState(seed.space(), seed.chain(), seed.values(),
                                               seed.clamped())
                             : bwd_step(seed);
    return iterate_pair(std::move(d0), fwd_step, bwd_step, state_key, max_iters);
}

} // namespace detail

LinguisticHiddenPair flrm_hidden_pair(const FlrmModel& model, const LinguisticState& seed,
                                      CompositionOperator op, std::size_t max_iters) {
    Side side;
    if (seed.space() == model.domain()) {
        side = Side::domain;
    } else if (seed.space() == model.range()) {
        side = Side::range;
    } else {
        throw StructuralError("seed space " + seed.space().describe() +
                              " matches neither domain " + model.domain().describe() +
                              " nor range " + model.range().describe());
    }
    if (seed.is_bottom()) throw UsageError("seed must hold at least one non-\"0\" term");
    return detail::flrm_hidden_pair_allow_bottom(model, seed, side, op, max_iters);
}

} // namespace cogmap
