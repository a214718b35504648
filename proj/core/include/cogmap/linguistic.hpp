#pragma once

#include <compare>
#include <map>

#include "cogmap/core.hpp"

namespace cogmap {

/// Totally ordered chain of linguistic terms. Position 0 is always the
/// literal term "0", the unique bottom element; later positions rank higher.
class LinguisticChain {
public:
    explicit LinguisticChain(std::vector<std::string> terms);

    std::size_t size() const { return terms_.size(); }
    const std::string& term(std::size_t position) const { return terms_.at(position); }
    const std::vector<std::string>& terms() const { return terms_; }

    /// Position of `term`, or UnknownTermError.
    std::size_t position(std::string_view term) const;
    bool contains(std::string_view term) const;

    friend bool operator==(const LinguisticChain&, const LinguisticChain&) = default;

private:
    std::vector<std::string> terms_;
};

/// Chain order of two terms; both must belong to the chain.
std::strong_ordering compare_terms(const LinguisticChain& chain, std::string_view a,
                                   std::string_view b);
const std::string& chain_min(const LinguisticChain& chain, std::string_view a,
                             std::string_view b);
const std::string& chain_max(const LinguisticChain& chain, std::string_view a,
                             std::string_view b);

/// Matrix whose entries are chain terms. Row and column spaces are equal for
/// a cognitive model and disjoint for a relational one.
class LinguisticMatrix {
public:
    LinguisticMatrix(ConceptSpace rows, ConceptSpace cols, LinguisticChain chain,
                     std::vector<std::size_t> entries);

    /// Convenience constructor from term strings.
    static LinguisticMatrix from_terms(ConceptSpace rows, ConceptSpace cols,
                                       LinguisticChain chain,
                                       const std::vector<std::string>& terms);

    const ConceptSpace& row_space() const { return rows_; }
    const ConceptSpace& col_space() const { return cols_; }
    const LinguisticChain& chain() const { return chain_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_.size(); }
    std::size_t at(std::size_t row, std::size_t col) const;
    const std::string& term_at(std::size_t row, std::size_t col) const;
    const std::vector<std::size_t>& entries() const { return entries_; }
    bool square() const { return rows_ == cols_; }

    friend bool operator==(const LinguisticMatrix&, const LinguisticMatrix&) = default;

private:
    ConceptSpace rows_;
    ConceptSpace cols_;
    LinguisticChain chain_;
    std::vector<std::size_t> entries_; // chain positions, row-major
};

LinguisticMatrix transpose(const LinguisticMatrix& matrix);

/// Per-concept chain terms with a clamp record: a clamped coordinate never
/// drops below its seeded term in chain order.
class LinguisticState {
public:
    LinguisticState(ConceptSpace space, LinguisticChain chain, std::vector<std::size_t> values,
                    std::map<std::size_t, std::size_t> clamped = {});

    /// State holding `term` at the given coordinates (clamped there) and the
    /// bottom term everywhere else.
    static LinguisticState seed(ConceptSpace space, LinguisticChain chain,
                                const std::map<std::size_t, std::string>& assignments);

    const ConceptSpace& space() const { return space_; }
    const LinguisticChain& chain() const { return chain_; }
    std::size_t size() const { return values_.size(); }
    std::size_t value(std::size_t i) const { return values_.at(i); }
    const std::string& term(std::size_t i) const { return chain_.term(values_.at(i)); }
    const std::vector<std::size_t>& values() const { return values_; }
    const std::map<std::size_t, std::size_t>& clamped() const { return clamped_; }
    bool is_bottom() const;

    friend bool operator==(const LinguisticState&, const LinguisticState&) = default;

private:
    ConceptSpace space_;
    LinguisticChain chain_;
    std::vector<std::size_t> values_;          // chain positions
    std::map<std::size_t, std::size_t> clamped_; // index -> seeded position
};

enum class Bound { min, max };

/// One of the four named compositions: outer folds across concepts, inner
/// pairs a state value with a matrix entry.
struct CompositionOperator {
    Bound outer = Bound::max;
    Bound inner = Bound::min;

    friend bool operator==(const CompositionOperator&, const CompositionOperator&) = default;

    static constexpr CompositionOperator max_min() { return {Bound::max, Bound::min}; }
    static constexpr CompositionOperator min_min() { return {Bound::min, Bound::min}; }
    static constexpr CompositionOperator max_max() { return {Bound::max, Bound::max}; }
    static constexpr CompositionOperator min_max() { return {Bound::min, Bound::max}; }
};

std::string to_string(CompositionOperator op);
/// Parses "max-min", "min-min", "max-max" or "min-max".
CompositionOperator parse_operator(std::string_view text);

/// out[j] = outer_i( inner(state[i], matrix[i][j]) ), then every clamped
/// coordinate is raised to at least its seeded term. State space must equal
/// the matrix row space and both must share the chain.
LinguisticState compose(const LinguisticState& state, const LinguisticMatrix& matrix,
                        CompositionOperator op);

struct FlcmModel {
    LinguisticMatrix matrix; // square

    const ConceptSpace& space() const { return matrix.row_space(); }
    const LinguisticChain& chain() const { return matrix.chain(); }

    friend bool operator==(const FlcmModel&, const FlcmModel&) = default;
};

FlcmModel make_flcm(LinguisticMatrix matrix);

struct FlrmModel {
    LinguisticMatrix matrix; // rectangular, disjoint spaces

    const ConceptSpace& domain() const { return matrix.row_space(); }
    const ConceptSpace& range() const { return matrix.col_space(); }
    const LinguisticChain& chain() const { return matrix.chain(); }

    friend bool operator==(const FlrmModel&, const FlrmModel&) = default;
};

FlrmModel make_flrm(LinguisticMatrix matrix);

using LinguisticHiddenPattern = BasicHiddenPattern<LinguisticState>;
using LinguisticHiddenPair = BasicHiddenPair<LinguisticState>;

LinguisticHiddenPattern flcm_hidden_pattern(const FlcmModel& model, const LinguisticState& seed,
                                            CompositionOperator op, std::size_t max_iters = 0);

LinguisticHiddenPair flrm_hidden_pair(const FlrmModel& model, const LinguisticState& seed,
                                      CompositionOperator op, std::size_t max_iters = 0);

namespace detail {
LinguisticHiddenPair flrm_hidden_pair_allow_bottom(const FlrmModel& model,
                                                   const LinguisticState& seed, Side side,
                                                   CompositionOperator op,
                                                   std::size_t max_iters);
} // namespace detail

} // namespace cogmap
