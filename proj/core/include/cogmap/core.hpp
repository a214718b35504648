#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cogmap/errors.hpp"

namespace cogmap {

/// An ordered list of distinct concept labels. Two spaces are interchangeable
/// exactly when their label sequences are equal.
class ConceptSpace {
public:
    /// Labels must be unique, non-empty and free of whitespace and the
    /// characters `# : = <` reserved by the text formats.
    explicit ConceptSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Index of `label`, or StructuralError if it is not in this space.
    std::size_t index(std::string_view label) const;
    std::optional<std::size_t> find(std::string_view label) const;

    friend bool operator==(const ConceptSpace&, const ConceptSpace&) = default;

    /// "{a, b, c}" — used in diagnostics.
    std::string describe() const;

private:
    std::vector<std::string> labels_;
};

/// Binary activation vector over a concept space. `clamped` records the
/// coordinates that were switched on in the seed; they are forced back to 1
/// after every threshold step.
class StateVector {
public:
    StateVector(ConceptSpace space, std::vector<std::uint8_t> values,
                std::vector<std::size_t> clamped = {});

    /// State with the given coordinates on and clamped, everything else off.
    static StateVector seed(ConceptSpace space, std::vector<std::size_t> on);

    const ConceptSpace& space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    std::uint8_t value(std::size_t i) const { return values_.at(i); }
    const std::vector<std::uint8_t>& values() const { return values_; }
    const std::vector<std::size_t>& clamped() const { return clamped_; }

    /// Indices whose value is 1.
    std::vector<std::size_t> on_indices() const;
    bool is_zero() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    ConceptSpace space_;
    std::vector<std::uint8_t> values_;
    std::vector<std::size_t> clamped_; // sorted, unique
};

/// Signed integer scores prior to thresholding.
class RawVector {
public:
    RawVector(ConceptSpace space, std::vector<std::int64_t> scores);

    const ConceptSpace& space() const { return space_; }
    std::size_t size() const { return scores_.size(); }
    std::int64_t score(std::size_t i) const { return scores_.at(i); }
    const std::vector<std::int64_t>& scores() const { return scores_; }

    friend bool operator==(const RawVector&, const RawVector&) = default;

private:
    ConceptSpace space_;
    std::vector<std::int64_t> scores_;
};

enum class MatrixKind { simple, positive, combined };

std::string_view to_string(MatrixKind kind);

/// Square connection matrix over one concept space.
///  - simple:   entries in {-1, 0, 1}
///  - positive: entries in {0, 1}
///  - combined: any 64-bit integers (sums of expert matrices)
/// Simple and positive matrices reject nonzero diagonal entries unless
/// constructed with `allow_diagonal`.
class ConnectionMatrix {
public:
    ConnectionMatrix(ConceptSpace space, MatrixKind kind,
                     std::vector<std::int64_t> entries, bool allow_diagonal = false);

    const ConceptSpace& space() const { return space_; }
    MatrixKind kind() const { return kind_; }
    std::size_t size() const { return space_.size(); }
    std::int64_t at(std::size_t row, std::size_t col) const;
    const std::vector<std::int64_t>& entries() const { return entries_; }
    bool allow_diagonal() const { return allow_diagonal_; }

    friend bool operator==(const ConnectionMatrix&, const ConnectionMatrix&) = default;

private:
    ConceptSpace space_;
    MatrixKind kind_;
    std::vector<std::int64_t> entries_; // row-major n*n
    bool allow_diagonal_;
};

/// Rectangular relational matrix between a domain space and a range space.
/// Simple kind restricts entries to {-1, 0, 1}; combined kind (sums of
/// relational matrices) is unrestricted.
class RelationalMatrix {
public:
    RelationalMatrix(ConceptSpace domain, ConceptSpace range,
                     std::vector<std::int64_t> entries,
                     MatrixKind kind = MatrixKind::simple);

    const ConceptSpace& domain() const { return domain_; }
    const ConceptSpace& range() const { return range_; }
    MatrixKind kind() const { return kind_; }
    std::size_t rows() const { return domain_.size(); }
    std::size_t cols() const { return range_.size(); }
    std::int64_t at(std::size_t row, std::size_t col) const;
    const std::vector<std::int64_t>& entries() const { return entries_; }

    friend bool operator==(const RelationalMatrix&, const RelationalMatrix&) = default;

private:
    ConceptSpace domain_;
    ConceptSpace range_;
    MatrixKind kind_;
    std::vector<std::int64_t> entries_; // row-major rows*cols
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// scores[j] = sum_i state[i] * matrix[i][j]. Spaces must match.
RawVector mul_state_matrix(const StateVector& state, const ConnectionMatrix& matrix);

/// Same product over an arbitrary integer vector (pre-threshold linearity).
RawVector mul_raw_matrix(const RawVector& vec, const ConnectionMatrix& matrix);

/// value[j] = 1 if scores[j] >= 1 else 0, then every clamped index is forced
/// to 1. The result carries the clamp set.
StateVector threshold_update(const RawVector& raw, const std::vector<std::size_t>& clamped);

ConnectionMatrix transpose(const ConnectionMatrix& matrix);
RelationalMatrix transpose(const RelationalMatrix& matrix);

/// Elementwise sum; result kind is combined. All inputs must share a space.
ConnectionMatrix add_matrices(std::span<const ConnectionMatrix> matrices);

RelationalMatrix add_matrices(std::span<const RelationalMatrix> matrices);

// ---------------------------------------------------------------------------
// Hidden patterns
// ---------------------------------------------------------------------------

enum class PatternKind { fixed_point, limit_cycle };

/// Which side of a rectangular model a state lives on.
enum class Side { domain, range };

std::string_view to_string(Side side);

/// Equilibrium of an iteration together with the path that reached it.
/// `states` is the fixed point (length 1) or the minimal repeating cycle;
/// `trace` is every state visited from the seed, pairwise distinct before
/// `cycle_entry`; applying one step to trace.back() lands on
/// trace[cycle_entry] again.
template <class State>
struct BasicHiddenPattern {
    PatternKind kind = PatternKind::fixed_point;
    std::vector<State> states;
    std::vector<State> trace;
    std::size_t cycle_entry = 0;

    std::size_t period() const { return states.size(); }
    /// Number of step applications performed before the recurrence was seen.
    std::size_t iterations() const { return trace.size(); }
};

using HiddenPattern = BasicHiddenPattern<StateVector>;

/// Paired domain/range equilibrium of an alternating iteration. Traces are
/// aligned index-for-index: range trace[i] is the thresholded forward image
/// of domain trace[i]. When the two minimal cycle lengths differ (possible
/// when the range collapses), `period_mismatch` is set.
template <class State>
struct BasicHiddenPair {
    BasicHiddenPattern<State> domain_pattern;
    BasicHiddenPattern<State> range_pattern;
    bool period_mismatch = false;

    bool is_fixed_pair() const {
        return domain_pattern.kind == PatternKind::fixed_point &&
               range_pattern.kind == PatternKind::fixed_point;
    }
    std::size_t iterations() const { return domain_pattern.iterations(); }
};

using HiddenPair = BasicHiddenPair<StateVector>;

/// min(2^n, 1e6): guarantees recurrence detection for small n without
/// letting large models spin forever.
std::size_t default_iteration_cap(std::size_t dimension);

} // namespace cogmap
