#pragma once

#include "cogmap/core.hpp"

namespace cogmap {

struct FrmModel {
    RelationalMatrix matrix;

    const ConceptSpace& domain() const { return matrix.domain(); }
    const ConceptSpace& range() const { return matrix.range(); }

    friend bool operator==(const FrmModel&, const FrmModel&) = default;
};

/// scores[j] = sum_i x[i] * matrix[i][j] for a domain state x.
RawVector forward(const FrmModel& model, const StateVector& x);

/// scores[i] = sum_j y[j] * matrix[i][j] for a range state y.
RawVector backward(const FrmModel& model, const StateVector& y);

/// Alternate domain -> range -> domain from a seed on either side until a
/// domain state recurs. Only the seeded side's on-coordinates are clamped;
/// the opposite side floats. A range-seeded run takes its first step through
/// the transposed matrix. The reported pair is (last domain state, range
/// state produced from it).
HiddenPair hidden_pair(const FrmModel& model, const StateVector& seed,
                       std::size_t max_iters = 0);

namespace detail {
HiddenPair hidden_pair_allow_zero(const FrmModel& model, const StateVector& seed, Side side,
                                  std::size_t max_iters);
} // namespace detail

} // namespace cogmap
