#pragma once

#include <span>

#include "cogmap/core.hpp"

namespace cogmap {

struct FcmModel {
    ConnectionMatrix matrix;

    const ConceptSpace& space() const { return matrix.space(); }

    friend bool operator==(const FcmModel&, const FcmModel&) = default;
};

/// Iterate x -> threshold_update(x * M, seed clamps) from a nonzero seed until
/// a state recurs. Every coordinate that is on in the seed stays clamped for
/// the whole run. Terminates within min(2^n, 1e6) steps; pass `max_iters`
/// to override the cap (0 keeps the default).
HiddenPattern hidden_pattern(const FcmModel& model, const StateVector& seed,
                             std::size_t max_iters = 0);

/// Entrywise sum of the expert matrices; result kind is combined.
FcmModel combine_fcms(std::span<const FcmModel> models);

/// Average n positive matrices and threshold at one half, ties rounding up:
/// entry = 1 iff 2 * (sum of that entry) >= n. Integer arithmetic throughout.
FcmModel special_fcm(std::span<const FcmModel> models);

struct ScoreProfile {
    StateVector final_state;
    RawVector raw_scores;              // final_state * matrix, un-thresholded
    std::vector<std::size_t> ranking;  // descending score, ties by ascending index
};

/// Magnitude reading of a combined model: requires the run to settle on a
/// fixed point, then reports the raw product of that fixed point with the
/// matrix and the concept ranking it induces.
ScoreProfile score_profile(const FcmModel& model, const StateVector& seed,
                           std::size_t max_iters = 0);

namespace detail {
/// Same solver without the nonzero-seed requirement (an all-zero seed is a
/// fixed point of every model); used by the bimodel engine.
HiddenPattern hidden_pattern_allow_zero(const FcmModel& model, const StateVector& seed,
                                        std::size_t max_iters);
} // namespace detail

} // namespace cogmap
