#include "cogmap/fcm.hpp"

#include <algorithm>
#include <numeric>

#include "iterate.hpp"

namespace cogmap {

namespace detail {

HiddenPattern hidden_pattern_allow_zero(const FcmModel& model, const StateVector& seed,
                                        std::size_t max_iters) {
    if (seed.space() != model.space()) {
        throw StructuralError("seed space " + seed.space().describe() +
                              " does not match model space " + model.space().describe());
    }
    if (max_iters == 0) max_iters = default_iteration_cap(model.space().size());
    const std::vector<std::size_t> clamps = seed.on_indices();
    auto step = [&](const StateVector& x) {
        return threshold_update(mul_state_matrix(x, model.matrix), clamps);
    };
    auto key = [](const StateVector& x) -> const std::vector<std::uint8_t>& {
        return x.values();
    };
    // Re-anchor the seed on its own on-set so the whole trace carries one
    // clamp record.
    StateVector anchored(seed.space(), seed.values(), clamps);
    return iterate_pattern(std::move(anchored), step, key, max_iters);
}

} // namespace detail

HiddenPattern hidden_pattern(const FcmModel& model, const StateVector& seed,
                             std::size_t max_iters) {
    if (seed.is_zero()) throw UsageError("seed must switch on at least one concept");
    return detail::hidden_pattern_allow_zero(model, seed, max_iters);
}

FcmModel combine_fcms(std::span<const FcmModel> models) {
    std::vector<ConnectionMatrix> matrices;
    matrices.reserve(models.size());
    for (const FcmModel& m : models) matrices.push_back(m.matrix);
    return FcmModel{add_matrices(matrices)};
}

FcmModel special_fcm(std::span<const FcmModel> models) {
    if (models.empty()) throw UsageError("special_fcm needs at least one model");
    for (const FcmModel& m : models) {
        if (m.matrix.kind() != MatrixKind::positive) {
            throw StructuralError("special_fcm expects positive matrices, got " +
                                  std::string(to_string(m.matrix.kind())));
        }
    }
    const ConnectionMatrix sum = add_matrices([&] {
        std::vector<ConnectionMatrix> ms;
        for (const FcmModel& m : models) ms.push_back(m.matrix);
        return ms;
    }());
    const auto n = static_cast<std::int64_t>(models.size());
    std::vector<std::int64_t> entries(sum.entries().size());
    bool diagonal = false;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        entries[k] = 2 * sum.entries()[k] >= n ? 1 : 0; // >= 0.5 rounds up
    }
    const std::size_t dim = sum.space().size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (entries[i * dim + i] != 0) diagonal = true;
    }
    return FcmModel{
        ConnectionMatrix(sum.space(), MatrixKind::positive, std::move(entries), diagonal)};
}

ScoreProfile score_profile(const FcmModel& model, const StateVector& seed,
                           std::size_t max_iters) {
    HiddenPattern pattern = hidden_pattern(model, seed, max_iters);
    if (pattern.kind != PatternKind::fixed_point) {
        throw ProfileUndefinedError("score profile is undefined for a limit cycle of length " +
                                        std::to_string(pattern.period()),
                                    pattern.period());
    }
    const StateVector& final_state = pattern.states.front();
    RawVector raw = mul_state_matrix(final_state, model.matrix);
    std::vector<std::size_t> ranking(raw.size());
    std::iota(ranking.begin(), ranking.end(), 0);
    std::stable_sort(ranking.begin(), ranking.end(), [&](std::size_t a, std::size_t b) {
        if (raw.score(a) != raw.score(b)) return raw.score(a) > raw.score(b);
        return a < b;
    });
    return ScoreProfile{final_state, std::move(raw), std::move(ranking)};
}

} // namespace cogmap
