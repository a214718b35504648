#pragma once

// Naive reference simulators, written independently of the library: plain
// int matrices, explicit loops, and full-history scans for repeat detection.
// The engines under test must agree with these exactly.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<std::vector<int>>; // row-major, ragged-checked by caller

struct Run {
    std::vector<Vec> history; // states visited, seed first
    std::size_t cycle_entry = 0;
    std::size_t period = 0;
};

inline Vec threshold(const Vec& raw, const Vec& clamp_mask) {
    Vec out(raw.size(), 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = raw[i] >= 1 ? 1 : 0;
        if (clamp_mask[i]) out[i] = 1;
    }
    return out;
}

inline Run fcm_run(const Mat& matrix, const Vec& seed) {
    Run run;
    run.history.push_back(seed);
    const Vec clamp_mask = seed;
    while (true) {
        const Vec& cur = run.history.back();
        Vec raw(matrix.size(), 0);
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            if (!cur[i]) continue;
            for (std::size_t j = 0; j < matrix.size(); ++j) raw[j] += matrix[i][j];
        }
        Vec next = threshold(raw, clamp_mask);
        for (std::size_t j = 0; j < run.history.size(); ++j) {
            if (run.history[j] == next) {
                run.cycle_entry = j;
                run.period = run.history.size() - j;
                return run;
            }
        }
        run.history.push_back(next);
    }
}

struct PairRun {
    std::vector<Vec> domain_history;
    std::vector<Vec> range_history; // aligned with domain_history
    std::size_t cycle_entry = 0;
    std::size_t period = 0;
};

inline Vec frm_forward(const Mat& matrix, const Vec& x) {
    Vec raw(matrix.front().size(), 0);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < raw.size(); ++j) raw[j] += matrix[i][j];
    }
    return raw;
}

inline Vec frm_backward(const Mat& matrix, const Vec& y) {
    Vec raw(matrix.size(), 0);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j]) raw[i] += matrix[i][j];
        }
    }
    return raw;
}

// domain_seed: seed lives on the domain side; otherwise it is a range seed
// and the first product runs through the transpose.
inline PairRun frm_run(const Mat& matrix, const Vec& seed, bool domain_seed) {
    const std::size_t n = matrix.size();
    const std::size_t m = matrix.front().size();
    Vec domain_clamp(n, 0);
    Vec range_clamp(m, 0);
    PairRun run;

    Vec d0;
    if (domain_seed) {
        domain_clamp = seed;
        d0 = seed;
    } else {
        range_clamp = seed;
        d0 = threshold(frm_backward(matrix, seed), Vec(n, 0));
    }
    run.domain_history.push_back(d0);
    run.range_history.push_back(threshold(frm_forward(matrix, d0), range_clamp));
    while (true) {
        Vec next = threshold(frm_backward(matrix, run.range_history.back()), domain_clamp);
        for (std::size_t j = 0; j < run.domain_history.size(); ++j) {
            if (run.domain_history[j] == next) {
                run.cycle_entry = j;
                run.period = run.domain_history.size() - j;
                return run;
            }
        }
        run.domain_history.push_back(next);
        run.range_history.push_back(threshold(frm_forward(matrix, next), range_clamp));
    }
}

// ---------------------------------------------------------------------------
// Linguistic: values are chain positions, 0 is bottom.
// ---------------------------------------------------------------------------

struct LingOp {
    bool outer_max = true;
    bool inner_min = true;
};

inline Vec ling_compose(const Mat& matrix, const Vec& state, LingOp op) {
    const std::size_t n = matrix.size();
    const std::size_t m = matrix.front().size();
    Vec out(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        int acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int inner = op.inner_min ? std::min(state[i], matrix[i][j])
                                           : std::max(state[i], matrix[i][j]);
            if (i == 0) {
                acc = inner;
            } else {
                acc = op.outer_max ? std::max(acc, inner) : std::min(acc, inner);
            }
        }
        out[j] = acc;
    }
    return out;
}

inline Vec ling_clamp(Vec state, const Vec& floor_values) {
    for (std::size_t i = 0; i < state.size(); ++i) {
        state[i] = std::max(state[i], floor_values[i]);
    }
    return state;
}

inline Run flcm_run(const Mat& matrix, const Vec& seed, LingOp op) {
    Run run;
    run.history.push_back(seed);
    while (true) {
        Vec next = ling_clamp(ling_compose(matrix, run.history.back(), op), seed);
        for (std::size_t j = 0; j < run.history.size(); ++j) {
            if (run.history[j] == next) {
                run.cycle_entry = j;
                run.period = run.history.size() - j;
                return run;
            }
        }
        run.history.push_back(next);
    }
}

inline Mat ling_transpose(const Mat& matrix) {
    Mat out(matrix.front().size(), Vec(matrix.size(), 0));
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix.front().size(); ++j) out[j][i] = matrix[i][j];
    }
    return out;
}

inline PairRun flrm_run(const Mat& matrix, const Vec& seed, bool domain_seed, LingOp op) {
    const std::size_t n = matrix.size();
    const std::size_t m = matrix.front().size();
    const Mat matrix_t = ling_transpose(matrix);
    const Vec domain_floor = domain_seed ? seed : Vec(n, 0);
    const Vec range_floor = domain_seed ? Vec(m, 0) : seed;
    PairRun run;

    Vec d0 = domain_seed ? seed : ling_compose(matrix_t, seed, op);
    run.domain_history.push_back(d0);
    run.range_history.push_back(ling_clamp(ling_compose(matrix, d0, op), range_floor));
    while (true) {
        Vec next =
            ling_clamp(ling_compose(matrix_t, run.range_history.back(), op), domain_floor);
        for (std::size_t j = 0; j < run.domain_history.size(); ++j) {
            if (run.domain_history[j] == next) {
                run.cycle_entry = j;
                run.period = run.domain_history.size() - j;
                return run;
            }
        }
        run.domain_history.push_back(next);
        run.range_history.push_back(
            ling_clamp(ling_compose(matrix, next, op), range_floor));
    }
}

} // namespace oracle
