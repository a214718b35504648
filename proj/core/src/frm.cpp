#include "cogmap/frm.hpp"

#include "iterate.hpp"

namespace cogmap {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("64-bit score overflow");
    }
    return out;
}

const std::vector<std::uint8_t>& state_key(const StateVector& x) { return x.values(); }

} // namespace

RawVector forward(const FrmModel& model, const StateVector& x) {
    if (x.space() != model.domain()) {
        throw StructuralError("state space " + x.space().describe() +
                              " does not match domain space " + model.domain().describe());
    }
    std::vector<std::int64_t> scores(model.matrix.cols(), 0);
    for (std::size_t i = 0; i < model.matrix.rows(); ++i) {
        if (!x.value(i)) continue;
        for (std::size_t j = 0; j < model.matrix.cols(); ++j) {
            scores[j] = checked_add(scores[j], model.matrix.at(i, j));
        }
    }
    return RawVector(model.range(), std::move(scores));
}

RawVector backward(const FrmModel& model, const StateVector& y) {
    if (y.space() != model.range()) {
        throw StructuralError("state space " + y.space().describe() +
                              " does not match range space " + model.range().describe());
    }
    std::vector<std::int64_t> scores(model.matrix.rows(), 0);
    for (std::size_t j = 0; j < model.matrix.cols(); ++j) {
        if (!y.value(j)) continue;
        for (std::size_t i = 0; i < model.matrix.rows(); ++i) {
            scores[i] = checked_add(scores[i], model.matrix.at(i, j));
        }
    }
    return RawVector(model.domain(), std::move(scores));
}

namespace detail {

HiddenPair hidden_pair_allow_zero(const FrmModel& model, const StateVector& seed, Side side,
                                  std::size_t max_iters) {
    if (max_iters == 0) max_iters = default_iteration_cap(model.domain().size());

    std::vector<std::size_t> domain_clamps;
    std::vector<std::size_t> range_clamps;
    if (side == Side::domain) {
        domain_clamps = seed.on_indices();
    } else {
        range_clamps = seed.on_indices();
    }

    auto fwd = [&](const StateVector& x) {
        return threshold_update(forward(model, x), range_clamps);
    };
    auto bwd = [&](const StateVector& y) {
        return threshold_update(backward(model, y), domain_clamps);
    };

    StateVector d0 = side == Side::domain
                         ? StateVector(seed.space(), seed.values(), domain_clamps)
                         : bwd(seed);
    return iterate_pair(std::move(d0), fwd, bwd, state_key, max_iters);
}

} // namespace detail

HiddenPair hidden_pair(const FrmModel& model, const StateVector& seed, std::size_t max_iters) {
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
    if (seed.is_zero()) throw UsageError("seed must switch on at least one concept");
    return detail::hidden_pair_allow_zero(model, seed, side, max_iters);
}

} // namespace cogmap
