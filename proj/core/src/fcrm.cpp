#include "cogmap/fcrm.hpp"

namespace cogmap {

FcrmBimodel build_bimodel(FcmModel fcm, FrmModel frm, bool identify) {
    if (identify) {
        const ConceptSpace& a = fcm.space();
        const ConceptSpace& b = frm.domain();
        if (a.size() != b.size()) {
            throw StructuralError("cannot identify: connection space has " +
                                  std::to_string(a.size()) + " concepts, relational domain has " +
                                  std::to_string(b.size()));
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.label(i) != b.label(i)) {
                throw StructuralError("cannot identify: position " + std::to_string(i + 1) +
                                      " differs ('" + a.label(i) + "' vs '" + b.label(i) + "')");
            }
        }
    }
    return FcrmBimodel{std::move(fcm), std::move(frm), identify};
}

BimatrixPair special_transpose(const FcrmBimodel& bimodel, TransposeMode mode) {
    switch (mode) {
        case TransposeMode::t1:
            return BimatrixPair{transpose(bimodel.first.matrix), bimodel.second.matrix};
        case TransposeMode::t2:
            return BimatrixPair{bimodel.first.matrix, transpose(bimodel.second.matrix)};
        case TransposeMode::t:
            return BimatrixPair{transpose(bimodel.first.matrix),
                                transpose(bimodel.second.matrix)};
    }
    throw UsageError("unknown transpose mode");
}

BihiddenPattern bihidden_pattern(const FcrmBimodel& bimodel, const StateBivector& seed,
                                 std::size_t max_iters) {
    if (seed.first.space() != bimodel.first.space()) {
        throw StructuralError("first seed space " + seed.first.space().describe() +
                              " does not match connection space " +
                              bimodel.first.space().describe());
    }
    const ConceptSpace& expected =
        seed.second_side == Side::domain ? bimodel.second.domain() : bimodel.second.range();
    if (seed.second.space() != expected) {
        throw StructuralError("second seed space " + seed.second.space().describe() +
                              " does not match " + std::string(to_string(seed.second_side)) +
                              " space " + expected.describe());
    }
    if (seed.first.is_zero() && seed.second.is_zero()) {
        throw UsageError("at least one component of the seed bivector must be nonzero");
    }

    BihiddenPattern out;
    out.first = detail::hidden_pattern_allow_zero(bimodel.first, seed.first, max_iters);
    out.second =
        detail::hidden_pair_allow_zero(bimodel.second, seed.second, seed.second_side, max_iters);
    out.kind = out.first.kind == PatternKind::fixed_point && out.second.is_fixed_pair()
                   ? BiPatternKind::fixed_bipoint
                   : BiPatternKind::limit_bicycle;

    // Interleave the relational side the way a stepwise run would visit it:
    // the seeded side first, then alternating produced states.
    std::vector<StateVector> frm_states;
    std::vector<Side> frm_sides;
    const auto& dom = out.second.domain_pattern.trace;
    const auto& rng = out.second.range_pattern.trace;
    if (seed.second_side == Side::domain) {
        for (std::size_t i = 0; i < dom.size(); ++i) {
            frm_states.push_back(dom[i]);
            frm_sides.push_back(Side::domain);
            frm_states.push_back(rng[i]);
            frm_sides.push_back(Side::range);
        }
    } else {
        frm_states.push_back(seed.second);
        frm_sides.push_back(Side::range);
        for (std::size_t i = 0; i < dom.size(); ++i) {
            frm_states.push_back(dom[i]);
            frm_sides.push_back(Side::domain);
            frm_states.push_back(rng[i]);
            frm_sides.push_back(Side::range);
        }
    }
    const std::size_t steps = std::max(out.first.trace.size(), frm_states.size());
    for (std::size_t i = 0; i < steps; ++i) {
        const StateVector& f =
            i < out.first.trace.size() ? out.first.trace[i] : out.first.trace.back();
        const StateVector& s = i < frm_states.size() ? frm_states[i] : frm_states.back();
        const Side side = i < frm_sides.size() ? frm_sides[i] : frm_sides.back();
        out.steps.push_back(BihiddenPattern::AlignedStep{f, s, side});
    }
    return out;
}

FcrmBimodel combine_fcrms(std::span<const FcrmBimodel> bimodels) {
    if (bimodels.empty()) throw UsageError("combine_fcrms needs at least one bimodel");
    std::vector<FcmModel> firsts;
    std::vector<RelationalMatrix> seconds;
    bool identified = true;
    for (const FcrmBimodel& b : bimodels) {
        firsts.push_back(b.first);
        seconds.push_back(b.second.matrix);
        identified = identified && b.identified;
    }
    FcmModel first = combine_fcms(firsts);
    RelationalMatrix second = add_matrices(seconds);
    return FcrmBimodel{std::move(first), FrmModel{std::move(second)}, identified};
}

} // namespace cogmap
