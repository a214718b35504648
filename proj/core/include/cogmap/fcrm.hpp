#pragma once

#include <span>

#include "cogmap/fcm.hpp"
#include "cogmap/frm.hpp"

namespace cogmap {

/// Ordered pair of a square connection model and a rectangular relational
/// model, evolved componentwise on state bivectors. With `identified` the
/// connection concepts are asserted to coincide with the relational domain.
struct FcrmBimodel {
    FcmModel first;
    FrmModel second;
    bool identified = false;

    friend bool operator==(const FcrmBimodel&, const FcrmBimodel&) = default;
};

/// Validates the pair; with identify=true the FCM space and the FRM domain
/// must match label for label (the error names the first difference).
FcrmBimodel build_bimodel(FcmModel fcm, FrmModel frm, bool identify);

enum class TransposeMode { t1, t2, t };

/// Matrix pair used for one step under a partial transpose:
///   t1 -> (M1^t, M2),  t2 -> (M1, M2^t),  t -> (M1^t, M2^t).
struct BimatrixPair {
    ConnectionMatrix first;
    RelationalMatrix second;
};

BimatrixPair special_transpose(const FcrmBimodel& bimodel, TransposeMode mode);

struct StateBivector {
    StateVector first;       // over the FCM space
    StateVector second;      // over the FRM domain or range
    Side second_side = Side::domain;
};

enum class BiPatternKind { fixed_bipoint, limit_bicycle };

/// Componentwise equilibrium. The union composition never couples the two
/// components, so this is exactly (hidden pattern of the first, hidden pair
/// of the second) with the component seeds; `steps` interleaves both traces
/// by step index for reporting, repeating the shorter component's final
/// state (fixed points are absorbing).
struct BihiddenPattern {
    BiPatternKind kind = BiPatternKind::fixed_bipoint;
    HiddenPattern first;
    HiddenPair second;

    struct AlignedStep {
        StateVector fcm;
        StateVector frm;
        Side frm_side;
    };
    std::vector<AlignedStep> steps;
};

/// At least one component of the seed must be nonzero; an all-zero component
/// simply stays zero.
BihiddenPattern bihidden_pattern(const FcrmBimodel& bimodel, const StateBivector& seed,
                                 std::size_t max_iters = 0);

/// Componentwise sum; both components must agree in order across the list.
FcrmBimodel combine_fcrms(std::span<const FcrmBimodel> bimodels);

} // namespace cogmap
