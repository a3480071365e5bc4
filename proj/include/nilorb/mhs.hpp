#pragma once

#include <nilorb/weight.hpp>

#include <map>
#include <optional>

namespace nilorb {

/// One Hodge piece H^{p,q} = F^p cap conj(F^q) of a graded level,
/// expressed in the quotient coordinates of that level.
struct HodgePiece {
    int p = 0;
    int q = 0;
    Subspace space;
};

struct GradedHodge {
    GradedLevel coords;
    std::vector<HodgePiece> pieces;  // nonzero pieces, p descending
};

struct LimitMHS {
    NilpotentOrbit orbit;
    WeightFiltration W;
    std::map<int, GradedHodge> graded;  // keyed by weight level
};

struct PurityFailure {
    int level = 0;
    int expected_dim = 0;
    int pieces_dim_sum = 0;
    int span_dim = 0;
    std::string message;
};

struct LimitMhsOutcome {
    std::optional<LimitMHS> mhs;
    std::vector<PurityFailure> failures;
    bool ok() const { return mhs.has_value(); }
};

/// Attempts H^{p,q} = F^p cap conj(F^q) on every graded piece of the
/// monodromy filtration. Succeeds iff each piece is pure of its weight;
/// otherwise the offending levels and dimension deficits are reported.
LimitMhsOutcome build_limit_mhs(const NilpotentOrbit& orbit);

/// True iff no nonzero integer vector of Ker N lies in F^0, decided
/// exactly: Ker N cap F^0 cap conj(F^0) is defined over Q, so it is
/// nonzero iff it contains a rational (hence scalable-to-integer) vector.
bool check_kernel_injectivity(const NilpotentOrbit& orbit);

}  // namespace nilorb
