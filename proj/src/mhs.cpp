#include <nilorb/mhs.hpp>

#include <sstream>

namespace nilorb {

LimitMhsOutcome build_limit_mhs(const NilpotentOrbit& orbit) {
    LimitMhsOutcome out;
    WeightFiltration wf = monodromy_weight_filtration(orbit.N, orbit.weight);

    LimitMHS mhs;
    mhs.orbit = orbit;
    mhs.W = wf;

    int p_hi = orbit.F.hi();
    int p_lo = orbit.F.lo();

    for (int k = wf.center - wf.depth; k <= wf.center + wf.depth; ++k) {
        GradedLevel level = make_graded_level(k, wf.levels.at(k), wf.levels.at(k - 1));
        if (level.dim == 0) continue;

        GradedHodge gh;
        gh.coords = level;

        // Induced Hodge filtration on the graded piece, plus its conjugate
        // (quotient coordinates are real, so conjugation is entrywise).
        std::map<int, Subspace> fbar;
        for (int p = p_lo; p <= p_hi; ++p) fbar[p] = level.induced_subspace(orbit.F.at(p));
        auto fbar_at = [&](int p) -> Subspace {
            if (p < p_lo) return Subspace::full(level.dim);
            if (p > p_hi) return Subspace::zero(level.dim);
            return fbar[p];
        };

        int dims_sum = 0;
        std::vector<GVector> all;
        for (int p = p_hi; p >= k - p_hi; --p) {
            int q = k - p;
            Subspace piece = intersection(fbar_at(p), conj(fbar_at(q)));
            if (piece.is_zero()) continue;
            dims_sum += piece.dim();
            for (const auto& b : piece.basis) all.push_back(b);
            gh.pieces.push_back(HodgePiece{p, q, std::move(piece)});
        }
        Subspace span = echelonize(all, level.dim);

        if (dims_sum != level.dim || span.dim() != level.dim) {
            PurityFailure f;
            f.level = k;
            f.expected_dim = level.dim;
            f.pieces_dim_sum = dims_sum;
            f.span_dim = span.dim();
            std::ostringstream os;
            os << "graded piece at level " << k << " is not pure: expected dim "
               << level.dim << ", Hodge pieces sum to " << dims_sum << " spanning dim "
               << span.dim();
            f.message = os.str();
            out.failures.push_back(std::move(f));
            continue;
        }
        mhs.graded[k] = std::move(gh);
    }

    if (out.failures.empty()) out.mhs = std::move(mhs);
    return out;
}

bool check_kernel_injectivity(const NilpotentOrbit& orbit) {
    Subspace ker = kernel(orbit.N);
    Subspace f0 = orbit.F.at(0);
    Subspace x = intersection(ker, f0);
    if (x.is_zero()) return true;
    // A nonzero rational vector exists in x iff x meets its own conjugate.
    Subspace real_part = intersection(x, conj(x));
    return real_part.is_zero();
}

}  // namespace nilorb
