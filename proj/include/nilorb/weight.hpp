#pragma once

#include <nilorb/orbit.hpp>

namespace nilorb {

/// The monodromy filtration of N centered at w: the unique increasing
/// filtration with N W_j <= W_{j-2} and N^i : Gr_{w+i} ~ Gr_{w-i}.
struct WeightFiltration {
    int center = 0;
    int depth = 0;        // m: levels run from center-m to center+m
    Filtration levels;    // increasing

    const Subspace& at(int j) const { return levels.at(j); }
    int graded_dim(int j) const {
        return levels.at(j).dim() - levels.at(j - 1).dim();
    }
};

WeightFiltration monodromy_weight_filtration(const GMatrix& n, int w);

/// Direct verification of the two characterizing conditions; used by the
/// construction as a self-check and by tests as an oracle hook.
bool weight_conditions_hold(const GMatrix& n, const WeightFiltration& wf);

/// Quotient coordinates for one graded piece W_k / W_{k-1}, with a
/// canonical complement basis in the ambient space.
struct GradedLevel {
    int level = 0;
    Subspace whole;                    // W_k
    Subspace sub;                      // W_{k-1}
    std::vector<GVector> comp_basis;   // canonical complement reps (ambient)
    int dim = 0;

    /// Coordinates of the class of v (v must lie in W_k).
    GVector project(const GVector& v) const;

    /// Image of s (intersected with W_k) in the quotient coordinates.
    Subspace induced_subspace(const Subspace& s) const;

    /// Class of the coordinate vector c, i.e. sum c_i comp_basis[i].
    GVector lift(const GVector& c) const;
};

GradedLevel make_graded_level(int level, const Subspace& whole, const Subspace& sub);

/// Matrix of the map induced by m between two graded levels; requires
/// m(from.whole) <= to.whole and m(from.sub) <= to.sub.
GMatrix induced_between(const GMatrix& m, const GradedLevel& from, const GradedLevel& to);

}  // namespace nilorb
