#pragma once

#include <nilorb/alpha.hpp>

#include <complex>

namespace nilorb {

enum class ModelMode { Hodge, Rational };

/// Everything the quantitative layer needs about one orbit, assembled
/// once. Lattice sections are indexed by integer coefficient vectors u;
/// the fiber value of the section of u at z is the exact polynomial
///   value_u(z) = sum_a (coeff[a] u) z^a.
///
/// In Hodge mode u lives in the rational bigraded coordinates, the fiber
/// is G^{<0} in the Hodge-adapted coordinates, and coeff[a] already
/// contains iota and the 1/a! factors. When the orbit has no valid limit
/// MHS (or alpha fails) the model falls back to rational mode: u lives in
/// the raw lattice and the fiber is H/F^0 in canonical complement
/// coordinates, as in the worked counterexample.
struct SectionModel {
    ModelMode mode = ModelMode::Rational;
    NilpotentOrbit orbit;
    WeightFiltration W;
    BiGradedSpace g_rational;
    std::optional<BiGradedSpace> g_hodge;
    std::optional<IotaMap> iota;
    std::vector<PurityFailure> purity_failures;
    std::string alpha_failure;

    int rank = 0;
    int fiber_dim = 0;
    int depth = 0;                       // m
    std::vector<GMatrix> coeff;          // fiber_dim x rank, exact
    std::vector<GMatrix> coeff_f0;       // Hodge mode: F^0 G part of the section
    std::vector<int> fiber_k;            // kernel index per fiber coordinate
    std::vector<int> u_k;                // kernel index per u coordinate (Hodge mode)
    GMatrix deck;                        // exact deck transform on u coordinates
    Subspace invariant_fiber;            // closure of Ker N classes in the fiber
    GradedLevel fiber_coords;            // rational mode: H/F^0 coordinates

    bool hodge() const { return mode == ModelMode::Hodge; }

    bool u_in_kernel(const std::vector<long>& u) const;
    bool u_in_kernel(const GVector& u) const;

    /// Fiber point supported on the invariant part (Ker N classes)?
    bool fiber_point_invariant(const GVector& p) const;

    /// Exact coefficient vectors of the section of u (integer or exact u).
    std::vector<GVector> section_coefficients(const std::vector<long>& u) const;
    std::vector<GVector> section_coefficients(const GVector& u) const;
};

/// Builds the model, preferring Hodge mode and recording why it fell back
/// to rational mode when it did.
SectionModel build_section_model(const NilpotentOrbit& orbit, bool force_rational = false);

}  // namespace nilorb
