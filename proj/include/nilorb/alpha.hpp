#pragma once

#include <nilorb/bigrading.hpp>

namespace nilorb {

/// The two splittings of W and their discrepancy. alpha_Q maps the
/// rational bigraded coordinates into H, alpha_C maps the Hodge-adapted
/// ones; both commute with N and induce the identity on every graded
/// piece. iota = alpha_C^{-1} alpha_Q carries rational coordinates to
/// Hodge-adapted ones and is block-triangular for the kernel filtration:
/// its (i,j,k) components vanish for k < 0.
struct IotaMap {
    GMatrix alpha_C;            // columns indexed by the Hodge-adapted basis
    GMatrix alpha_Q;            // columns indexed by the rational basis (real entries)
    GMatrix iota;               // rational coords -> Hodge-adapted coords
    mpz_class lattice_index;    // least d > 0 with d * iota integral

    /// The component iota_{i,j,k}: entries from column pieces (j, k') to
    /// row pieces (i, k'-k), assembled as a sparse block of the full map.
    GMatrix component(const BiGradedSpace& dom, const BiGradedSpace& cod, int i, int j, int k) const;

    /// Kernel-index-preserving part (the normal form after discarding the
    /// strictly index-lowering blocks).
    GMatrix kernel_diagonal_part(const BiGradedSpace& dom, const BiGradedSpace& cod) const;
};

struct AlphaOutcome {
    std::optional<IotaMap> value;
    std::string failure;  // nonempty when a representative system was unsolvable
    bool ok() const { return value.has_value(); }
};

/// Builds alpha_C by lifting each Hodge-adapted primitive basis class of
/// P Gr_{w+j} to an element of F^p cap W_{w+j} killed by N^{j+1} (the
/// canonical echelon solution), and alpha_Q the same way over Q without
/// the F constraint. Unsolvable systems are reported, not thrown.
AlphaOutcome construct_alpha(const LimitMHS& mhs, const BiGradedSpace& g_hodge,
                             const BiGradedSpace& g_rational);

}  // namespace nilorb
