#pragma once

#include <nilorb/mhs.hpp>

namespace nilorb {

/// One piece G_k^{(j)} = N^{j-k} P Gr_{w+j}, living at weight level
/// w + 2k - j. `basis` holds its chosen basis as classes in the quotient
/// coordinates of that level; the concatenation of all piece bases is the
/// working coordinate system on G.
struct BigradedPiece {
    int j = 0;
    int k = 0;
    int level = 0;
    int offset = 0;
    int dim = 0;
    Subspace space;                  // subspace of the graded level
    std::vector<GVector> basis;      // classes at `level`, one per coordinate
};

/// The bigraded space G = sum of Gr levels with its primitive bigrading.
/// Two flavors share the same piece layout: the rational one (canonical
/// echelon bases of the primitive parts, all real) and the Hodge-adapted
/// one (primitive bases refined by Hodge type). N acts on the coordinates
/// as the unit shift (j,k) -> (j,k-1).
struct BiGradedSpace {
    int m = 0;
    int total = 0;
    int weight = 0;
    bool hodge_adapted = false;
    std::vector<BigradedPiece> pieces;   // ordered j desc, k desc
    std::map<int, GradedLevel> level_coords;

    // per-coordinate metadata
    std::vector<int> coord_piece, coord_j, coord_k;
    std::vector<int> coord_p, coord_q;   // Hodge type at the coordinate's own level
    std::vector<char> coord_negative;    // p < 0 (Hodge-adapted only)

    int piece_index(int j, int k) const;
    int negative_dim() const;
    int kernel_dim() const;  // dim of Ker N on G = sum of k = 0 pieces

    /// Matrix of the graded N action in these coordinates (unit shift).
    GMatrix shift_matrix() const;
};

/// Rational-only bigrading from W and N; always available.
BiGradedSpace rational_bigrading(const NilpotentOrbit& orbit, const WeightFiltration& wf);

/// Hodge-adapted bigrading; requires a valid limit MHS. Verifies the
/// N-shift isomorphisms and that the pieces fill every graded level, and
/// throws std::logic_error when they do not (broken W).
BiGradedSpace primitive_decomposition(const LimitMHS& mhs);

}  // namespace nilorb
