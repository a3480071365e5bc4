#include <nilorb/bigrading.hpp>

#include <functional>
#include <sstream>

namespace nilorb {

int BiGradedSpace::piece_index(int j, int k) const {
    for (size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].j == j && pieces[i].k == k) return static_cast<int>(i);
    return -1;
}

int BiGradedSpace::negative_dim() const {
    int d = 0;
    for (char c : coord_negative) d += (c != 0);
    return d;
}

int BiGradedSpace::kernel_dim() const {
    int d = 0;
    for (int k : coord_k) d += (k == 0);
    return d;
}

GMatrix BiGradedSpace::shift_matrix() const {
    GMatrix n(total, total);
    for (const auto& piece : pieces) {
        if (piece.k == 0) continue;
        int below = piece_index(piece.j, piece.k - 1);
        const auto& target = pieces[below];
        for (int t = 0; t < piece.dim; ++t) n.at(target.offset + t, piece.offset + t) = GScalar(1);
    }
    return n;
}

namespace {

// Shared construction: the chooser returns the basis of P Gr_{w+j} in the
// quotient coordinates of level w+j, optionally refined by Hodge type
// (reported through the three out-parameters).
using PrimitiveChooser = std::function<void(int j, const GradedLevel& level, const Subspace& prim,
                                            std::vector<GVector>& basis, std::vector<int>& p_type,
                                            std::vector<int>& q_type)>;

BiGradedSpace build_bigrading(const NilpotentOrbit& orbit, const WeightFiltration& wf,
                              bool hodge_adapted, const PrimitiveChooser& choose) {
    int w = wf.center;
    int m = wf.depth;

    BiGradedSpace g;
    g.m = m;
    g.weight = w;
    g.hodge_adapted = hodge_adapted;

    for (int k = w - m - 1; k <= w + m; ++k) {
        g.level_coords.emplace(k, make_graded_level(k, wf.levels.at(k), wf.levels.at(k - 1)));
    }

    // Induced N between consecutive occupied levels.
    std::map<int, GMatrix> n_ind;
    for (int l = w - m + 2; l <= w + m; ++l) {
        n_ind.emplace(l, induced_between(orbit.N, g.level_coords.at(l), g.level_coords.at(l - 2)));
    }

    struct Column {
        int j;
        std::vector<GVector> prim_basis;  // classes at level w+j
        std::vector<int> p_type, q_type;
    };
    std::vector<Column> columns;

    for (int j = m; j >= 0; --j) {
        const GradedLevel& level = g.level_coords.at(w + j);
        if (level.dim == 0) continue;
        // Primitive part: kernel of induced N^{j+1} into Gr_{w-j-2}.
        GradedLevel below = make_graded_level(w - j - 2, wf.levels.at(w - j - 2), wf.levels.at(w - j - 3));
        GMatrix nj1 = induced_between(orbit.N.pow(j + 1), level, below);
        Subspace prim = kernel(nj1);
        if (prim.is_zero()) continue;

        Column col;
        col.j = j;
        choose(j, level, prim, col.prim_basis, col.p_type, col.q_type);
        if (static_cast<int>(col.prim_basis.size()) != prim.dim())
            throw std::logic_error("bigrading: primitive basis size mismatch");
        columns.push_back(std::move(col));
    }

    int offset = 0;
    for (const auto& col : columns) {
        int j = col.j;
        std::vector<GVector> current = col.prim_basis;  // classes at level w+j
        for (int k = j; k >= 0; --k) {
            int level_idx = w + 2 * k - j;
            BigradedPiece piece;
            piece.j = j;
            piece.k = k;
            piece.level = level_idx;
            piece.offset = offset;
            piece.dim = static_cast<int>(current.size());
            piece.basis = current;
            piece.space = echelonize(current, g.level_coords.at(level_idx).dim);
            if (piece.space.dim() != piece.dim)
                throw std::logic_error("bigrading: N-shift is not injective on a primitive column");
            for (int t = 0; t < piece.dim; ++t) {
                g.coord_piece.push_back(static_cast<int>(g.pieces.size()));
                g.coord_j.push_back(j);
                g.coord_k.push_back(k);
                if (hodge_adapted) {
                    int shift = j - k;
                    g.coord_p.push_back(col.p_type[t] - shift);
                    g.coord_q.push_back(col.q_type[t] - shift);
                    g.coord_negative.push_back(col.p_type[t] - shift < 0 ? 1 : 0);
                } else {
                    g.coord_p.push_back(0);
                    g.coord_q.push_back(0);
                    g.coord_negative.push_back(0);
                }
            }
            offset += piece.dim;
            g.pieces.push_back(std::move(piece));
            if (k > 0) {
                const GMatrix& step = n_ind.at(level_idx);
                for (auto& v : current) v = step.apply(v);
            }
        }
    }
    g.total = offset;

    int rank = orbit.rank;
    if (g.total != rank) {
        std::ostringstream os;
        os << "bigrading: pieces sum to " << g.total << " but rank is " << rank;
        throw std::logic_error(os.str());
    }
    // The pieces at each level must fill the level exactly (the primitive
    // decomposition statement).
    for (const auto& [lvl, coords] : g.level_coords) {
        std::vector<GVector> all;
        for (const auto& piece : g.pieces)
            if (piece.level == lvl)
                for (const auto& b : piece.basis) all.push_back(b);
        Subspace span = echelonize(all, coords.dim);
        if (span.dim() != coords.dim || static_cast<int>(all.size()) != coords.dim)
            throw std::logic_error("bigrading: primitive pieces do not fill a graded level");
    }
    return g;
}

}  // namespace

BiGradedSpace rational_bigrading(const NilpotentOrbit& orbit, const WeightFiltration& wf) {
    return build_bigrading(orbit, wf, false,
                           [](int, const GradedLevel&, const Subspace& prim,
                              std::vector<GVector>& basis, std::vector<int>&, std::vector<int>&) {
                               basis = prim.basis;
                           });
}

BiGradedSpace primitive_decomposition(const LimitMHS& mhs) {
    const auto& graded = mhs.graded;
    return build_bigrading(
        mhs.orbit, mhs.W, true,
        [&graded](int j, const GradedLevel& level, const Subspace& prim, std::vector<GVector>& basis,
                  std::vector<int>& p_type, std::vector<int>& q_type) {
            auto it = graded.find(level.level);
            if (it == graded.end())
                throw std::logic_error("primitive_decomposition: missing Hodge data at a level");
            int covered = 0;
            for (const auto& piece : it->second.pieces) {
                Subspace cut = intersection(prim, piece.space);
                for (const auto& b : cut.basis) {
                    basis.push_back(b);
                    p_type.push_back(piece.p);
                    q_type.push_back(piece.q);
                }
                covered += cut.dim();
            }
            if (covered != prim.dim())
                throw std::logic_error(
                    "primitive_decomposition: primitive part not compatible with the Hodge pieces");
        });
}

}  // namespace nilorb
