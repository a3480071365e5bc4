#include <nilorb/alpha.hpp>

#include <sstream>

namespace nilorb {

namespace {

// Lift the class `target` (quotient coordinates at `level`) to a vector of
// the ambient subspace `constraint`, canonically. Returns nullopt when the
// class is not hit by `constraint`.
std::optional<GVector> lift_class(const GradedLevel& level, const Subspace& constraint,
                                  const GVector& target) {
    if (constraint.is_zero()) return std::nullopt;
    GMatrix classes(level.dim, constraint.dim());
    for (int c = 0; c < constraint.dim(); ++c) {
        GVector cls = level.project(constraint.basis[c]);
        for (int r = 0; r < level.dim; ++r) classes.at(r, c) = cls[r];
    }
    auto lambda = solve_particular(classes, target);
    if (!lambda) return std::nullopt;
    GVector v(constraint.ambient_dim);
    for (int c = 0; c < constraint.dim(); ++c) {
        if ((*lambda)[c].is_zero()) continue;
        for (int i = 0; i < constraint.ambient_dim; ++i)
            v[i] += (*lambda)[c] * constraint.basis[c][i];
    }
    return v;
}

// Fill the columns of `alpha` for one primitive column: the (j,j) entry is
// the lift, and lower pieces are its images under powers of N.
void fill_column(GMatrix& alpha, const BiGradedSpace& g, const GMatrix& n, int j, int t,
                 const GVector& lift) {
    GVector current = lift;
    for (int k = j; k >= 0; --k) {
        int piece = g.piece_index(j, k);
        int col = g.pieces[piece].offset + t;
        for (int i = 0; i < alpha.rows; ++i) alpha.at(i, col) = current[i];
        if (k > 0) current = n.apply(current);
    }
}

void check_alpha(const GMatrix& alpha, const BiGradedSpace& g, const GMatrix& n,
                 const char* name) {
    // Commutes with N: columns of adjacent pieces are N-images of each
    // other by construction; the k = 0 columns must be killed by N.
    GMatrix shift = g.shift_matrix();
    GMatrix lhs = n.mul(alpha);
    GMatrix rhs = alpha.mul(shift);
    if (!(lhs == rhs)) {
        std::ostringstream os;
        os << name << " does not commute with N";
        throw std::logic_error(os.str());
    }
    // Induces the identity on every graded piece.
    for (const auto& piece : g.pieces) {
        const GradedLevel& level = g.level_coords.at(piece.level);
        for (int t = 0; t < piece.dim; ++t) {
            GVector v = alpha.col(piece.offset + t);
            if (!level.whole.contains(v))
                throw std::logic_error(std::string(name) + ": column leaves its weight level");
            GVector cls = level.project(v);
            for (int r = 0; r < level.dim; ++r) {
                if (!(cls[r] == piece.basis[t][r]))
                    throw std::logic_error(std::string(name) +
                                           ": column does not induce the identity on Gr");
            }
        }
    }
}

}  // namespace

GMatrix IotaMap::component(const BiGradedSpace& dom, const BiGradedSpace& cod, int i, int j,
                           int k) const {
    GMatrix block(cod.total, dom.total);
    for (int c = 0; c < dom.total; ++c) {
        if (dom.coord_j[c] != j) continue;
        int kp = dom.coord_k[c];
        for (int r = 0; r < cod.total; ++r) {
            if (cod.coord_j[r] != i || cod.coord_k[r] != kp - k) continue;
            block.at(r, c) = iota.at(r, c);
        }
    }
    return block;
}

GMatrix IotaMap::kernel_diagonal_part(const BiGradedSpace& dom, const BiGradedSpace& cod) const {
    GMatrix d(cod.total, dom.total);
    for (int c = 0; c < dom.total; ++c)
        for (int r = 0; r < cod.total; ++r)
            if (cod.coord_k[r] == dom.coord_k[c]) d.at(r, c) = iota.at(r, c);
    return d;
}

AlphaOutcome construct_alpha(const LimitMHS& mhs, const BiGradedSpace& g_hodge,
                             const BiGradedSpace& g_rational) {
    AlphaOutcome out;
    const NilpotentOrbit& orbit = mhs.orbit;
    const WeightFiltration& wf = mhs.W;
    int rank = orbit.rank;
    int w = wf.center;

    if (g_hodge.total != rank || g_rational.total != rank)
        throw std::invalid_argument("construct_alpha: bigrading/rank mismatch");
    if (g_hodge.pieces.size() != g_rational.pieces.size())
        throw std::logic_error("construct_alpha: bigrading layouts disagree");

    GMatrix alpha_c(rank, rank);
    GMatrix alpha_q(rank, rank);

    // One ambient kernel per column height.
    std::map<int, Subspace> ker_pow;
    for (const auto& piece : g_hodge.pieces)
        if (piece.j == piece.k) ker_pow.emplace(piece.j, kernel(orbit.N.pow(piece.j + 1)));

    for (size_t pi = 0; pi < g_hodge.pieces.size(); ++pi) {
        const auto& ph = g_hodge.pieces[pi];
        const auto& pq = g_rational.pieces[pi];
        if (ph.j != pq.j || ph.k != pq.k || ph.dim != pq.dim)
            throw std::logic_error("construct_alpha: bigrading layouts disagree");
        if (ph.j != ph.k) continue;  // only top pieces are lifted

        int j = ph.j;
        const GradedLevel& level = g_hodge.level_coords.at(w + j);
        const Subspace& killed = ker_pow.at(j);
        Subspace w_and_killed = intersection(wf.levels.at(w + j), killed);

        for (int t = 0; t < ph.dim; ++t) {
            // Hodge side: constrain the lift to F^p as well.
            int p = g_hodge.coord_p[ph.offset + t];
            Subspace constraint = intersection(w_and_killed, orbit.F.at(p));
            auto lift = lift_class(level, constraint, ph.basis[t]);
            if (!lift) {
                std::ostringstream os;
                os << "no representative of a primitive class at level " << (w + j)
                   << " inside F^" << p << " killed by N^" << (j + 1);
                out.failure = os.str();
                return out;
            }
            fill_column(alpha_c, g_hodge, orbit.N, j, t, *lift);

            // Rational side: same system without the F constraint.
            auto lift_q = lift_class(level, w_and_killed, pq.basis[t]);
            if (!lift_q)
                throw std::logic_error(
                    "construct_alpha: rational lift unsolvable; weight filtration is broken");
            for (const auto& x : *lift_q)
                if (!x.is_real())
                    throw std::logic_error("construct_alpha: rational lift is not real");
            fill_column(alpha_q, g_rational, orbit.N, j, t, *lift_q);
        }
    }

    check_alpha(alpha_c, g_hodge, orbit.N, "alpha_C");
    check_alpha(alpha_q, g_rational, orbit.N, "alpha_Q");

    IotaMap iota;
    iota.alpha_C = alpha_c;
    iota.alpha_Q = alpha_q;
    iota.iota = inverse(alpha_c).mul(alpha_q);

    // iota preserves the kernel filtration: no entry may raise the index.
    for (int c = 0; c < rank; ++c)
        for (int r = 0; r < rank; ++r)
            if (g_hodge.coord_k[r] > g_rational.coord_k[c] && !iota.iota.at(r, c).is_zero())
                throw std::logic_error("construct_alpha: iota raises the kernel filtration");

    mpz_class d(1);
    for (const auto& x : iota.iota.a) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.re.get_den().get_mpz_t());
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.im.get_den().get_mpz_t());
    }
    iota.lattice_index = d;

    out.value = std::move(iota);
    return out;
}

}  // namespace nilorb
