#include <nilorb/model.hpp>

namespace nilorb {

namespace {

GVector to_gvector(const std::vector<long>& u) {
    GVector v(u.size());
    for (size_t i = 0; i < u.size(); ++i) v[i] = GScalar(u[i]);
    return v;
}

}  // namespace

bool SectionModel::u_in_kernel(const std::vector<long>& u) const {
    return u_in_kernel(to_gvector(u));
}

bool SectionModel::u_in_kernel(const GVector& u) const {
    if (static_cast<int>(u.size()) != rank)
        throw std::invalid_argument("u_in_kernel: dimension mismatch");
    if (hodge()) {
        for (int i = 0; i < rank; ++i)
            if (u_k[i] >= 1 && !u[i].is_zero()) return false;
        return true;
    }
    return is_zero(orbit.N.apply(u));
}

bool SectionModel::fiber_point_invariant(const GVector& p) const {
    if (static_cast<int>(p.size()) != fiber_dim)
        throw std::invalid_argument("fiber_point_invariant: dimension mismatch");
    return invariant_fiber.contains(p);
}

std::vector<GVector> SectionModel::section_coefficients(const std::vector<long>& u) const {
    return section_coefficients(to_gvector(u));
}

std::vector<GVector> SectionModel::section_coefficients(const GVector& u) const {
    std::vector<GVector> cs;
    cs.reserve(coeff.size());
    for (const auto& m : coeff) cs.push_back(m.apply(u));
    return cs;
}

SectionModel build_section_model(const NilpotentOrbit& orbit, bool force_rational) {
    SectionModel model;
    model.orbit = orbit;
    model.rank = orbit.rank;
    model.W = monodromy_weight_filtration(orbit.N, orbit.weight);
    model.depth = model.W.depth;
    model.g_rational = rational_bigrading(orbit, model.W);

    if (!force_rational) {
        LimitMhsOutcome mhs = build_limit_mhs(orbit);
        if (mhs.ok()) {
            BiGradedSpace gh = primitive_decomposition(*mhs.mhs);
            AlphaOutcome a = construct_alpha(*mhs.mhs, gh, model.g_rational);
            if (a.ok()) {
                model.mode = ModelMode::Hodge;
                model.g_hodge = std::move(gh);
                model.iota = std::move(a.value);
            } else {
                model.alpha_failure = a.failure;
            }
        } else {
            model.purity_failures = mhs.failures;
        }
    }

    if (model.hodge()) {
        const BiGradedSpace& gh = *model.g_hodge;
        const BiGradedSpace& gq = model.g_rational;
        std::vector<int> neg, nonneg;
        for (int i = 0; i < gh.total; ++i)
            (gh.coord_negative[i] ? neg : nonneg).push_back(i);
        model.fiber_dim = static_cast<int>(neg.size());
        for (int i : neg) model.fiber_k.push_back(gh.coord_k[i]);
        model.u_k = gq.coord_k;

        // coeff[a] = select_{<0} . Shift^a . iota / a!
        GMatrix shift = gh.shift_matrix();
        GMatrix power = model.iota->iota;
        Rational fact(1);
        for (int a = 0; a <= model.depth; ++a) {
            if (a > 0) {
                power = shift.mul(power);
                fact *= a;
            }
            GMatrix c(model.fiber_dim, gq.total);
            GMatrix c2(static_cast<int>(nonneg.size()), gq.total);
            GScalar inv_fact{Rational(1) / fact};
            for (size_t r = 0; r < neg.size(); ++r)
                for (int j = 0; j < gq.total; ++j) c.at(static_cast<int>(r), j) = power.at(neg[r], j) * inv_fact;
            for (size_t r = 0; r < nonneg.size(); ++r)
                for (int j = 0; j < gq.total; ++j)
                    c2.at(static_cast<int>(r), j) = power.at(nonneg[r], j) * inv_fact;
            model.coeff.push_back(std::move(c));
            model.coeff_f0.push_back(std::move(c2));
        }

        model.deck = nilpotent_exp(gq.shift_matrix());

        // Invariant part of the fiber: Ker N on G is the k = 0 span, so
        // its negative part is spanned by the fiber coordinates at k = 0.
        std::vector<GVector> inv;
        for (int r = 0; r < model.fiber_dim; ++r) {
            if (model.fiber_k[r] != 0) continue;
            GVector v(model.fiber_dim);
            v[r] = GScalar(1);
            inv.push_back(std::move(v));
        }
        model.invariant_fiber = echelonize(inv, model.fiber_dim);
        return model;
    }

    // Rational mode: fiber = H / F^0 in canonical complement coordinates.
    model.fiber_coords =
        make_graded_level(0, Subspace::full(model.rank), orbit.F.at(0));
    model.fiber_dim = model.fiber_coords.dim;
    model.fiber_k.assign(model.fiber_dim, 0);
    model.u_k.assign(model.rank, -1);

    GMatrix power = GMatrix::identity(model.rank);
    Rational fact(1);
    for (int a = 0; a <= model.depth; ++a) {
        if (a > 0) {
            power = orbit.N.mul(power);
            fact *= a;
        }
        GMatrix c(model.fiber_dim, model.rank);
        GScalar inv_fact{Rational(1) / fact};
        for (int j = 0; j < model.rank; ++j) {
            GVector cls = model.fiber_coords.project(power.col(j));
            for (int r = 0; r < model.fiber_dim; ++r) c.at(r, j) = cls[r] * inv_fact;
        }
        model.coeff.push_back(std::move(c));
    }

    model.deck = nilpotent_exp(orbit.N);

    Subspace ker = kernel(orbit.N);
    std::vector<GVector> inv;
    for (const auto& b : ker.basis) inv.push_back(model.fiber_coords.project(b));
    model.invariant_fiber = echelonize(inv, model.fiber_dim);
    return model;
}

}  // namespace nilorb
