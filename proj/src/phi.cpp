#include <nilorb/phi.hpp>
#include <nilorb/perturbation.hpp>

#include <cmath>

namespace nilorb {

std::vector<double> StripGrid::y_values() const {
    std::vector<double> ys;
    int steps = (y_levels - 1) * y_density;
    for (int j = 0; j <= steps; ++j) {
        double y = r * std::pow(2.0, static_cast<double>(j) / y_density);
        if (y_max > 0 && y > y_max) break;
        ys.push_back(y);
    }
    if (ys.empty()) ys.push_back(r);
    return ys;
}

std::vector<double> StripGrid::x_values() const {
    std::vector<double> xs;
    for (int i = 0; i < re_steps; ++i) xs.push_back(static_cast<double>(i) / re_steps);
    return xs;
}

std::vector<std::complex<double>> StripGrid::points() const {
    std::vector<std::complex<double>> pts;
    for (double y : y_values())
        for (double x : x_values()) pts.emplace_back(x, y);
    return pts;
}

StripSample make_sample(std::complex<double> z) {
    StripSample s;
    s.z = z;
    s.y = z.imag();
    constexpr double two_pi = 6.283185307179586476925286766559;
    s.t1 = std::exp(std::complex<double>(0, two_pi) * z);
    return s;
}

GVector PhiPoly::eval_exact(const GScalar& z) const {
    if (c.empty()) return {};
    int dim = static_cast<int>(c[0].size());
    GVector acc(dim);
    for (int a = static_cast<int>(c.size()) - 1; a >= 0; --a) {
        for (int i = 0; i < dim; ++i) acc[i] = acc[i] * z + c[a][i];
    }
    return acc;
}

std::vector<std::complex<double>> PhiPoly::eval(std::complex<double> z) const {
    if (cf.empty()) return {};
    size_t dim = cf[0].size();
    std::vector<std::complex<double>> acc(dim, 0.0);
    for (int a = static_cast<int>(cf.size()) - 1; a >= 0; --a)
        for (size_t i = 0; i < dim; ++i) acc[i] = acc[i] * z + cf[a][i];
    return acc;
}

PhiPoly PhiPoly::shifted_by_one() const {
    PhiPoly out;
    int deg = degree();
    if (deg < 0) return out;
    int dim = static_cast<int>(c[0].size());
    out.c.assign(deg + 1, GVector(dim));
    // binomial re-expansion: sum_a c_a (z+1)^a
    std::vector<std::vector<Rational>> binom(deg + 1, std::vector<Rational>(deg + 1, Rational(0)));
    for (int a = 0; a <= deg; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : Rational(0));
    }
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; b <= a; ++b) {
            GScalar f{binom[a][b]};
            for (int i = 0; i < dim; ++i) out.c[b][i] += f * c[a][i];
        }
    out.cf.resize(out.c.size());
    for (size_t a = 0; a < out.c.size(); ++a) {
        out.cf[a].resize(dim);
        for (int i = 0; i < dim; ++i) out.cf[a][i] = out.c[a][i].to_complex();
    }
    return out;
}

namespace {

PhiPoly from_exact(std::vector<GVector> cs) {
    PhiPoly p;
    p.c = std::move(cs);
    p.cf.resize(p.c.size());
    for (size_t a = 0; a < p.c.size(); ++a) {
        p.cf[a].resize(p.c[a].size());
        for (size_t i = 0; i < p.c[a].size(); ++i) p.cf[a][i] = p.c[a][i].to_complex();
    }
    return p;
}

}  // namespace

PhiPoly make_phi(const SectionModel& m, const std::vector<long>& u) {
    return from_exact(m.section_coefficients(u));
}

PhiPoly make_phi(const SectionModel& m, const GVector& u) {
    return from_exact(m.section_coefficients(u));
}

PhiPoly make_phi_of_g(const SectionModel& m, const GVector& v) {
    if (!m.hodge()) throw std::invalid_argument("make_phi_of_g: needs Hodge mode");
    const BiGradedSpace& gh = *m.g_hodge;
    if (static_cast<int>(v.size()) != gh.total)
        throw std::invalid_argument("make_phi_of_g: dimension mismatch");
    std::vector<int> neg;
    for (int i = 0; i < gh.total; ++i)
        if (gh.coord_negative[i]) neg.push_back(i);
    GMatrix shift = gh.shift_matrix();
    std::vector<GVector> cs;
    GVector current = v;
    Rational fact(1);
    for (int a = 0; a <= m.depth; ++a) {
        if (a > 0) {
            current = shift.apply(current);
            fact *= a;
        }
        GScalar inv_fact{Rational(1) / fact};
        GVector c(neg.size());
        for (size_t r = 0; r < neg.size(); ++r) c[r] = current[neg[r]] * inv_fact;
        cs.push_back(std::move(c));
    }
    return from_exact(std::move(cs));
}

PhiPoly make_phi_f0(const SectionModel& m, const std::vector<long>& u) {
    if (!m.hodge()) throw std::invalid_argument("make_phi_f0: needs Hodge mode");
    GVector uv(u.size());
    for (size_t i = 0; i < u.size(); ++i) uv[i] = GScalar(u[i]);
    std::vector<GVector> cs;
    for (const auto& mat : m.coeff_f0) cs.push_back(mat.apply(uv));
    return from_exact(std::move(cs));
}

std::vector<std::complex<double>> phi_with_perturbation(const SectionModel& m,
                                                        const std::vector<long>& u,
                                                        std::complex<double> z,
                                                        const MatrixPolynomial* M) {
    PhiPoly main = make_phi(m, u);
    auto value = main.eval(z);
    if (!M) return value;
    if (!m.hodge()) throw std::invalid_argument("phi_with_perturbation: needs Hodge mode");
    if (!M->constant_term_zero())
        throw std::invalid_argument("phi_with_perturbation: M(0) != 0");
    StripSample s = make_sample(z);
    auto f0 = make_phi_f0(m, u).eval(z);
    auto mv = M->eval_apply(s.t1, f0);
    for (size_t i = 0; i < value.size(); ++i) value[i] -= mv[i];
    return value;
}

bool monodromy_consistency_exact(const SectionModel& m, const GVector& u) {
    PhiPoly lhs = make_phi(m, u).shifted_by_one();
    PhiPoly rhs = make_phi(m, m.deck.apply(u));
    if (lhs.c.size() != rhs.c.size()) return false;
    for (size_t a = 0; a < lhs.c.size(); ++a)
        for (size_t i = 0; i < lhs.c[a].size(); ++i)
            if (!(lhs.c[a][i] == rhs.c[a][i])) return false;
    return true;
}

bool monodromy_consistency(const SectionModel& m, const std::vector<long>& u,
                           std::complex<double> z, double rel_tol) {
    GVector uv(u.size());
    for (size_t i = 0; i < u.size(); ++i) uv[i] = GScalar(u[i]);
    PhiPoly pu = make_phi(m, uv);
    PhiPoly pd = make_phi(m, m.deck.apply(uv));
    auto lhs = pu.eval(z + std::complex<double>(1, 0));
    auto rhs = pd.eval(z);
    double scale = 0, diff = 0;
    for (size_t i = 0; i < lhs.size(); ++i) {
        scale = std::max({scale, std::abs(lhs[i]), std::abs(rhs[i])});
        diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
    }
    return diff <= rel_tol * std::max(scale, 1.0);
}

}  // namespace nilorb
