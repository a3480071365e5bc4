#include <nilorb/perturbation.hpp>

#include <cmath>

namespace nilorb {

std::vector<std::complex<double>> MatrixPolynomial::eval_apply(
    std::complex<double> t, const std::vector<std::complex<double>>& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw std::invalid_argument("MatrixPolynomial: dimension mismatch");
    std::vector<std::complex<double>> out(rows, 0.0);
    std::complex<double> td = 1.0;
    for (size_t d = 0; d < coef.size(); ++d) {
        if (d > 0) td *= t;
        if (d == 0) continue;
        for (int i = 0; i < rows; ++i) {
            std::complex<double> s = 0;
            for (int j = 0; j < cols; ++j) s += coef[d][static_cast<size_t>(i) * cols + j] * v[j];
            out[i] += td * s;
        }
    }
    return out;
}

bool MatrixPolynomial::constant_term_zero() const {
    if (coef.empty()) return true;
    for (const auto& x : coef[0])
        if (x != std::complex<double>(0, 0)) return false;
    return true;
}

MatrixPolynomial MatrixPolynomial::scaled(double s) const {
    MatrixPolynomial out = *this;
    for (auto& mat : out.coef)
        for (auto& x : mat) x *= s;
    return out;
}

MatrixPolynomial unit_perturbation(const SectionModel& m, double s) {
    if (!m.hodge()) throw std::invalid_argument("unit_perturbation: needs Hodge mode");
    MatrixPolynomial mp;
    mp.rows = m.fiber_dim;
    mp.cols = m.coeff_f0.empty() ? 0 : m.coeff_f0[0].rows;
    mp.coef.resize(2);
    mp.coef[0].assign(static_cast<size_t>(mp.rows) * mp.cols, 0.0);
    mp.coef[1].assign(static_cast<size_t>(mp.rows) * mp.cols, s);
    return mp;
}

PerturbationReport perturbation_bound_check(const SectionModel& m, const MatrixPolynomial& M,
                                            long bound, const StripGrid& grid) {
    if (!m.hodge())
        throw std::invalid_argument("perturbation_bound_check: needs Hodge mode");
    if (!M.constant_term_zero())
        throw std::invalid_argument("perturbation_bound_check: M(0) != 0");
    if (M.rows != m.fiber_dim || M.cols != (m.coeff_f0.empty() ? 0 : m.coeff_f0[0].rows))
        throw std::invalid_argument("perturbation_bound_check: M has wrong shape");
    if (bound < 1) throw std::invalid_argument("perturbation_bound_check: bound must be >= 1");

    PerturbationReport rep;
    rep.bound = bound;
    rep.grid = grid;

    auto ys = grid.y_values();
    auto xs = grid.x_values();
    std::vector<double> per_y(ys.size(), 0.0);

    const int rank = m.rank;
    std::vector<long> u(rank, -bound);
    while (true) {
        bool nonzero = false;
        for (long c : u)
            if (c != 0) nonzero = true;
        if (nonzero) {
            PhiPoly phi2 = make_phi_f0(m, u);
            for (size_t yi = 0; yi < ys.size(); ++yi) {
                for (double x : xs) {
                    StripSample s = make_sample({x, ys[yi]});
                    double at = std::abs(s.t1);
                    if (at == 0) continue;
                    auto v2 = phi2.eval(s.z);
                    auto mv = M.eval_apply(s.t1, v2);
                    ABValues ab = norms_AB(m, u, s.y);
                    if (ab.A == 0) continue;
                    std::vector<double> by_k(m.depth + 1, 0.0);
                    for (int i = 0; i < m.fiber_dim; ++i) by_k[m.fiber_k[i]] += mu(mv[i]);
                    for (int k = 0; k <= m.depth; ++k) {
                        double ratio = by_k[k] / (at * ab.A);
                        per_y[yi] = std::max(per_y[yi], ratio);
                        if (ratio > rep.c_prime) {
                            rep.c_prime = ratio;
                            rep.argmax_u.assign(u.begin(), u.end());
                            rep.argmax_z = s.z;
                            rep.argmax_k = k;
                        }
                    }
                }
            }
        }
        int pos = 0;
        while (pos < rank && u[pos] == bound) u[pos++] = -bound;
        if (pos == rank) break;
        ++u[pos];
    }

    for (size_t yi = 0; yi < ys.size(); ++yi) rep.per_y_max.emplace_back(ys[yi], per_y[yi]);
    // bounded when the top-of-ladder maxima do not exceed the bottom ones
    if (ys.size() >= 2) {
        double head = per_y.front();
        double tail = per_y.back();
        rep.bounded_in_y = tail <= head * 1.05 + 1e-12;
    }
    return rep;
}

}  // namespace nilorb
