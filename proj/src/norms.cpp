#include <nilorb/norms.hpp>

#include <cmath>

namespace nilorb {

double mu(const std::complex<double>& c) { return std::abs(c.real()) + std::abs(c.imag()); }

double fiber_norm(const SectionModel& m, const std::vector<std::complex<double>>& v) {
    if (static_cast<int>(v.size()) != m.fiber_dim)
        throw std::invalid_argument("fiber_norm: dimension mismatch");
    double s = 0;
    for (const auto& c : v) s += mu(c);
    return s;
}

double fiber_norm_k(const SectionModel& m, const std::vector<std::complex<double>>& v, int k) {
    if (static_cast<int>(v.size()) != m.fiber_dim)
        throw std::invalid_argument("fiber_norm_k: dimension mismatch");
    double s = 0;
    for (int i = 0; i < m.fiber_dim; ++i)
        if (m.fiber_k[i] == k) s += mu(v[i]);
    return s;
}

Rational fiber_norm_exact(const SectionModel& m, const GVector& v) {
    if (static_cast<int>(v.size()) != m.fiber_dim)
        throw std::invalid_argument("fiber_norm_exact: dimension mismatch");
    Rational s(0);
    for (const auto& c : v) s += c.l1();
    return s;
}

Rational fiber_norm_k_exact(const SectionModel& m, const GVector& v, int k) {
    if (static_cast<int>(v.size()) != m.fiber_dim)
        throw std::invalid_argument("fiber_norm_k_exact: dimension mismatch");
    Rational s(0);
    for (int i = 0; i < m.fiber_dim; ++i)
        if (m.fiber_k[i] == k) s += v[i].l1();
    return s;
}

ABValues norms_AB(const SectionModel& m, const std::vector<long>& u, double y) {
    if (!m.hodge()) throw std::invalid_argument("norms_AB: bigraded norms need Hodge mode");
    if (static_cast<int>(u.size()) != m.rank)
        throw std::invalid_argument("norms_AB: dimension mismatch");
    std::vector<double> by_k(m.depth + 1, 0.0);
    for (int i = 0; i < m.rank; ++i) by_k[m.u_k[i]] += std::abs(static_cast<double>(u[i]));
    ABValues ab;
    double yk = 1;
    for (int k = 0; k <= m.depth; ++k) {
        ab.A += by_k[k] * yk;
        if (k >= 1) ab.B += by_k[k] * (yk / y);
        yk *= y;
    }
    return ab;
}

Rational norm_A_exact(const SectionModel& m, const GVector& u, const Rational& y) {
    if (!m.hodge()) throw std::invalid_argument("norm_A_exact: bigraded norms need Hodge mode");
    std::vector<Rational> by_k(m.depth + 1, Rational(0));
    for (int i = 0; i < m.rank; ++i) by_k[m.u_k[i]] += u[i].l1();
    Rational a(0), yk(1);
    for (int k = 0; k <= m.depth; ++k) {
        a += by_k[k] * yk;
        yk *= y;
    }
    return a;
}

std::vector<Rational> u_norms_by_k(const SectionModel& m, const std::vector<long>& u) {
    if (!m.hodge()) throw std::invalid_argument("u_norms_by_k: bigraded norms need Hodge mode");
    std::vector<Rational> by_k(m.depth + 1, Rational(0));
    for (int i = 0; i < m.rank; ++i) by_k[m.u_k[i]] += Rational(std::abs(u[i]));
    return by_k;
}

LatticeMinReport lattice_min_norm(const SectionModel& m, long bound) {
    if (bound < 1) throw std::invalid_argument("lattice_min_norm: bound must be >= 1");
    if (!m.hodge()) throw std::invalid_argument("lattice_min_norm: needs Hodge mode (iota)");

    const GMatrix& iota = m.iota->iota;
    LatticeMinReport rep;
    rep.bound = bound;
    rep.lattice_index = m.iota->lattice_index;

    // |u|_inf <= K |iota(u)| with K = max_j |iota^{-1} e_j|, from
    // |Mw| <= (max_j |M e_j|) |w| for the coordinate l1 norm.
    GMatrix inv = inverse(iota);
    Rational big_k(0);
    for (int j = 0; j < inv.cols; ++j) {
        Rational s(0);
        for (int i = 0; i < inv.rows; ++i) s += inv.at(i, j).l1();
        if (s > big_k) big_k = s;
    }
    rep.coercivity_K = big_k;

    std::vector<long> u(m.rank, -bound);
    bool first = true;
    while (true) {
        bool nonzero = false;
        for (long c : u)
            if (c != 0) nonzero = true;
        if (nonzero) {
            Rational s(0);
            for (int i = 0; i < iota.rows; ++i) {
                GScalar acc;
                for (int j = 0; j < m.rank; ++j) {
                    if (u[j] == 0) continue;
                    acc += iota.at(i, j) * GScalar(u[j]);
                }
                s += acc.l1();
            }
            if (first || s < rep.min_norm) {
                rep.min_norm = s;
                rep.argmin.assign(u.begin(), u.end());
                first = false;
            }
        }
        int pos = 0;
        while (pos < m.rank && u[pos] == bound) u[pos++] = -bound;
        if (pos == m.rank) break;
        ++u[pos];
    }
    rep.min_norm_scaled = rep.min_norm * Rational(rep.lattice_index);
    // Any u outside the box has |u|_inf > bound, hence
    // |iota(u)| >= |u|_inf / K > bound / K; certificate when that beats
    // the found minimum.
    rep.global_certificate = (Rational(bound) >= big_k * rep.min_norm);
    return rep;
}

}  // namespace nilorb
