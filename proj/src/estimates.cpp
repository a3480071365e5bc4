#include <nilorb/estimates.hpp>

#include <cmath>

namespace nilorb {

EstimateReport estimate_epsilon(const SectionModel& m, const GVector& v,
                                const EstimateParams& params) {
    if (!m.hodge())
        throw std::invalid_argument("estimate_epsilon: orbit has no valid iota (rational mode)");
    if (static_cast<int>(v.size()) != m.fiber_dim)
        throw std::invalid_argument("estimate_epsilon: target dimension mismatch");
    for (int i = 0; i < m.fiber_dim; ++i)
        if (m.fiber_k[i] != 0 && !v[i].is_zero())
            throw std::invalid_argument("estimate_epsilon: target not in Ker N part of G^<0");
    if (params.bound < 1) throw std::invalid_argument("estimate_epsilon: bound must be >= 1");

    EstimateReport rep;
    rep.bound = params.bound;
    rep.grid = params.grid;

    const int rank = m.rank;
    const int fd = m.fiber_dim;
    const int deg = m.depth;

    // Float mirrors of the exact coefficient matrices and the target.
    std::vector<std::vector<std::complex<double>>> cm(deg + 1);
    for (int a = 0; a <= deg; ++a) {
        cm[a].resize(static_cast<size_t>(fd) * rank);
        for (int i = 0; i < fd; ++i)
            for (int j = 0; j < rank; ++j)
                cm[a][static_cast<size_t>(i) * rank + j] = m.coeff[a].at(i, j).to_complex();
    }
    std::vector<std::complex<double>> vf(fd);
    for (int i = 0; i < fd; ++i) vf[i] = v[i].to_complex();

    auto zs = params.grid.points();
    const long B = params.bound;

    std::vector<long> u(rank, -B);
    std::vector<std::complex<double>> cu(static_cast<size_t>(deg + 1) * fd);
    std::vector<std::complex<double>> val(fd);
    std::vector<double> unorm_k(deg + 1);
    std::vector<double> diff_k(deg + 1);

    while (true) {
        bool in_kernel = true;
        for (int i = 0; i < rank; ++i)
            if (m.u_k[i] >= 1 && u[i] != 0) in_kernel = false;

        if (!in_kernel) {
            ++rep.scanned_lattice;
            // coefficient vectors of this section
            for (int a = 0; a <= deg; ++a)
                for (int i = 0; i < fd; ++i) {
                    std::complex<double> s = 0;
                    const auto* row = &cm[a][static_cast<size_t>(i) * rank];
                    for (int j = 0; j < rank; ++j)
                        if (u[j] != 0) s += row[j] * static_cast<double>(u[j]);
                    cu[static_cast<size_t>(a) * fd + i] = s;
                }
            std::fill(unorm_k.begin(), unorm_k.end(), 0.0);
            for (int j = 0; j < rank; ++j) unorm_k[m.u_k[j]] += std::abs(static_cast<double>(u[j]));

            for (const auto& z : zs) {
                double y = z.imag();
                // Horner on the coefficient block
                for (int i = 0; i < fd; ++i) val[i] = cu[static_cast<size_t>(deg) * fd + i];
                for (int a = deg - 1; a >= 0; --a)
                    for (int i = 0; i < fd; ++i)
                        val[i] = val[i] * z + cu[static_cast<size_t>(a) * fd + i];

                std::fill(diff_k.begin(), diff_k.end(), 0.0);
                for (int i = 0; i < fd; ++i) diff_k[m.fiber_k[i]] += mu(val[i] - vf[i]);

                double A = 0, yk = 1;
                for (int k = 0; k <= deg; ++k) {
                    A += unorm_k[k] * yk;
                    yk *= y;
                }

                double best = -1;
                int best_k = 0;
                yk = 1;
                for (int k = 0; k <= deg; ++k) {
                    double ratio = diff_k[k] * yk / A;
                    if (ratio > best) {
                        best = ratio;
                        best_k = k;
                    }
                    yk *= y;
                }
                ++rep.scanned_pairs;
                if (best_k > 0) {
                    ++rep.maxk_positive;
                    bool supported = false;
                    for (int j = 0; j < rank; ++j)
                        if (m.u_k[j] >= best_k && u[j] != 0) supported = true;
                    if (supported) ++rep.maxk_positive_supported;
                }
                if (rep.epsilon < 0 || best < rep.epsilon) {
                    rep.epsilon = best;
                    rep.argmin_u.assign(u.begin(), u.end());
                    rep.argmin_z = z;
                    rep.argmin_k = best_k;
                }
            }
        }

        int pos = 0;
        while (pos < rank && u[pos] == B) u[pos++] = -B;
        if (pos == rank) break;
        ++u[pos];
    }
    return rep;
}

}  // namespace nilorb
