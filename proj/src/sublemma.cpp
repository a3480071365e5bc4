#include <nilorb/sublemma.hpp>

#include <cmath>
#include <stdexcept>

namespace nilorb {

namespace {

std::vector<std::vector<double>> build_matrix(const std::vector<std::vector<double>>& cmat,
                                              double eps2) {
    size_t n = cmat.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, eps2));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < cmat[i].size(); ++j) m[i][j] += cmat[i][j];
    return m;
}

std::vector<double> apply(const std::vector<std::vector<double>>& m, const std::vector<double>& a) {
    std::vector<double> r(m.size(), 0.0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) r[i] += m[i][j] * a[j];
    return r;
}

double min_ratio(const std::vector<std::vector<double>>& m, const std::vector<double>& a) {
    auto ma = apply(m, a);
    double best = -1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 0) return -1;  // only interior points rate
        double ratio = ma[i] / a[i];
        if (best < 0 || ratio < best) best = ratio;
    }
    return best;
}

// Power iteration on M + I (keeps iterates strictly positive even for
// nilpotent M); rho(M) = rho(M + I) - 1.
double power_iteration_rho(const std::vector<std::vector<double>>& m) {
    size_t n = m.size();
    std::vector<double> a(n, 1.0);
    double lo = 0, hi = 0;
    for (int it = 0; it < 5000; ++it) {
        auto ma = apply(m, a);
        for (size_t i = 0; i < n; ++i) ma[i] += a[i];
        lo = 1e300;
        hi = 0;
        for (size_t i = 0; i < n; ++i) {
            double ratio = ma[i] / a[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        double norm = 0;
        for (double x : ma) norm += x;
        for (size_t i = 0; i < n; ++i) ma[i] /= norm;
        a = ma;
        if (hi - lo < 1e-13 * std::max(1.0, hi)) break;
    }
    return (lo + hi) / 2 - 1.0;
}

// grid over the simplex: compositions of `res` into n parts
void simplex_scan(const std::vector<std::vector<double>>& m, int res, std::vector<double>& point,
                  size_t idx, int remaining, double& best, std::vector<double>& argbest) {
    size_t n = m.size();
    if (idx == n - 1) {
        point[idx] = remaining;
        bool interior = true;
        for (double x : point)
            if (x <= 0) interior = false;
        if (interior) {
            double ratio = min_ratio(m, point);
            if (ratio > best) {
                best = ratio;
                argbest = point;
            }
        }
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        point[idx] = v;
        simplex_scan(m, res, point, idx + 1, remaining - v, best, argbest);
    }
}

}  // namespace

SublemmaResult sublemma_check(const std::vector<std::vector<double>>& cmat, double eps2) {
    size_t n = cmat.size();
    if (n == 0) throw std::invalid_argument("sublemma_check: empty system");
    for (size_t i = 0; i < n; ++i) {
        if (cmat[i].size() != i)
            throw std::invalid_argument("sublemma_check: row i must have exactly i entries");
        for (double c : cmat[i])
            if (!(c > 0)) throw std::invalid_argument("sublemma_check: entries must be positive");
    }
    if (!(eps2 >= 0)) throw std::invalid_argument("sublemma_check: eps2 must be nonnegative");

    auto m = build_matrix(cmat, eps2);

    SublemmaResult res;
    res.rho = power_iteration_rho(m);
    res.forces_zero = res.rho < 1.0;

    // Collatz-Wielandt on a simplex grid, then local multiplicative
    // refinement of the best point.
    double best = -1;
    std::vector<double> arg(n, 1.0), point(n, 0.0);
    simplex_scan(m, 12, point, 0, 12, best, arg);
    if (best < 0) {
        best = min_ratio(m, std::vector<double>(n, 1.0));
        arg.assign(n, 1.0);
    }
    double step = 0.5;
    while (step > 1e-12) {
        bool improved = false;
        for (size_t i = 0; i < n; ++i) {
            for (double f : {1.0 + step, 1.0 / (1.0 + step)}) {
                auto trial = arg;
                trial[i] *= f;
                double ratio = min_ratio(m, trial);
                if (ratio > best) {
                    best = ratio;
                    arg = trial;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    res.simplex_best = best;
    bool simplex_feasible = best >= 1.0 - 1e-9;
    res.routes_agree = (simplex_feasible == !res.forces_zero);
    return res;
}

double find_eps2(const std::vector<std::vector<double>>& cmat, int bits) {
    double lo = 0.0, hi = 0.5;
    for (int b = 0; b < bits; ++b) {
        double mid = (lo + hi) / 2;
        if (sublemma_check(cmat, mid).forces_zero)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace nilorb
