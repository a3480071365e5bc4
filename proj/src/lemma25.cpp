#include <nilorb/lemma25.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

namespace nilorb {

namespace {

// k-th derivative of f at z, coefficients degree ascending.
std::complex<double> deriv_at(const std::vector<std::complex<double>>& c, int k,
                              std::complex<double> z) {
    std::complex<double> acc = 0;
    std::complex<double> zp = 1.0;
    for (int j = k; j < static_cast<int>(c.size()); ++j) {
        double fall = 1;
        for (int t = 0; t < k; ++t) fall *= (j - t);
        acc += fall * c[j] * zp;
        zp *= z;
    }
    return acc;
}

}  // namespace

double lemma25_norm_A(const std::vector<std::complex<double>>& coeffs, double y0) {
    double a = 0;
    double fact = 1;
    double yk = 1;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) {
            fact *= k;
            yk *= y0;
        }
        a += fact * std::abs(coeffs[k]) * yk;
    }
    return a;
}

Lemma25Report lemma25_harness(const Lemma25Params& p) {
    if (p.n1 + p.n2 <= p.n)
        throw std::invalid_argument("lemma25_harness: need n1 + n2 > n");
    if (p.r <= 1.0) throw std::invalid_argument("lemma25_harness: need r > 1");
    if (p.trials < 1) throw std::invalid_argument("lemma25_harness: trials must be >= 1");

    Lemma25Report rep;
    rep.trials = p.trials;

    // C(k) = sum_j k!/(k-j)! 2^{k-j}: with |z0| <= 2 y0 every derivative
    // term of (z - z0)^k at 0 is bounded by the corresponding summand.
    for (int k = 0; k <= p.n; ++k) {
        long c = 0;
        for (int j = 0; j <= k; ++j) {
            long fall = 1;
            for (int t = 0; t < k - j; ++t) fall *= (k - t);
            long pw = 1;
            for (int t = 0; t < k - j; ++t) pw *= 2;
            c += fall * pw;
        }
        rep.binomial_constants.push_back(c);
    }

    std::mt19937_64 rng(p.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int trial = 0; trial < p.trials; ++trial) {
        double x0 = unit(rng);
        double y0 = p.r * std::pow(2.0, 4.0 * unit(rng));
        std::complex<double> z0(x0, y0);

        // Alternate two regimes: broad boxes hunt for violations, tight
        // eps-scaled boxes around the constant a populate the satisfying
        // set so the fitted constant is stable.
        bool broad = (trial % 2) == 0;
        std::vector<std::complex<double>> c(p.n + 1);
        double fact = 1;
        for (int k = 0; k <= p.n; ++k) {
            if (k > 0) fact *= k;
            double h = broad ? p.box / std::pow(y0, k)
                             : p.eps * p.box / (fact * std::pow(y0, k));
            c[k] = {(2 * unit(rng) - 1) * h, (2 * unit(rng) - 1) * h};
        }
        c[0] += p.a;

        double A = lemma25_norm_A(c, y0);
        if (A <= 0) continue;

        bool ok = true;
        double ykk = 1;
        for (int k = 0; k < p.n1 && ok; ++k) {
            std::complex<double> d = deriv_at(c, k, z0);
            if (k == 0) d -= p.a;
            if (std::abs(d) > p.eps * A / ykk) ok = false;
            ykk *= y0;
        }
        if (ok) {
            std::vector<std::complex<double>> cbar(c.size());
            for (size_t k = 0; k < c.size(); ++k) cbar[k] = std::conj(c[k]);
            ykk = 1;
            for (int k = 0; k < p.n2 && ok; ++k) {
                std::complex<double> d = deriv_at(cbar, k, z0);
                if (k == 0) d -= p.a_prime;
                if (std::abs(d) > p.eps * A / ykk) ok = false;
                ykk *= y0;
            }
        }
        if (!ok) continue;

        ++rep.satisfying;
        if (A > rep.c_empirical) {
            rep.c_empirical = A;
            rep.argmax_coeffs = c;
            rep.argmax_z0 = z0;
        }
    }
    return rep;
}

}  // namespace nilorb
