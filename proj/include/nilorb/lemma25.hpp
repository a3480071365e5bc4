#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace nilorb {

/// Randomized probe of the polynomial estimate: sample f in C[z]^{<=n}
/// and z0 in I_r, keep the samples satisfying the two derivative
/// smallness conditions, and report the largest A(f, z0) seen among them
/// (the implied empirical constant).
struct Lemma25Params {
    int n = 1;
    int n1 = 1;
    int n2 = 1;
    std::complex<double> a = 1.0;
    std::complex<double> a_prime = 1.0;
    double eps = 0.0625;
    double r = 2.0;
    int trials = 10000;
    std::uint64_t seed = 1;
    double box = 0.75;  // half-width of the coefficient sampling box
};

struct Lemma25Report {
    int trials = 0;
    int satisfying = 0;
    double c_empirical = 0.0;  // max A(f, z0) over satisfying samples
    std::vector<std::complex<double>> argmax_coeffs;
    std::complex<double> argmax_z0;
    // Exact constants C(k) with A((z - z0)^k, z0) <= C(k) y0^k whenever
    // |z0| <= 2 y0, from the binomial expansion.
    std::vector<long> binomial_constants;
};

Lemma25Report lemma25_harness(const Lemma25Params& params);

/// A(f, z0) = sum_k |f^(k)(0)| y0^k for a coefficient vector (degree
/// ascending).
double lemma25_norm_A(const std::vector<std::complex<double>>& coeffs, double y0);

}  // namespace nilorb
