#pragma once

#include <nilorb/phi.hpp>

namespace nilorb {

/// Polynomial matrix M(t) = sum_{d>=1} t^d M_d mapping the F^0 G part of
/// a section into G^{<0}; M(0) = 0 is required.
struct MatrixPolynomial {
    int rows = 0;
    int cols = 0;
    // coef[d] is the matrix of t^d, row-major; coef[0] must vanish.
    std::vector<std::vector<std::complex<double>>> coef;

    std::vector<std::complex<double>> eval_apply(std::complex<double> t,
                                                 const std::vector<std::complex<double>>& v) const;
    bool constant_term_zero() const;
    MatrixPolynomial scaled(double s) const;
};

/// M(t) = t * (all-ones block) scaled by s; the minimal nontrivial probe.
MatrixPolynomial unit_perturbation(const SectionModel& m, double s = 1.0);

struct PerturbationReport {
    double c_prime = 0.0;  // fitted smallest C' in the scanned family
    std::vector<long> argmax_u;
    std::complex<double> argmax_z;
    int argmax_k = 0;
    bool bounded_in_y = true;
    std::vector<std::pair<double, double>> per_y_max;  // (y, max ratio at y)
    long bound = 0;
    StripGrid grid;
};

/// Empirically fits C' with |M(t1) phi''(iota(u); z)|_k <= C' |t1| A(u,z)
/// over the scanned lattice box and grid, and reports whether the ratio
/// stays bounded as y grows.
PerturbationReport perturbation_bound_check(const SectionModel& m, const MatrixPolynomial& M,
                                            long bound, const StripGrid& grid);

}  // namespace nilorb
