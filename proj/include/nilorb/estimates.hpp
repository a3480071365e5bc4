#pragma once

#include <nilorb/phi.hpp>

namespace nilorb {

struct EstimateParams {
    long bound = 20;
    StripGrid grid;
};

/// Outcome of the scan behind the norm-estimate check: for every lattice
/// u outside Ker N (coefficients bounded by `bound`) and every grid
/// sample z, the score is max over k of |phi(iota(u); z) - v|_k y^k / A(u,z);
/// epsilon is the minimum score. A strictly positive value is the
/// empirical content of the estimate.
struct EstimateReport {
    double epsilon = -1.0;
    std::vector<long> argmin_u;
    std::complex<double> argmin_z;
    int argmin_k = -1;
    long bound = 0;
    StripGrid grid;
    long long scanned_lattice = 0;
    long long scanned_pairs = 0;
    // Part (ii) bookkeeping: pairs whose maximizing k is positive, and how
    // many of them have a nonzero bigraded component at some k' >= k.
    long long maxk_positive = 0;
    long long maxk_positive_supported = 0;
};

/// v must lie in the Ker N part of G^{<0} (fiber coordinates supported on
/// kernel index 0); anything else is a typed error, as is an orbit
/// without a valid iota.
EstimateReport estimate_epsilon(const SectionModel& m, const GVector& v, const EstimateParams& params);

}  // namespace nilorb
