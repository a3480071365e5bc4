#pragma once

#include <vector>

namespace nilorb {

/// Decides whether the system a_i <= eps2 * sum_j a_j + sum_{j<i} C_{i,j} a_j
/// (all a_i >= 0) forces a = 0. With M = eps2 * J + C this is the
/// question whether a <= M a has a nonzero nonnegative solution, which for
/// a nonnegative matrix happens exactly when the dominant eigenvalue of M
/// is >= 1. The verdict is cross-checked by a direct search over the
/// simplex (Collatz-Wielandt ratio maximization on a grid with local
/// refinement).
struct SublemmaResult {
    bool forces_zero = false;   // true iff only a = 0 satisfies the system
    double rho = 0.0;           // dominant eigenvalue of M
    double simplex_best = 0.0;  // best min_i (Ma)_i / a_i found on the simplex
    bool routes_agree = false;  // eigenvalue and simplex verdicts match
};

/// cmat[i] holds the i entries C_{i,0..i-1}; row 0 must be empty and all
/// entries strictly positive.
SublemmaResult sublemma_check(const std::vector<std::vector<double>>& cmat, double eps2);

/// Largest dyadic eps2 < 1/2 for which the system still forces a = 0.
double find_eps2(const std::vector<std::vector<double>>& cmat, int bits = 30);

}  // namespace nilorb
