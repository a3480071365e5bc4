#pragma once

#include <nilorb/model.hpp>

namespace nilorb {

/// All norms are coordinate l1 sums in the canonical bigraded bases, with
/// |c| = |Re c| + |Im c| on a single coordinate so that every lattice
/// minimum is an exact rational.
double mu(const std::complex<double>& c);

double fiber_norm(const SectionModel& m, const std::vector<std::complex<double>>& v);
double fiber_norm_k(const SectionModel& m, const std::vector<std::complex<double>>& v, int k);
Rational fiber_norm_exact(const SectionModel& m, const GVector& v);
Rational fiber_norm_k_exact(const SectionModel& m, const GVector& v, int k);

/// A(u,z) = sum_k |u_k| y^k and B(u,z) = sum_{k>=1} |u_k| y^{k-1} for a
/// lattice vector in the bigraded coordinates (Hodge mode only).
struct ABValues {
    double A = 0;
    double B = 0;
};
ABValues norms_AB(const SectionModel& m, const std::vector<long>& u, double y);
Rational norm_A_exact(const SectionModel& m, const GVector& u, const Rational& y);

/// |u_k| per kernel index, exact.
std::vector<Rational> u_norms_by_k(const SectionModel& m, const std::vector<long>& u);

struct LatticeMinReport {
    Rational min_norm = 0;          // min |iota(u)| over scanned nonzero u
    Rational min_norm_scaled = 0;   // lattice_index * min_norm
    std::vector<long> argmin;
    long bound = 0;
    mpz_class lattice_index = 1;
    bool global_certificate = false;  // true when the coercivity bound
                                      // shows no u outside the box can win
    Rational coercivity_K = 0;        // |u|_inf <= K |iota(u)| for all u
};

/// E(G_Z) relative to the coefficient box: exact enumeration of
/// min |iota(u)| over 0 < |u|_inf <= bound, with a certificate when the
/// operator lower bound of iota on the unit box makes the minimum global.
LatticeMinReport lattice_min_norm(const SectionModel& m, long bound);

}  // namespace nilorb
