#pragma once

#include <nilorb/phi.hpp>

namespace nilorb {

struct SearchBounds {
    long coeff_bound = 25;
    StripGrid grid;  // grid.r is the strip floor, grid.y_max the ceiling
};

struct WitnessEntry {
    std::vector<long> u;
    std::complex<double> z;
    double distance = 0.0;
    bool exact = false;       // re-verified in exact arithmetic
    bool exact_zero = false;  // and the exact distance is zero
    GScalar z_exact;          // meaningful when exact
};

/// A sequence of lattice sections approaching the target over the strip:
/// Im z_n strictly increasing with distance_n < tol * 2^{-n}.
struct AccumulationWitness {
    GVector target;
    double tol = 0.0;
    bool found = false;
    std::vector<WitnessEntry> sequence;
    std::string notes;
};

AccumulationWitness find_accumulation(const SectionModel& m, const GVector& target, double tol,
                                      const SearchBounds& bounds, int want = 20);

struct Intruder {
    std::vector<long> u;
    std::complex<double> z;
    double distance = 0.0;
    bool reverified = false;
};

struct SeparationParams {
    Rational radius = Rational(1, 5);
    long coeff_bound = 50;
    StripGrid grid;
    double heuristic_epsilon = 0.0;  // > 0 enables the estimate-based tail exclusion
};

struct SeparationReport {
    GVector target;
    bool target_invariant = false;
    Rational radius = 0;
    long coeff_bound = 0;
    StripGrid grid;
    bool certified = false;
    std::vector<Intruder> intruders;
    std::vector<std::vector<long>> sections_through_target;
    long long excluded_constant_exact = 0;    // constant sections, exact distance
    long long excluded_const_coord_exact = 0; // z-independent coordinates, exact bound
    long long excluded_grid = 0;              // grid scan plus local refinement
    long long excluded_heuristic = 0;
    bool heuristic_used = false;
    std::string caveat;
};

/// Desk-scale separation certificate around a boundary-fiber point:
/// every lattice section with coefficients in the box either stays
/// outside the radius (shown exactly where the section value is constant
/// in z, by scan elsewhere) or is reported as an intruder. The verdict is
/// explicitly relative to the declared bounds and grid.
SeparationReport certify_separation(const SectionModel& m, const GVector& target,
                                    const SeparationParams& params);

}  // namespace nilorb
