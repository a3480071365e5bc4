#pragma once

#include <nilorb/norms.hpp>

namespace nilorb {

/// The region I_r = { 0 <= Re z < 1, Im z > r } (one polydisk chart,
/// so eta plays no role). r > 1 keeps y <= |z| <= 2y available.
struct StripRegion {
    double r = 2.0;
    double eta = 0.0;
    bool contains(std::complex<double> z) const {
        return z.real() >= 0.0 && z.real() < 1.0 && z.imag() > r;
    }
};

/// Deterministic samples: Re z uniform on [0,1) with re_steps points, Im z
/// on the geometric ladder r * 2^(j/y_density), j = 0 .. (y_levels-1)*y_density,
/// clipped to y_max when given. Doubling a density halves the mesh while
/// keeping the original points (Re) resp. the ladder ends (Im).
struct StripGrid {
    double r = 2.0;
    int re_steps = 8;
    int y_levels = 12;
    int y_density = 1;
    double y_max = 0.0;  // 0 = no ceiling

    std::vector<double> y_values() const;
    std::vector<double> x_values() const;
    std::vector<std::complex<double>> points() const;  // y-major, x-minor
};

struct StripSample {
    std::complex<double> z;
    double y = 0.0;
    std::complex<double> t1;  // exp(2 pi i z)
};
StripSample make_sample(std::complex<double> z);

/// The trivialized section map as an exact polynomial in z with fiber
/// coefficient vectors, plus a float mirror for scanning.
struct PhiPoly {
    std::vector<GVector> c;                                   // degree ascending
    std::vector<std::vector<std::complex<double>>> cf;        // float mirror

    int degree() const { return static_cast<int>(c.size()) - 1; }
    GVector eval_exact(const GScalar& z) const;
    std::vector<std::complex<double>> eval(std::complex<double> z) const;

    /// Coefficients of z -> value(z + 1), exact binomial re-expansion.
    PhiPoly shifted_by_one() const;
};

PhiPoly make_phi(const SectionModel& m, const std::vector<long>& u);
PhiPoly make_phi(const SectionModel& m, const GVector& u);

/// phi for an arbitrary Hodge-coordinate vector v of G (not routed
/// through iota): pr1(exp(zN) v) in the bigraded coordinates.
PhiPoly make_phi_of_g(const SectionModel& m, const GVector& v_hodge_coords);

/// phi'' companion: the F^0 G part of the section (Hodge mode).
PhiPoly make_phi_f0(const SectionModel& m, const std::vector<long>& u);

struct MatrixPolynomial;

/// Full section map with a perturbation: phi'(z) - M(t1) phi''(z), where
/// t1 = exp(2 pi i z). Requires Hodge mode and M(0) = 0; with M absent
/// this is the plain nilpotent-orbit phi.
std::vector<std::complex<double>> phi_with_perturbation(const SectionModel& m,
                                                        const std::vector<long>& u,
                                                        std::complex<double> z,
                                                        const MatrixPolynomial* M = nullptr);

/// Exact deck-transformation identity phi(iota(u); z+1) =
/// phi(iota(exp(N) u); z), checked as a polynomial identity.
bool monodromy_consistency_exact(const SectionModel& m, const GVector& u);

/// Float check of the same identity at one sample, relative tolerance.
bool monodromy_consistency(const SectionModel& m, const std::vector<long>& u,
                           std::complex<double> z, double rel_tol = 1e-12);

}  // namespace nilorb
