#pragma once

#include <nilorb/linalg.hpp>

#include <string>
#include <vector>

namespace nilorb {

/// One-parameter degeneration datum: integer lattice Z^rank, nilpotent
/// log-monodromy N, decreasing Hodge filtration F over Q(i), and a
/// negative weight.
struct NilpotentOrbit {
    int rank = 0;
    int weight = -1;
    GMatrix N;      // integer entries
    Filtration F;   // decreasing, materialized full at the bottom level
    std::string label;
};

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const ValidationCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Checks, in order: nilpotency N^rank = 0, weight < 0, Griffiths
/// transversality N F^p <= F^{p-1}, and integrality of exp(N). Failures
/// are report entries, never exceptions.
ValidationReport validate_orbit(const NilpotentOrbit& orbit);

/// exp(M) of a nilpotent matrix as the exact finite sum.
GMatrix nilpotent_exp(const GMatrix& m);

/// Largest m with N^m != 0 (0 for N = 0). Throws if N is not nilpotent.
int nilpotency_depth(const GMatrix& n);

}  // namespace nilorb
