#pragma once

#include <nilorb/orbit.hpp>

#include <cstdint>
#include <optional>

namespace nilorb {

/// A named constructor together with what it is expected to satisfy;
/// tests re-verify every manifest on construction.
struct OrbitRecipe {
    std::string name;
    NilpotentOrbit orbit;
    bool expect_validates = true;
    bool expect_pure = true;        // build_limit_mhs succeeds
    bool expect_iota_identity = false;
};

/// Rank 2, w = -1, N e0 = e1, F^0 = span(e0). R-split; the two lattice
/// directions trivialize to the functions z and 1.
NilpotentOrbit example_1_10_i();

/// Rank 4, w = -1 (adopted), two shifted chains, F^0 = span(e0 - i f0,
/// e1 - i f1). Validates structurally but is not pure at level 0; the
/// boundary fiber of its section closure is not Hausdorff.
NilpotentOrbit example_1_10_2();

/// Single Jordan block of the given size with a divided-power chain
/// N e_i = (i+1) e_{i+1} (so exp(N) stays integral) and one Hodge chain
/// F^p = span(e_0 .. e_{hodge_top - p}). Pure iff 2*hodge_top = w+size-1.
NilpotentOrbit jordan_orbit(int size, int w, int hodge_top);

/// Two conjugate chains e and f with v_j = e_j - i f_j, w_j = e_j + i f_j
/// and F^p spanned by the v_j with hodge_top - j >= p and the w_j with
/// (w+size-1-hodge_top) - j >= p. Realizes two-dimensional primitive
/// parts of conjugate Hodge types; requires 2*hodge_top != w+size-1.
NilpotentOrbit paired_jordan_orbit(int size, int w, int hodge_top);

/// Rank 3, w = -2, divided chain, F built on u0 = e0 + i e1. Valid, and
/// the complex twist forces iota away from the identity.
NilpotentOrbit twisted_jordan3();

/// Blockwise direct sum; all parts must share one weight.
NilpotentOrbit direct_sum(const std::vector<NilpotentOrbit>& parts);

/// Block plan for the random generator; when absent, a legal plan is
/// drawn from the seed.
struct OrbitShape {
    int weight = -1;
    struct Block {
        bool paired = false;
        int size = 1;
        int hodge_top = 0;
    };
    std::vector<Block> blocks;
};

/// Random valid orbit: a direct sum of legal blocks conjugated by a
/// random unipotent integer matrix, so the lattice is preserved and iota
/// is generically nontrivial while its triangularity must still hold.
NilpotentOrbit random_split_orbit(std::uint64_t seed);
NilpotentOrbit random_split_orbit(std::uint64_t seed, const OrbitShape& shape);

std::vector<OrbitRecipe> builtin_recipes();
std::optional<NilpotentOrbit> orbit_by_name(const std::string& name);
std::vector<std::string> recipe_names();

}  // namespace nilorb
