// Test-only independent oracles. These deliberately avoid the library's
// construction paths: the weight-filtration oracle enumerates candidate
// filtrations over the lattice of subspaces generated by kernels and
// images of powers of N, and confirms exactly one satisfies the two
// characterizing conditions.
#pragma once

#include <nilorb/weight.hpp>

#include <random>
#include <vector>

namespace nilorb_test {

using namespace nilorb;

// Closure of {ker N^a cap im N^b} under sum and intersection. The true
// weight filtration lies inside this lattice.
inline std::vector<Subspace> subspace_lattice(const GMatrix& n) {
    int dim = n.rows;
    std::vector<Subspace> gen;
    GMatrix p = GMatrix::identity(dim);
    std::vector<Subspace> kers, ims;
    for (int a = 0; a <= dim; ++a) {
        kers.push_back(kernel(p));
        ims.push_back(image(p));
        p = p.mul(n);
    }
    auto push_unique = [](std::vector<Subspace>& out, const Subspace& s) {
        for (const auto& t : out)
            if (t == s) return false;
        out.push_back(s);
        return true;
    };
    std::vector<Subspace> lattice;
    for (const auto& a : kers)
        for (const auto& b : ims) push_unique(lattice, intersection(a, b));
    bool grew = true;
    int guard = 0;
    while (grew && ++guard < 12 && lattice.size() < 400) {
        grew = false;
        size_t sz = lattice.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = i + 1; j < sz; ++j) {
                if (push_unique(lattice, sum(lattice[i], lattice[j]))) grew = true;
                if (push_unique(lattice, intersection(lattice[i], lattice[j]))) grew = true;
            }
    }
    return lattice;
}

// Enumerate increasing chains W_{w-m} <= ... <= W_{w+m} from the lattice
// subject to both conditions: N W_j <= W_{j-2} and N^i : Gr_{w+i} ~
// Gr_{w-i}. Returns the number of distinct filtrations found and writes
// the last one found.
inline int count_weight_filtrations(const GMatrix& n, int w, WeightFiltration* out) {
    int dim = n.rows;
    int m = nilpotency_depth(n);
    auto lattice = subspace_lattice(n);

    int count = 0;
    std::vector<const Subspace*> chain(2 * m + 1, nullptr);

    // recursive chain extension, index i = 0 .. 2m for level w-m+i
    std::function<void(int)> extend = [&](int idx) {
        if (idx == 2 * m + 1) {
            if (chain[2 * m]->dim() != dim) return;
            // build and verify both conditions via the library checker
            WeightFiltration wf;
            wf.center = w;
            wf.depth = m;
            wf.levels.direction = Filtration::Direction::Increasing;
            wf.levels.ambient_dim = dim;
            for (int i = 0; i <= 2 * m; ++i) wf.levels.levels[w - m + i] = *chain[i];
            if (weight_conditions_hold(n, wf)) {
                ++count;
                if (out) *out = wf;
            }
            return;
        }
        for (const auto& cand : lattice) {
            if (idx > 0 && !cand.contains(*chain[idx - 1])) continue;
            // N W_j <= W_{j-2}
            Subspace img = image_of(n, cand);
            if (idx >= 2) {
                if (!chain[idx - 2]->contains(img)) continue;
            } else {
                if (!img.is_zero()) continue;  // W_{j-2} = 0 below the range
            }
            chain[idx] = &cand;
            extend(idx + 1);
        }
    };
    extend(0);
    return count;
}

// Random integer nilpotent matrix: a random Jordan shape conjugated by a
// random sequence of integer shears.
inline GMatrix random_nilpotent(std::mt19937_64& rng, int dim) {
    GMatrix n(dim, dim);
    // random partition via random chain breaks
    int row = 0;
    while (row + 1 < dim) {
        bool link = (rng() % 3) != 0;
        if (link) n.at(row + 1, row) = GScalar(1);
        ++row;
    }
    GMatrix u = GMatrix::identity(dim);
    for (int s = 0; s < 2 * dim; ++s) {
        int i = static_cast<int>(rng() % dim), j = static_cast<int>(rng() % dim);
        long c = static_cast<long>(rng() % 5) - 2;
        if (i == j || c == 0) continue;
        GMatrix e = GMatrix::identity(dim);
        e.at(i, j) = GScalar(c);
        u = u.mul(e);
    }
    return u.mul(n).mul(inverse(u));
}

}  // namespace nilorb_test
