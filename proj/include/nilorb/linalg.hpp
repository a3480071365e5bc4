#pragma once

#include <nilorb/gscalar.hpp>

#include <map>
#include <optional>
#include <vector>

namespace nilorb {

using GVector = std::vector<GScalar>;

GVector conj(const GVector& v);
bool is_zero(const GVector& v);

/// Dense matrix over Q(i), acting on column vectors.
struct GMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<GScalar> a;  // row-major

    GMatrix() = default;
    GMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    GScalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const GScalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static GMatrix identity(int n);
    static GMatrix from_int(const std::vector<std::vector<long>>& m);

    GVector apply(const GVector& v) const;
    GMatrix mul(const GMatrix& o) const;
    GMatrix add(const GMatrix& o) const;
    GMatrix scale(const GScalar& c) const;
    GMatrix pow(int k) const;
    GMatrix conj() const;
    GVector col(int j) const;
    GVector row(int i) const;
    bool is_zero() const;
    bool operator==(const GMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// Subspace of Q(i)^n held in reduced row echelon form. The RREF basis
/// together with the ascending pivot list is a canonical representative,
/// so two subspaces are equal as sets iff the structs compare equal.
struct Subspace {
    int ambient_dim = 0;
    std::vector<GVector> basis;      // RREF rows, pivots strictly increasing
    std::vector<int> pivot_columns;

    int dim() const { return static_cast<int>(basis.size()); }
    bool is_zero() const { return basis.empty(); }
    bool is_full() const { return dim() == ambient_dim; }

    static Subspace zero(int n);
    static Subspace full(int n);

    bool contains(const GVector& v) const;
    bool contains(const Subspace& o) const;

    /// Canonical reduction of v modulo the subspace: subtract multiples of
    /// basis rows so every pivot coordinate becomes zero. v is in the
    /// subspace iff the result vanishes.
    GVector reduce(const GVector& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

Subspace echelonize(const std::vector<GVector>& vectors, int ambient_dim);
Subspace conj(const Subspace& s);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
Subspace kernel(const GMatrix& m);
Subspace image(const GMatrix& m);
Subspace image_of(const GMatrix& m, const Subspace& s);
Subspace preimage_of(const GMatrix& m, const Subspace& s);

/// Canonical particular solution of A x = b (free variables zero),
/// or nullopt when the system is inconsistent.
std::optional<GVector> solve_particular(const GMatrix& a, const GVector& b);

/// Coordinates of v in the given (independent) column family; throws if
/// v is outside their span.
GVector coordinates_in(const std::vector<GVector>& columns, const GVector& v);

GMatrix inverse(const GMatrix& m);

/// Matrix of the endomorphism induced by m on quot_of/sub, expressed in
/// the canonical complement basis. Both spaces must be m-stable.
GMatrix induced_map_on_quotient(const GMatrix& m, const Subspace& sub, const Subspace& quot_of);

/// Nested family of subspaces indexed by integers. Outside the stored
/// range the filtration is extended by the exhaustive convention:
/// increasing filtrations vanish below and stay at the top value above,
/// decreasing ones stay full at the bottom stored value and vanish above.
struct Filtration {
    enum class Direction { Increasing, Decreasing };

    Direction direction = Direction::Decreasing;
    int ambient_dim = 0;
    std::map<int, Subspace> levels;

    bool empty() const { return levels.empty(); }
    int lo() const { return levels.begin()->first; }
    int hi() const { return levels.rbegin()->first; }

    const Subspace& at(int p) const;
    void validate() const;  // nesting; throws on violation

    Filtration conj() const;
};

}  // namespace nilorb
