#include <nilorb/linalg.hpp>

#include <stdexcept>

namespace nilorb {

GVector conj(const GVector& v) {
    GVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
    return r;
}

bool is_zero(const GVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

GMatrix GMatrix::identity(int n) {
    GMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GScalar(1);
    return m;
}

GMatrix GMatrix::from_int(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    GMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("GMatrix::from_int: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = GScalar(rows[i][j]);
    }
    return m;
}

GVector GMatrix::apply(const GVector& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw std::invalid_argument("GMatrix::apply: dimension mismatch");
    GVector r(rows);
    for (int i = 0; i < rows; ++i) {
        GScalar s;
        for (int j = 0; j < cols; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
        }
        r[i] = s;
    }
    return r;
}

GMatrix GMatrix::mul(const GMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("GMatrix::mul: dimension mismatch");
    GMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const GScalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

GMatrix GMatrix::add(const GMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("GMatrix::add: dimension mismatch");
    GMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

GMatrix GMatrix::scale(const GScalar& c) const {
    GMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * c;
    return r;
}

GMatrix GMatrix::pow(int k) const {
    if (rows != cols) throw std::invalid_argument("GMatrix::pow: square matrix required");
    GMatrix r = identity(rows);
    for (int i = 0; i < k; ++i) r = r.mul(*this);
    return r;
}

GMatrix GMatrix::conj() const {
    GMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i].conj();
    return r;
}

GVector GMatrix::col(int j) const {
    GVector v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

GVector GMatrix::row(int i) const {
    GVector v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

bool GMatrix::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns pivot columns in order.
std::vector<int> rref(std::vector<GVector>& rows, int width) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int c = 0; c < width && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        GScalar inv = GScalar(1) / rows[r][c];
        for (int j = c; j < width; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            GScalar f = rows[i][c];
            for (int j = c; j < width; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

Subspace Subspace::zero(int n) {
    Subspace s;
    s.ambient_dim = n;
    return s;
}

Subspace Subspace::full(int n) {
    Subspace s;
    s.ambient_dim = n;
    for (int i = 0; i < n; ++i) {
        GVector v(n);
        v[i] = GScalar(1);
        s.basis.push_back(std::move(v));
        s.pivot_columns.push_back(i);
    }
    return s;
}

GVector Subspace::reduce(const GVector& v) const {
    if (static_cast<int>(v.size()) != ambient_dim)
        throw std::invalid_argument("Subspace::reduce: dimension mismatch");
    GVector r = v;
    for (size_t i = 0; i < basis.size(); ++i) {
        const GScalar& c = r[pivot_columns[i]];
        if (c.is_zero()) continue;
        GScalar f = c;
        for (int j = pivot_columns[i]; j < ambient_dim; ++j) r[j] -= f * basis[i][j];
    }
    return r;
}

bool Subspace::contains(const GVector& v) const { return nilorb::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    if (ambient_dim != o.ambient_dim)
        throw std::invalid_argument("Subspace::contains: dimension mismatch");
    for (const auto& b : o.basis)
        if (!contains(b)) return false;
    return true;
}

Subspace echelonize(const std::vector<GVector>& vectors, int ambient_dim) {
    std::vector<GVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw std::invalid_argument("echelonize: dimension mismatch");
        rows.push_back(v);
    }
    Subspace s;
    s.ambient_dim = ambient_dim;
    s.pivot_columns = rref(rows, ambient_dim);
    s.basis = std::move(rows);
    return s;
}

Subspace conj(const Subspace& s) {
    // Conjugating an RREF basis keeps it in RREF with the same pivots.
    Subspace r = s;
    for (auto& v : r.basis) v = conj(v);
    return r;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("sum: dimension mismatch");
    std::vector<GVector> all = a.basis;
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    return echelonize(all, a.ambient_dim);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("intersection: dimension mismatch");
    // Zassenhaus: row-reduce [A|A; B|0]; rows with vanishing left half
    // carry an intersection basis in the right half.
    int n = a.ambient_dim;
    std::vector<GVector> rows;
    for (const auto& v : a.basis) {
        GVector w(2 * n);
        for (int j = 0; j < n; ++j) {
            w[j] = v[j];
            w[n + j] = v[j];
        }
        rows.push_back(std::move(w));
    }
    for (const auto& v : b.basis) {
        GVector w(2 * n);
        for (int j = 0; j < n; ++j) w[j] = v[j];
        rows.push_back(std::move(w));
    }
    rref(rows, 2 * n);
    std::vector<GVector> inter;
    for (const auto& w : rows) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) left_zero = w[j].is_zero();
        if (!left_zero) continue;
        GVector v(n);
        for (int j = 0; j < n; ++j) v[j] = w[n + j];
        if (!is_zero(v)) inter.push_back(std::move(v));
    }
    return echelonize(inter, n);
}

Subspace kernel(const GMatrix& m) {
    std::vector<GVector> rows;
    for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
    std::vector<int> pivots = rref(rows, m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<GVector> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        GVector v(m.cols);
        v[f] = GScalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return echelonize(basis, m.cols);
}

Subspace image(const GMatrix& m) {
    std::vector<GVector> cols;
    for (int j = 0; j < m.cols; ++j) cols.push_back(m.col(j));
    return echelonize(cols, m.rows);
}

Subspace image_of(const GMatrix& m, const Subspace& s) {
    if (m.cols != s.ambient_dim) throw std::invalid_argument("image_of: dimension mismatch");
    std::vector<GVector> vs;
    for (const auto& b : s.basis) vs.push_back(m.apply(b));
    return echelonize(vs, m.rows);
}

Subspace preimage_of(const GMatrix& m, const Subspace& s) {
    if (m.rows != s.ambient_dim) throw std::invalid_argument("preimage_of: dimension mismatch");
    // x is in the preimage iff Mx reduces to zero mod s, so take the
    // kernel of the column-wise reduced matrix.
    GMatrix red(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j) {
        GVector c = s.reduce(m.col(j));
        for (int i = 0; i < m.rows; ++i) red.at(i, j) = c[i];
    }
    return kernel(red);
}

std::optional<GVector> solve_particular(const GMatrix& a, const GVector& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_particular: dimension mismatch");
    std::vector<GVector> rows;
    for (int i = 0; i < a.rows; ++i) {
        GVector w(a.cols + 1);
        for (int j = 0; j < a.cols; ++j) w[j] = a.at(i, j);
        w[a.cols] = b[i];
        rows.push_back(std::move(w));
    }
    std::vector<int> pivots = rref(rows, a.cols + 1);
    GVector x(a.cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols) return std::nullopt;  // 0 = 1 row
        x[pivots[r]] = rows[r][a.cols];
    }
    return x;
}

GVector coordinates_in(const std::vector<GVector>& columns, const GVector& v) {
    if (columns.empty()) {
        if (!is_zero(v)) throw std::invalid_argument("coordinates_in: vector outside span");
        return {};
    }
    int n = static_cast<int>(columns[0].size());
    GMatrix m(n, static_cast<int>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j) {
        if (static_cast<int>(columns[j].size()) != n)
            throw std::invalid_argument("coordinates_in: ragged columns");
        for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = columns[j][i];
    }
    auto x = solve_particular(m, v);
    if (!x) throw std::invalid_argument("coordinates_in: vector outside span");
    return *x;
}

GMatrix inverse(const GMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrix required");
    int n = m.rows;
    std::vector<GVector> rows;
    for (int i = 0; i < n; ++i) {
        GVector w(2 * n);
        for (int j = 0; j < n; ++j) w[j] = m.at(i, j);
        w[n + i] = GScalar(1);
        rows.push_back(std::move(w));
    }
    std::vector<int> pivots = rref(rows, 2 * n);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::invalid_argument("inverse: singular matrix");
    GMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = rows[i][n + j];
    return r;
}

GMatrix induced_map_on_quotient(const GMatrix& m, const Subspace& sub, const Subspace& quot_of) {
    if (m.rows != m.cols || m.cols != sub.ambient_dim || sub.ambient_dim != quot_of.ambient_dim)
        throw std::invalid_argument("induced_map_on_quotient: dimension mismatch");
    if (!quot_of.contains(sub))
        throw std::invalid_argument("induced_map_on_quotient: sub not inside quot_of");
    if (!quot_of.contains(image_of(m, quot_of)) || !sub.contains(image_of(m, sub)))
        throw std::invalid_argument("induced_map_on_quotient: map does not preserve the pair");

    // Canonical complement: quot_of basis rows whose pivot is not a pivot
    // of sub, reduced mod sub. Their pivots survive reduction, so they
    // stay independent modulo sub.
    std::vector<bool> sub_pivot(sub.ambient_dim, false);
    for (int p : sub.pivot_columns) sub_pivot[p] = true;
    std::vector<GVector> comp;
    for (size_t i = 0; i < quot_of.basis.size(); ++i) {
        if (sub_pivot[quot_of.pivot_columns[i]]) continue;
        comp.push_back(sub.reduce(quot_of.basis[i]));
    }
    int d = static_cast<int>(comp.size());

    // Coordinates on the quotient: solve against [comp | sub basis].
    std::vector<GVector> cols = comp;
    for (const auto& b : sub.basis) cols.push_back(b);
    GMatrix r(d, d);
    for (int j = 0; j < d; ++j) {
        GVector coords = coordinates_in(cols, m.apply(comp[j]));
        for (int i = 0; i < d; ++i) r.at(i, j) = coords[i];
    }
    return r;
}

const Subspace& Filtration::at(int p) const {
    if (levels.empty()) throw std::logic_error("Filtration::at: empty filtration");
    if (direction == Direction::Increasing) {
        if (p < lo()) {
            static thread_local std::map<int, Subspace> zeros;
            auto [it, _] = zeros.try_emplace(ambient_dim, Subspace::zero(ambient_dim));
            return it->second;
        }
        if (p > hi()) return levels.rbegin()->second;
        auto it = levels.upper_bound(p);
        --it;
        return it->second;
    }
    // decreasing
    if (p > hi()) {
        static thread_local std::map<int, Subspace> zeros;
        auto [it, _] = zeros.try_emplace(ambient_dim, Subspace::zero(ambient_dim));
        return it->second;
    }
    if (p < lo()) return levels.begin()->second;
    auto it = levels.lower_bound(p);
    return it->second;
}

void Filtration::validate() const {
    const Subspace* prev = nullptr;
    for (const auto& [p, s] : levels) {
        if (s.ambient_dim != ambient_dim)
            throw std::invalid_argument("Filtration: ambient dimension mismatch");
        if (prev) {
            bool ok = (direction == Direction::Increasing) ? s.contains(*prev) : prev->contains(s);
            if (!ok) throw std::invalid_argument("Filtration: levels not nested");
        }
        prev = &s;
    }
}

Filtration Filtration::conj() const {
    Filtration f = *this;
    for (auto& [p, s] : f.levels) s = nilorb::conj(s);
    return f;
}

}  // namespace nilorb
