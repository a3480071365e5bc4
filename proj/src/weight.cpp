#include <nilorb/weight.hpp>

namespace nilorb {

WeightFiltration monodromy_weight_filtration(const GMatrix& n, int w) {
    int m = nilpotency_depth(n);  // throws when not nilpotent
    int dim = n.rows;

    // powers up to 2m+1: ker N^a = full and im N^a = 0 once a > m
    std::vector<Subspace> kers, ims;
    GMatrix p = GMatrix::identity(dim);
    for (int a = 0; a <= 2 * m + 1; ++a) {
        kers.push_back(kernel(p));
        ims.push_back(image(p));
        p = p.mul(n);
    }

    // Closed form of the inductive construction:
    //   W_{w+k} = sum over j >= max(k,0) of ker N^{j+1} cap im N^{j-k}.
    WeightFiltration wf;
    wf.center = w;
    wf.depth = m;
    wf.levels.direction = Filtration::Direction::Increasing;
    wf.levels.ambient_dim = dim;
    for (int k = -m; k <= m; ++k) {
        Subspace acc = Subspace::zero(dim);
        for (int j = std::max(k, 0); j <= m; ++j) {
            acc = sum(acc, intersection(kers[j + 1], ims[j - k]));
        }
        wf.levels.levels[w + k] = acc;
    }
    wf.levels.validate();

    if (!weight_conditions_hold(n, wf))
        throw std::logic_error("monodromy_weight_filtration: characterizing conditions failed");
    return wf;
}

bool weight_conditions_hold(const GMatrix& n, const WeightFiltration& wf) {
    int w = wf.center;
    int m = wf.depth;
    int dim = n.rows;
    if (wf.levels.empty()) return false;
    if (wf.levels.at(w + m).dim() != dim) return false;
    if (wf.levels.at(w - m - 1).dim() != 0) return false;

    // N W_j <= W_{j-2}
    for (int j = w - m; j <= w + m; ++j) {
        if (!wf.levels.at(j - 2).contains(image_of(n, wf.levels.at(j)))) return false;
    }
    // N^i : Gr_{w+i} ~ Gr_{w-i}
    for (int i = 1; i <= m; ++i) {
        GradedLevel top = make_graded_level(w + i, wf.levels.at(w + i), wf.levels.at(w + i - 1));
        GradedLevel bot = make_graded_level(w - i, wf.levels.at(w - i), wf.levels.at(w - i - 1));
        if (top.dim != bot.dim) return false;
        GMatrix ind = induced_between(n.pow(i), top, bot);
        Subspace k = kernel(ind);
        if (!k.is_zero()) return false;
    }
    return true;
}

GradedLevel make_graded_level(int level, const Subspace& whole, const Subspace& sub) {
    if (!whole.contains(sub))
        throw std::invalid_argument("make_graded_level: sub not inside whole");
    GradedLevel g;
    g.level = level;
    g.whole = whole;
    g.sub = sub;
    std::vector<bool> sub_pivot(whole.ambient_dim, false);
    for (int p : sub.pivot_columns) sub_pivot[p] = true;
    for (size_t i = 0; i < whole.basis.size(); ++i) {
        if (sub_pivot[whole.pivot_columns[i]]) continue;
        g.comp_basis.push_back(sub.reduce(whole.basis[i]));
    }
    g.dim = static_cast<int>(g.comp_basis.size());
    return g;
}

GVector GradedLevel::project(const GVector& v) const {
    if (!whole.contains(v))
        throw std::invalid_argument("GradedLevel::project: vector outside W_k");
    if (dim == 0) return {};
    std::vector<GVector> cols = comp_basis;
    for (const auto& b : sub.basis) cols.push_back(b);
    GVector coords = coordinates_in(cols, v);
    coords.resize(dim);
    return coords;
}

Subspace GradedLevel::induced_subspace(const Subspace& s) const {
    Subspace cut = intersection(s, whole);
    std::vector<GVector> classes;
    for (const auto& b : cut.basis) classes.push_back(project(b));
    return echelonize(classes, dim);
}

GVector GradedLevel::lift(const GVector& c) const {
    if (static_cast<int>(c.size()) != dim)
        throw std::invalid_argument("GradedLevel::lift: dimension mismatch");
    GVector v(whole.ambient_dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < whole.ambient_dim; ++j) v[j] += c[i] * comp_basis[i][j];
    return v;
}

GMatrix induced_between(const GMatrix& m, const GradedLevel& from, const GradedLevel& to) {
    if (!to.whole.contains(image_of(m, from.whole)) || !to.sub.contains(image_of(m, from.sub)))
        throw std::invalid_argument("induced_between: map does not respect the pairs");
    GMatrix r(to.dim, from.dim);
    for (int j = 0; j < from.dim; ++j) {
        GVector c = to.project(m.apply(from.comp_basis[j]));
        for (int i = 0; i < to.dim; ++i) r.at(i, j) = c[i];
    }
    return r;
}

}  // namespace nilorb
