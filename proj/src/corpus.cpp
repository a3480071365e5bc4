#include <nilorb/corpus.hpp>

#include <random>
#include <sstream>

namespace nilorb {

namespace {

Filtration decreasing_filtration(int ambient, std::map<int, std::vector<GVector>> spans) {
    Filtration f;
    f.direction = Filtration::Direction::Decreasing;
    f.ambient_dim = ambient;
    for (auto& [p, vs] : spans) f.levels[p] = echelonize(vs, ambient);
    f.validate();
    return f;
}

GVector unit(int n, int i) {
    GVector v(n);
    v[i] = GScalar(1);
    return v;
}

std::vector<GVector> full_basis(int n) {
    std::vector<GVector> b;
    for (int i = 0; i < n; ++i) b.push_back(unit(n, i));
    return b;
}

}  // namespace

NilpotentOrbit example_1_10_i() {
    NilpotentOrbit o;
    o.rank = 2;
    o.weight = -1;
    o.N = GMatrix::from_int({{0, 0}, {1, 0}});
    o.F = decreasing_filtration(2, {{-1, full_basis(2)}, {0, {unit(2, 0)}}});
    o.label = "1.10-i";
    return o;
}

NilpotentOrbit example_1_10_2() {
    NilpotentOrbit o;
    o.rank = 4;
    o.weight = -1;
    // basis order (e0, e1, f0, f1)
    o.N = GMatrix::from_int({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}});
    GVector v0(4), v1(4);
    v0[0] = GScalar(1);
    v0[2] = -gi();
    v1[1] = GScalar(1);
    v1[3] = -gi();
    o.F = decreasing_filtration(4, {{-1, full_basis(4)}, {0, {v0, v1}}});
    o.label = "1.10-2";
    return o;
}

NilpotentOrbit jordan_orbit(int size, int w, int hodge_top) {
    if (size < 1) throw std::invalid_argument("jordan_orbit: size must be >= 1");
    NilpotentOrbit o;
    o.rank = size;
    o.weight = w;
    o.N = GMatrix(size, size);
    for (int i = 0; i + 1 < size; ++i) o.N.at(i + 1, i) = GScalar(i + 1);

    std::map<int, std::vector<GVector>> spans;
    for (int p = hodge_top - size + 1; p <= hodge_top; ++p) {
        std::vector<GVector> vs;
        for (int i = 0; i <= hodge_top - p; ++i) vs.push_back(unit(size, i));
        spans[p] = vs;
    }
    o.F = decreasing_filtration(size, std::move(spans));
    std::ostringstream os;
    os << "jordan-" << size << "-w" << w << "-p" << hodge_top;
    o.label = os.str();
    return o;
}

NilpotentOrbit paired_jordan_orbit(int size, int w, int hodge_top) {
    if (size < 1) throw std::invalid_argument("paired_jordan_orbit: size must be >= 1");
    int sigma = hodge_top;
    int tau = w + size - 1 - sigma;
    if (sigma == tau)
        throw std::invalid_argument("paired_jordan_orbit: illegal Hodge shape (conjugate types coincide)");
    NilpotentOrbit o;
    o.rank = 2 * size;
    o.weight = w;
    o.N = GMatrix(o.rank, o.rank);
    for (int i = 0; i + 1 < size; ++i) {
        o.N.at(i + 1, i) = GScalar(i + 1);                  // e chain
        o.N.at(size + i + 1, size + i) = GScalar(i + 1);    // f chain
    }
    auto vj = [&](int j) {  // e_j - i f_j
        GVector v(o.rank);
        v[j] = GScalar(1);
        v[size + j] = -gi();
        return v;
    };
    auto wj = [&](int j) {  // e_j + i f_j
        GVector v(o.rank);
        v[j] = GScalar(1);
        v[size + j] = gi();
        return v;
    };
    int p_top = std::max(sigma, tau);
    int p_bot = std::min(sigma, tau) - size + 1;
    std::map<int, std::vector<GVector>> spans;
    for (int p = p_bot; p <= p_top; ++p) {
        std::vector<GVector> vs;
        for (int j = 0; j < size; ++j) {
            if (sigma - j >= p) vs.push_back(vj(j));
            if (tau - j >= p) vs.push_back(wj(j));
        }
        spans[p] = vs;
    }
    // level below the lowest jump: full
    spans[p_bot - 1] = full_basis(o.rank);
    o.F = decreasing_filtration(o.rank, std::move(spans));
    std::ostringstream os;
    os << "paired-" << size << "-w" << w << "-p" << hodge_top;
    o.label = os.str();
    return o;
}

NilpotentOrbit twisted_jordan3() {
    NilpotentOrbit o;
    o.rank = 3;
    o.weight = -2;
    o.N = GMatrix::from_int({{0, 0, 0}, {1, 0, 0}, {0, 2, 0}});
    GVector u0(3), nu0(3);
    u0[0] = GScalar(1);
    u0[1] = gi();  // e0 + i e1
    nu0 = o.N.apply(u0);
    o.F = decreasing_filtration(3, {{-2, full_basis(3)}, {-1, {u0, nu0}}, {0, {u0}}});
    o.label = "twisted-3";
    return o;
}

NilpotentOrbit direct_sum(const std::vector<NilpotentOrbit>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
    int rank = 0;
    for (const auto& p : parts) {
        if (p.weight != parts[0].weight)
            throw std::invalid_argument("direct_sum: parts must share one weight");
        rank += p.rank;
    }
    NilpotentOrbit o;
    o.rank = rank;
    o.weight = parts[0].weight;
    o.N = GMatrix(rank, rank);
    int off = 0;
    int p_lo = parts[0].F.lo(), p_hi = parts[0].F.hi();
    for (const auto& p : parts) {
        for (int i = 0; i < p.rank; ++i)
            for (int j = 0; j < p.rank; ++j) o.N.at(off + i, off + j) = p.N.at(i, j);
        off += p.rank;
        p_lo = std::min(p_lo, p.F.lo());
        p_hi = std::max(p_hi, p.F.hi());
    }
    std::map<int, std::vector<GVector>> spans;
    for (int lev = p_lo; lev <= p_hi; ++lev) {
        std::vector<GVector> vs;
        off = 0;
        for (const auto& p : parts) {
            for (const auto& b : p.F.at(lev).basis) {
                GVector v(rank);
                for (int i = 0; i < p.rank; ++i) v[off + i] = b[i];
                vs.push_back(std::move(v));
            }
            off += p.rank;
        }
        spans[lev] = vs;
    }
    o.F = decreasing_filtration(rank, std::move(spans));
    std::string lbl;
    for (const auto& p : parts) {
        if (!lbl.empty()) lbl += "+";
        lbl += p.label;
    }
    o.label = lbl;
    return o;
}

NilpotentOrbit random_split_orbit(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    OrbitShape shape;
    shape.weight = -pick(1, 3);
    int w = shape.weight;
    int blocks = pick(1, 3);
    int total = 0;
    for (int b = 0; b < blocks && total < 6; ++b) {
        bool paired = (rng() % 2 == 0);
        if (paired) {
            int size = pick(1, 2);
            if (total + 2 * size > 6) size = 1;
            if (total + 2 * size > 6) break;
            int sigma = (w + size) / 2 + 1;  // guaranteed != w+size-1-sigma
            while (2 * sigma == w + size - 1) ++sigma;
            shape.blocks.push_back({true, size, sigma});
            total += 2 * size;
        } else {
            // single block needs w + size odd for purity
            int size = ((w % 2) == 0) ? (pick(0, 1) * 2 + 1) : 2;
            if (total + size > 6) break;
            shape.blocks.push_back({false, size, (w + size - 1) / 2});
            total += size;
        }
    }
    if (shape.blocks.empty()) {
        int size = ((w % 2) == 0) ? 1 : 2;
        shape.blocks.push_back({false, size, (w + size - 1) / 2});
    }
    return random_split_orbit(rng(), shape);
}

NilpotentOrbit random_split_orbit(std::uint64_t seed, const OrbitShape& shape) {
    if (shape.blocks.empty())
        throw std::invalid_argument("random_split_orbit: empty shape");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    int w = shape.weight;
    std::vector<NilpotentOrbit> parts;
    for (const auto& b : shape.blocks) {
        parts.push_back(b.paired ? paired_jordan_orbit(b.size, w, b.hodge_top)
                                 : jordan_orbit(b.size, w, b.hodge_top));
    }
    NilpotentOrbit o = direct_sum(parts);

    // Random unipotent integer change of basis; the inverse is exact, so
    // the lattice and all structure are transported faithfully.
    int n = o.rank;
    GMatrix u = GMatrix::identity(n);
    int shears = 2 * n;
    for (int s = 0; s < shears; ++s) {
        int i = pick(0, n - 1), j = pick(0, n - 1);
        if (i == j) continue;
        long c = pick(-2, 2);
        if (c == 0) continue;
        GMatrix e = GMatrix::identity(n);
        e.at(i, j) = GScalar(c);
        u = u.mul(e);
    }
    GMatrix uinv = inverse(u);
    NilpotentOrbit t;
    t.rank = n;
    t.weight = w;
    t.N = u.mul(o.N).mul(uinv);
    Filtration f;
    f.direction = Filtration::Direction::Decreasing;
    f.ambient_dim = n;
    for (const auto& [p, s] : o.F.levels) f.levels[p] = image_of(u, s);
    f.validate();
    t.F = f;
    std::ostringstream os;
    os << "random-" << seed;
    t.label = os.str();
    return t;
}

std::vector<OrbitRecipe> builtin_recipes() {
    std::vector<OrbitRecipe> rs;
    rs.push_back({"1.10-i", example_1_10_i(), true, true, true});
    rs.push_back({"1.10-2", example_1_10_2(), true, false, false});
    rs.push_back({"1.10-i+1.10-i", direct_sum({example_1_10_i(), example_1_10_i()}), true, true, true});
    rs.push_back({"jordan-2", jordan_orbit(2, -1, 0), true, true, true});
    rs.push_back({"jordan-3", jordan_orbit(3, -2, 0), true, true, true});
    rs.push_back({"paired-1", paired_jordan_orbit(1, -1, 0), true, true, false});
    rs.push_back({"paired-2", paired_jordan_orbit(2, -2, 0), true, true, false});
    rs.push_back({"twisted-3", twisted_jordan3(), true, true, false});
    return rs;
}

std::optional<NilpotentOrbit> orbit_by_name(const std::string& name) {
    for (auto& r : builtin_recipes())
        if (r.name == name) return r.orbit;
    if (name.rfind("random-", 0) == 0) {
        std::uint64_t seed = std::stoull(name.substr(7));
        return random_split_orbit(seed);
    }
    return std::nullopt;
}

std::vector<std::string> recipe_names() {
    std::vector<std::string> names;
    for (auto& r : builtin_recipes()) names.push_back(r.name);
    names.push_back("random-<seed>");
    return names;
}

}  // namespace nilorb
