// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances and bounds in code.
#include <nilorb/corpus.hpp>
#include <nilorb/estimates.hpp>
#include <nilorb/lemma25.hpp>
#include <nilorb/orbit_io.hpp>
#include <nilorb/searches.hpp>
#include <nilorb/sublemma.hpp>

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>

using namespace nilorb;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string what) : number_(number), what_(std::move(what)) {
        start_ = std::chrono::steady_clock::now();
    }
    void finish(bool ok, const std::string& detail = "") {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number_,
                    what_.c_str(), elapsed.count(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    int number_;
    std::string what_;
    std::chrono::steady_clock::time_point start_;
};

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(NILORB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void criterion_1_accumulation() {
    Criterion c(1, "non-Hausdorff witnesses at (1, gamma), exact zeros for n = 1..20");
    SectionModel m = build_section_model(example_1_10_2());
    GVector target = parse_tuple("(1, 1/2+1/4i)");
    SearchBounds b;
    b.coeff_bound = 21;
    b.grid.r = 1.1;
    b.grid.y_max = 25.0;
    b.grid.y_levels = 6;
    AccumulationWitness w = find_accumulation(m, target, 1e-9, b, 20);
    bool ok = w.found && w.sequence.size() == 20;
    double prev = 0;
    for (size_t i = 0; ok && i < 20; ++i) {
        const auto& e = w.sequence[i];
        ok = ok && e.exact && e.exact_zero && e.distance == 0.0;
        ok = ok && std::abs(e.z.imag() - (static_cast<double>(i) + 1.25)) < 1e-12;
        ok = ok && e.z.imag() > prev;
        prev = e.z.imag();
    }
    bool fast = c.seconds() < 1.0;
    c.finish(ok && fast, ok ? (fast ? "" : "too slow") : "witness pattern broken");
}

void criterion_2_separation() {
    Criterion c(2, "invariant-part separation certificates at (0,gamma) and 0");
    SectionModel m2 = build_section_model(example_1_10_2());
    GVector p2 = parse_tuple("(0, 1/2+1/4i)");
    SeparationParams sp;
    sp.radius = Rational(1, 5);
    sp.coeff_bound = 50;
    sp.grid.r = 2.0;
    sp.grid.y_max = 1e6;
    sp.grid.y_levels = 25;
    auto t0 = std::chrono::steady_clock::now();
    SeparationReport r2 = certify_separation(m2, p2, sp);
    double sec2 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    SectionModel mi = build_section_model(example_1_10_i());
    GVector pi(1);
    SeparationParams spi;
    spi.radius = Rational(2, 5);
    spi.coeff_bound = 50;
    spi.grid.r = 2.0;
    spi.grid.y_max = 1e6;
    spi.grid.y_levels = 25;
    auto t1 = std::chrono::steady_clock::now();
    SeparationReport ri = certify_separation(mi, pi, spi);
    double seci = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();

    bool ok = r2.certified && r2.intruders.empty() && r2.target_invariant && sec2 < 10.0 &&
              ri.certified && ri.intruders.empty() && seci < 10.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "(0,g): %s %.2fs; 0: %s %.2fs",
                  r2.certified ? "certified" : "NOT", sec2, ri.certified ? "certified" : "NOT",
                  seci);
    c.finish(ok, detail);
}

void criterion_3_epsilon() {
    Criterion c(3, "positive and grid-stable epsilon; direct sum stays positive");
    SectionModel m = build_section_model(example_1_10_i());
    EstimateParams p;
    p.bound = 20;
    p.grid.r = 2.0;
    p.grid.re_steps = 8;
    p.grid.y_levels = 12;
    GVector v(1);
    EstimateReport base = estimate_epsilon(m, v, p);
    EstimateParams dense = p;
    dense.grid.re_steps = 16;
    dense.grid.y_density = 2;
    EstimateReport fine = estimate_epsilon(m, v, dense);
    SectionModel md = build_section_model(direct_sum({example_1_10_i(), example_1_10_i()}));
    GVector vd(2);
    EstimateReport dsum = estimate_epsilon(md, vd, p);

    bool ok = base.epsilon > 0 && fine.epsilon > 0 && dsum.epsilon > 0;
    double drift = std::abs(base.epsilon - fine.epsilon) / base.epsilon;
    ok = ok && drift < 0.05;
    bool fast = c.seconds() < 60.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "eps=%.6f refined=%.6f drift=%.2f%% dsum=%.6f",
                  base.epsilon, fine.epsilon, 100 * drift, dsum.epsilon);
    c.finish(ok && fast, detail);
}

void criterion_4_vanishing() {
    Criterion c(4, "normalized iota: unsupported u gives exactly zero k-norm (1000 cases)");
    std::mt19937_64 rng(424242);
    int cases = 0;
    int bad = 0;
    std::uint64_t seed = 0;
    while (cases < 1000) {
        SectionModel m = build_section_model(random_split_orbit(++seed));
        if (!m.hodge() || m.depth < 1) continue;
        const BiGradedSpace& gh = *m.g_hodge;
        const BiGradedSpace& gq = m.g_rational;
        GMatrix iota0 = m.iota->kernel_diagonal_part(gq, gh);
        GMatrix shift = gh.shift_matrix();
        for (int rep = 0; rep < 50 && cases < 1000; ++rep) {
            int k = 1 + static_cast<int>(rng() % m.depth);
            // u with all components at kernel index >= k removed
            GVector u(m.rank);
            bool nonzero = false;
            for (int i = 0; i < m.rank; ++i) {
                if (gq.coord_k[i] >= k) continue;
                long val = static_cast<long>(rng() % 21) - 10;
                u[i] = GScalar(val);
                nonzero = nonzero || val != 0;
            }
            if (!nonzero) continue;
            // exact coefficients of the k-component of phi(iota0(u); z)
            GVector w = iota0.apply(u);
            bool zero = true;
            GVector current = w;
            for (int a = 0; a <= m.depth && zero; ++a) {
                if (a > 0) current = shift.apply(current);
                for (int i = 0; i < gh.total; ++i)
                    if (gh.coord_negative[i] && gh.coord_k[i] == k && !current[i].is_zero())
                        zero = false;
            }
            // float check at a strip sample
            if (zero) {
                std::complex<double> z(0.37, 2.0 + static_cast<double>(rng() % 64));
                PhiPoly poly;
                poly.cf.resize(m.depth + 1);
                GVector cur = w;
                Rational fact(1);
                for (int a = 0; a <= m.depth; ++a) {
                    if (a > 0) {
                        cur = shift.apply(cur);
                        fact *= a;
                    }
                    std::vector<std::complex<double>> row;
                    for (int i = 0; i < gh.total; ++i)
                        if (gh.coord_negative[i] && gh.coord_k[i] == k)
                            row.push_back(GScalar(cur[i] * GScalar(Rational(1) / fact)).to_complex());
                    poly.cf[a] = row;
                }
                auto val = poly.eval(z);
                for (const auto& x : val)
                    if (mu(x) != 0.0) zero = false;
            }
            if (!zero) ++bad;
            ++cases;
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "%d cases, %d failures", cases, bad);
    c.finish(bad == 0, detail);
}

void criterion_5_weight_oracle() {
    Criterion c(5, "weight filtration equals the exhaustive-search oracle");
    std::mt19937_64 rng(515151);
    bool ok = true;
    // 200 random integer nilpotent matrices of rank <= 4: uniqueness
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 3);
        GMatrix n = nilorb_test::random_nilpotent(rng, dim);
        WeightFiltration wf = monodromy_weight_filtration(n, -1);
        WeightFiltration found;
        if (nilorb_test::count_weight_filtrations(n, -1, &found) != 1) {
            ok = false;
            break;
        }
        for (int j = -1 - wf.depth; j <= -1 + wf.depth; ++j)
            if (!(found.levels.at(j) == wf.levels.at(j))) ok = false;
    }
    // rank <= 8: both characterizing conditions verified directly
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 7);
        GMatrix n = nilorb_test::random_nilpotent(rng, dim);
        WeightFiltration wf = monodromy_weight_filtration(n, -2);
        if (!weight_conditions_hold(n, wf)) ok = false;
    }
    bool fast = c.seconds() < 30.0;
    c.finish(ok && fast, fast ? "" : "too slow");
}

void criterion_6_splitting_invariants() {
    Criterion c(6, "alpha invariants on 100 random split orbits");
    int bad = 0;
    for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
        NilpotentOrbit o = random_split_orbit(seed);
        // construct_alpha enforces N-equivariance and graded identity
        // internally and throws on violation
        SectionModel m = build_section_model(o);
        if (!m.hodge()) {
            ++bad;
            continue;
        }
        const BiGradedSpace& gh = *m.g_hodge;
        const BiGradedSpace& gq = m.g_rational;
        for (int col = 0; col < o.rank; ++col)
            for (int row = 0; row < o.rank; ++row)
                if (gh.coord_k[row] > gq.coord_k[col] && !m.iota->iota.at(row, col).is_zero())
                    ++bad;
        GMatrix lhs = m.iota->iota.mul(gq.shift_matrix());
        GMatrix rhs = gh.shift_matrix().mul(m.iota->iota);
        if (!(lhs == rhs)) ++bad;
    }
    char detail[48];
    std::snprintf(detail, sizeof(detail), "%d violations", bad);
    c.finish(bad == 0, detail);
}

void criterion_7_lemma25() {
    Criterion c(7, "polynomial estimate harness: finite, stable fitted constants");
    int cfgs[3][3] = {{1, 1, 1}, {2, 2, 1}, {3, 2, 2}};
    bool ok = true;
    char detail[160];
    std::string ds;
    for (auto& cfg : cfgs) {
        double cs[3];
        for (int s = 0; s < 3; ++s) {
            Lemma25Params p;
            p.n = cfg[0];
            p.n1 = cfg[1];
            p.n2 = cfg[2];
            p.a = 1.0;
            p.a_prime = 1.0;
            p.eps = 0.0625;
            p.r = 2.0;
            p.trials = 10000;
            p.seed = static_cast<std::uint64_t>(s + 1);
            Lemma25Report rep = lemma25_harness(p);
            cs[s] = rep.c_empirical;
            ok = ok && rep.satisfying > 0 && std::isfinite(rep.c_empirical) && rep.c_empirical > 0;
            // no violation of A <= C with the fitted C: the fit is the max,
            // so check every seed stays within the overall fit
        }
        double lo = std::min({cs[0], cs[1], cs[2]});
        double hi = std::max({cs[0], cs[1], cs[2]});
        ok = ok && (hi - lo) / hi < 0.10;
        char one[48];
        std::snprintf(one, sizeof(one), "n=%d%d%d drift=%.1f%% ", cfg[0], cfg[1], cfg[2],
                      100 * (hi - lo) / hi);
        ds += one;
    }
    std::snprintf(detail, sizeof(detail), "%s", ds.c_str());
    c.finish(ok, detail);
}

void criterion_8_sublemma() {
    Criterion c(8, "sublemma: eigenvalue and simplex routes agree; hand cases reproduce");
    std::mt19937_64 rng(88);
    std::uniform_real_distribution<double> cdist(0.1, 2.0);
    std::uniform_real_distribution<double> edist(0.02, 0.45);
    bool ok = true;
    int checked = 0;
    while (checked < 100) {
        int msize = 1 + static_cast<int>(rng() % 5);
        std::vector<std::vector<double>> cmat;
        for (int i = 0; i <= msize; ++i) {
            std::vector<double> row;
            for (int j = 0; j < i; ++j) row.push_back(cdist(rng));
            cmat.push_back(std::move(row));
        }
        double eps2 = edist(rng);
        SublemmaResult r = sublemma_check(cmat, eps2);
        if (std::abs(r.rho - 1.0) < 1e-3) continue;  // numerically undecidable edge
        if (!r.routes_agree) ok = false;
        ++checked;
    }
    std::vector<std::vector<double>> hand{{}, {1.0}};
    ok = ok && sublemma_check(hand, 0.1).forces_zero;
    ok = ok && !sublemma_check(hand, 0.45).forces_zero;
    c.finish(ok);
}

void criterion_9_deck_and_exactness() {
    Criterion c(9, "deck invariance and exact/float agreement on the full corpus");
    std::mt19937_64 rng(99);
    bool ok = true;
    std::vector<NilpotentOrbit> corpus;
    for (const auto& rec : builtin_recipes()) corpus.push_back(rec.orbit);
    for (std::uint64_t seed = 300; seed < 310; ++seed) corpus.push_back(random_split_orbit(seed));
    for (const auto& orbit : corpus) {
        SectionModel m = build_section_model(orbit);
        for (int t = 0; t < 20; ++t) {
            std::vector<long> u(m.rank);
            bool nonzero = false;
            for (int i = 0; i < m.rank; ++i) {
                u[i] = static_cast<long>(rng() % 13) - 6;
                nonzero = nonzero || u[i] != 0;
            }
            if (!nonzero) u[static_cast<int>(rng() % m.rank)] = 1;
            GVector uv(m.rank);
            for (int i = 0; i < m.rank; ++i) uv[i] = GScalar(u[i]);
            if (!monodromy_consistency_exact(m, uv)) ok = false;
            std::complex<double> z(static_cast<double>(rng() % 8) / 8.0,
                                   2.0 + static_cast<double>(rng() % 32));
            if (!monodromy_consistency(m, u, z, 1e-12)) ok = false;
            // exact vs float at an exactly representable strip point
            PhiPoly poly = make_phi(m, u);
            GScalar ze(Rational(static_cast<long>(rng() % 8), 8),
                       Rational(2 + static_cast<long>(rng() % 64)));
            GVector exact = poly.eval_exact(ze);
            auto approx = poly.eval(ze.to_complex());
            for (int i = 0; i < m.fiber_dim; ++i) {
                std::complex<double> e = exact[i].to_complex();
                if (std::abs(e - approx[i]) > 1e-12 * std::max(1.0, std::abs(e))) ok = false;
            }
        }
    }
    c.finish(ok);
}

void criterion_10_cli() {
    Criterion c(10, "CLI determinism and the exit-code convention");
    bool ok = true;

    const char* repeated[] = {
        "estimate-epsilon --example 1.10-i --bound 6 --grid-y 4 --seed 5",
        "find-accumulation --example 1.10-2 --target \"(1, 1/2+1/4i)\" --bound 10 --y-max 12",
        "lemma25 --n 1 --n1 1 --n2 1 --trials 1000 --seed 2",
    };
    for (const char* cmd : repeated) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        if (a.out != b.out || a.out.empty() || a.exit_code != b.exit_code) ok = false;
    }

    struct Expected {
        const char* cmd;
        int code;
    } matrix[] = {
        {"validate --example 1.10-i", 0},
        {"validate --example 1.10-2", 0},
        {"limit-mhs --example 1.10-2", 1},
        {"alpha --example twisted-3", 0},
        {"sublemma --cmat [[],[1.0]] --eps2 0.45", 1},
        {"find-accumulation --example 1.10-i --target \"(1/2)\" --bound 5 --y-max 20 --tol 0.001", 1},
        {"certify-separation --example 1.10-i --radius 0.4 --bound 10 --y-max 100", 0},
        {"certify-separation --example 1.10-2 --target \"(1, 1/2+1/4i)\" --radius 0.2 --bound 8 --y-max 30", 1},
        {"frobnicate", 2},
        {"validate --example unknown-orbit", 2},
        {"validate --orbit /tmp/does-not-exist.json", 2},
        {"sublemma --cmat [[],[-1.0]] --eps2 0.1", 2},
    };
    for (const auto& e : matrix) {
        RunResult r = run_cli(e.cmd);
        if (r.exit_code != e.code) {
            std::printf("  exit mismatch: %s -> %d (want %d)\n", e.cmd, r.exit_code, e.code);
            ok = false;
        }
    }
    c.finish(ok);
}

}  // namespace

int main() {
    std::printf("nilorb acceptance suite\n");
    criterion_1_accumulation();
    criterion_2_separation();
    criterion_3_epsilon();
    criterion_4_vanishing();
    criterion_5_weight_oracle();
    criterion_6_splitting_invariants();
    criterion_7_lemma25();
    criterion_8_sublemma();
    criterion_9_deck_and_exactness();
    criterion_10_cli();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
