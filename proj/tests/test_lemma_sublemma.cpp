#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nilorb/lemma25.hpp>
#include <nilorb/sublemma.hpp>

#include <cmath>
#include <random>

using namespace nilorb;

TEST_CASE("binomial constants: C(1) = 3 from (z - z0) with |z0| <= 2 y0") {
    Lemma25Params p;
    p.n = 3;
    p.n1 = 2;
    p.n2 = 2;
    auto rep = lemma25_harness(p);
    REQUIRE(rep.binomial_constants.size() == 4);
    CHECK(rep.binomial_constants[0] == 1);
    CHECK(rep.binomial_constants[1] == 3);
    // direct check of the bound at k = 1: A((z-z0), z0) = |z0| + y0
    double y0 = 5.0, x0 = 0.8;
    double a = std::abs(std::complex<double>(-x0, -y0)) + y0;
    CHECK(a <= 3 * y0);
}

TEST_CASE("constant polynomials satisfy the conditions with A = |a|") {
    // f = a: all derivative gaps vanish, so any sampled constant passes
    Lemma25Params p;
    p.n = 0;
    p.n1 = 1;
    p.n2 = 1;
    p.a = 1.0;
    p.a_prime = 1.0;
    p.eps = 0.0625;
    p.trials = 2000;
    p.seed = 5;
    auto rep = lemma25_harness(p);
    CHECK(rep.satisfying > 0);
    // every satisfier is a near-constant near 1, so A stays near 1
    CHECK(rep.c_empirical >= 0.9);
    CHECK(rep.c_empirical <= 1.2);
}

TEST_CASE("(1,1,1): satisfiers exist and the fitted constant is stable") {
    double cs[3];
    int seeds[3] = {1, 2, 3};
    for (int i = 0; i < 3; ++i) {
        Lemma25Params p;
        p.n = 1;
        p.n1 = 1;
        p.n2 = 1;
        p.eps = 0.0625;
        p.r = 2.0;
        p.trials = 10000;
        p.seed = seeds[i];
        auto rep = lemma25_harness(p);
        CHECK(rep.satisfying > 100);
        cs[i] = rep.c_empirical;
        CHECK(rep.c_empirical > 0);
        CHECK(rep.c_empirical < 4.0);  // well under C9 (|a| + |a'|) scale
    }
    double lo = std::min({cs[0], cs[1], cs[2]});
    double hi = std::max({cs[0], cs[1], cs[2]});
    CHECK((hi - lo) / hi < 0.10);
}

TEST_CASE("a = a' = 0 admits no nonzero satisfying samples at small eps") {
    // conditions are scale-invariant in f when the targets vanish, so
    // for eps < 1/4 they force A = 0 and random nonzero samples all fail
    Lemma25Params p;
    p.n = 1;
    p.n1 = 1;
    p.n2 = 1;
    p.a = 0.0;
    p.a_prime = 0.0;
    p.eps = 0.0625;
    p.trials = 5000;
    p.seed = 3;
    auto rep = lemma25_harness(p);
    CHECK(rep.satisfying == 0);
    CHECK(rep.c_empirical == 0.0);
}

TEST_CASE("degenerate parameters are rejected") {
    Lemma25Params p;
    p.n = 3;
    p.n1 = 1;
    p.n2 = 2;  // n1 + n2 = n
    CHECK_THROWS_AS(lemma25_harness(p), std::invalid_argument);
    Lemma25Params q;
    q.r = 1.0;
    CHECK_THROWS_AS(lemma25_harness(q), std::invalid_argument);
}

TEST_CASE("sublemma: m = 0 forces zero for any eps2 < 1") {
    std::vector<std::vector<double>> cmat{{}};
    CHECK(sublemma_check(cmat, 0.9).forces_zero);
    CHECK(sublemma_check(cmat, 0.0).forces_zero);
    CHECK(!sublemma_check(cmat, 1.0).forces_zero);
}

TEST_CASE("sublemma: the two hand-derived cases") {
    std::vector<std::vector<double>> cmat{{}, {1.0}};
    auto low = sublemma_check(cmat, 0.1);
    CHECK(low.forces_zero);
    CHECK(low.routes_agree);
    // rho = 0.1 + sqrt(0.1 * 1.1)
    CHECK(low.rho == doctest::Approx(0.1 + std::sqrt(0.11)).epsilon(1e-9));
    auto high = sublemma_check(cmat, 0.45);
    CHECK(!high.forces_zero);
    CHECK(high.routes_agree);
    CHECK(high.rho == doctest::Approx(0.45 + std::sqrt(0.45 * 1.45)).epsilon(1e-9));
    // threshold: eps2 (1 + eps2) = (1 - eps2)^2 at eps2 = 1/3
    CHECK(find_eps2(cmat) == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
}

TEST_CASE("eigenvalue and simplex routes agree on random systems") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> cdist(0.1, 2.0);
    std::uniform_real_distribution<double> edist(0.02, 0.45);
    int checked = 0;
    while (checked < 40) {
        int msize = 1 + static_cast<int>(rng() % 5);
        std::vector<std::vector<double>> cmat;
        for (int i = 0; i <= msize; ++i) {
            std::vector<double> row;
            for (int j = 0; j < i; ++j) row.push_back(cdist(rng));
            cmat.push_back(std::move(row));
        }
        double eps2 = edist(rng);
        auto res = sublemma_check(cmat, eps2);
        if (std::abs(res.rho - 1.0) < 1e-3) continue;  // numerical razor edge
        CHECK(res.routes_agree);
        ++checked;
    }
}

TEST_CASE("malformed systems are rejected") {
    CHECK_THROWS_AS(sublemma_check({}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(sublemma_check({{}, {0.0}}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(sublemma_check({{}, {1.0, 2.0}}, 0.1), std::invalid_argument);
}
