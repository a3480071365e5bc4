#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nilorb/corpus.hpp>
#include <nilorb/mhs.hpp>
#include <nilorb/orbit_io.hpp>

using namespace nilorb;

TEST_CASE("rational and gaussian parsing") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

    CHECK(parse_gaussian("1/2+1/4i") == GScalar(Rational(1, 2), Rational(1, 4)));
    CHECK(parse_gaussian("-i") == GScalar(Rational(0), Rational(-1)));
    CHECK(parse_gaussian("i") == gi());
    CHECK(parse_gaussian("3-2i") == GScalar(Rational(3), Rational(-2)));
    CHECK(parse_gaussian(" 7 ") == GScalar(7));
    CHECK_THROWS_AS(parse_gaussian("1+2+3i"), std::invalid_argument);

    GVector t = parse_tuple("(1, 1/2+1/4i)");
    REQUIRE(t.size() == 2);
    CHECK(t[0] == GScalar(1));
    CHECK(t[1] == GScalar(Rational(1, 2), Rational(1, 4)));
    CHECK_THROWS_AS(parse_tuple("1, 2"), std::invalid_argument);
}

TEST_CASE("gaussian formatting round-trips") {
    for (const char* s : {"0", "1", "-3/2", "1/2+1/4i", "-i", "2-7/3i"}) {
        GScalar g = parse_gaussian(s);
        CHECK(parse_gaussian(format_gaussian(g)) == g);
    }
}

TEST_CASE("orbit serialization round-trips byte-identically") {
    for (const auto& rec : builtin_recipes()) {
        std::string one = orbit_to_json(rec.orbit);
        NilpotentOrbit back = orbit_from_json(one);
        std::string two = orbit_to_json(back);
        CHECK(one == two);
        CHECK(back.rank == rec.orbit.rank);
        CHECK(back.weight == rec.orbit.weight);
        CHECK(back.N == rec.orbit.N);
        // structural equality of the filtrations via their jumps
        for (const auto& [p, s] : rec.orbit.F.levels) CHECK(back.F.at(p) == s);
    }
}

TEST_CASE("parsed orbit behaves identically") {
    NilpotentOrbit back = orbit_from_json(orbit_to_json(example_1_10_i()));
    CHECK(validate_orbit(back).all_passed());
    CHECK(build_limit_mhs(back).ok());
}

TEST_CASE("digest is stable and input-sensitive") {
    std::string d1 = orbit_digest(example_1_10_i());
    std::string d2 = orbit_digest(example_1_10_i());
    CHECK(d1 == d2);
    CHECK(d1.size() == 16);
    CHECK(d1 != orbit_digest(example_1_10_2()));
}

TEST_CASE("malformed orbit files are rejected with diagnostics") {
    CHECK_THROWS(orbit_from_json("{"));
    CHECK_THROWS_AS(orbit_from_json(R"({"rank": 0, "weight": -1, "N": [], "F": {}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        orbit_from_json(R"({"rank": 1, "weight": -1, "N": [[0,0]], "F": {"0": []}})"),
        std::invalid_argument);
    // F vectors of the wrong length
    CHECK_THROWS_AS(
        orbit_from_json(
            R"({"rank": 2, "weight": -1, "N": [[0,0],[1,0]],
                "F": {"0": [[{"re": "1", "im": "0"}]]}})"),
        std::invalid_argument);
}

TEST_CASE("the implicit full bottom level is reconstructed") {
    // store only the top jump; below it the filtration must be full
    std::string text = R"({"rank": 2, "weight": -1, "N": [[0,0],[1,0]],
        "F": {"0": [[{"re": "1", "im": "0"}, {"re": "0", "im": "0"}]]}})";
    NilpotentOrbit o = orbit_from_json(text);
    CHECK(o.F.at(0).dim() == 1);
    CHECK(o.F.at(-1).is_full());
    CHECK(o.F.at(1).is_zero());
    CHECK(validate_orbit(o).all_passed());
}
