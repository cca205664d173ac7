#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mclam/lamination.hpp"

#include <set>

using namespace mclam;

namespace {

Angle a(long num, long den) { return Angle::make(num, den); }
Chord c(long n1, long d1, long n2, long d2) { return Chord(a(n1, d1), a(n2, d2)); }

}  // namespace

TEST_CASE("chord canonical form") {
    Chord x(a(2, 3), a(1, 3));
    CHECK(x.lo == a(1, 3));
    CHECK(x.hi == a(2, 3));
    CHECK(x.str() == "1/3-2/3");
    CHECK(Chord::parse("1/3-2/3") == x);
    CHECK_THROWS_AS(Chord(a(1, 3), a(2, 6)), std::invalid_argument);
}

TEST_CASE("chords_cross") {
    CHECK(chords_cross(c(0, 1, 1, 2), c(1, 4, 3, 4)));  // interleaved diameters
    CHECK_FALSE(chords_cross(c(1, 3, 2, 3), c(1, 6, 5, 6)));  // nested basilica leaves
    CHECK_FALSE(chords_cross(c(1, 6, 1, 3), c(1, 6, 5, 6)));  // shared endpoint
    CHECK(chords_cross(c(1, 6, 1, 3), c(1, 4, 1, 2)));
    CHECK_FALSE(chords_cross(c(1, 6, 1, 4), c(1, 3, 1, 2)));  // disjoint side by side
}

TEST_CASE("validate") {
    CHECK(validate(basilica(3)).ok());
    CHECK(validate(Lamination({}, 0, LamKind::basilica)).ok());

    Lamination crossing({c(0, 1, 1, 2), c(1, 4, 3, 4)}, 0, LamKind::intermediate);
    auto report = validate(crossing);
    REQUIRE(report.crossings.size() == 1);
    CHECK(report.crossings[0].first == c(0, 1, 1, 2));
    CHECK(report.crossings[0].second == c(1, 4, 3, 4));
}

TEST_CASE("basilica generations 0..2 exactly") {
    CHECK(basilica(0).chords() == std::vector<Chord>{c(1, 3, 2, 3)});

    Lamination lam2 = basilica(2);
    std::set<Chord> g2(lam2.chords().begin(), lam2.chords().end());
    std::set<Chord> expect = {c(1, 3, 2, 3), c(1, 6, 5, 6), c(1, 12, 11, 12), c(5, 12, 7, 12)};
    CHECK(g2 == expect);
}

TEST_CASE("basilica contains the named pinch chords") {
    Lamination g3 = basilica(3);
    CHECK(g3.contains(c(5, 24, 7, 24)));
    CHECK(g3.contains(c(17, 24, 19, 24)));

    Lamination g4 = basilica(4);
    CHECK(g4.contains(c(5, 48, 7, 48)));
    CHECK(g4.contains(c(29, 48, 31, 48)));
    CHECK(g4.contains(c(11, 48, 13, 48)));
    CHECK(g4.contains(c(35, 48, 37, 48)));
}

TEST_CASE("basilica layer sizes") {
    // new chords per generation: 1, 1, then 2^(g-1)
    CHECK(basilica(0).size() == 1);
    CHECK(basilica(1).size() == 2);
    std::size_t expected_layer = 2;
    for (int g = 2; g <= 12; ++g) {
        CHECK(basilica(g).size() - basilica(g - 1).size() == expected_layer);
        expected_layer *= 2;
    }
}

TEST_CASE("basilica is valid and 180-degree symmetric up to generation 12") {
    for (int g = 0; g <= 12; ++g) {
        CHECK(validate(basilica(g)).ok());
    }
    // Generation 0 is just the minor leaf; its antipodal partner only
    // arrives with generation 1, and from there symmetry is exact.
    CHECK(rotate_half(basilica(0)).chords() == std::vector<Chord>{c(1, 6, 5, 6)});
    for (int g = 1; g <= 12; ++g) {
        Lamination lam = basilica(g);
        CHECK(rotate_half(lam) == lam);
    }
}

TEST_CASE("basilica endpoint denominators divide 3*2^g") {
    for (int g = 0; g <= 10; ++g) {
        BigInt bound = BigInt(3) << g;
        Lamination lam = basilica(g);
        for (const Chord& chord : lam.chords()) {
            CHECK(bound % chord.lo.den() == 0);
            CHECK(bound % chord.hi.den() == 0);
        }
    }
}

TEST_CASE("pushforward") {
    Lamination single({c(1, 6, 1, 3)}, 1, LamKind::intermediate);
    CHECK(pushforward(single).chords() == std::vector<Chord>{c(1, 3, 2, 3)});

    Lamination diameter({c(0, 1, 1, 2)}, 0, LamKind::intermediate);
    CHECK(pushforward(diameter).chords().empty());

    for (int g = 1; g <= 9; ++g) {
        CHECK(pushforward(basilica(g)).chords() == basilica(g - 1).chords());
    }
}

TEST_CASE("rotate_half examples") {
    Lamination single({c(1, 6, 1, 3)}, 0, LamKind::intermediate);
    CHECK(rotate_half(single).chords() == std::vector<Chord>{c(2, 3, 5, 6)});
    CHECK(rotate_half(Lamination({}, 0, LamKind::intermediate)).chords().empty());
}

TEST_CASE("chord_diff") {
    auto [only_a, only_b] = chord_diff(basilica(4), basilica(4));
    CHECK(only_a.empty());
    CHECK(only_b.empty());

    auto [in5, in4] = chord_diff(basilica(5), basilica(4));
    CHECK(in5.size() == 16);
    CHECK(in4.empty());
}

TEST_CASE("text format is frozen and bit-exact") {
    Lamination g2 = basilica(2);
    std::string expected =
        "lamination v1 generation=2 kind=basilica\n"
        "1/12 11/12\n"
        "1/6 5/6\n"
        "1/3 2/3\n"
        "5/12 7/12\n";
    CHECK(to_text(g2) == expected);

    Lamination parsed = lamination_from_text(expected);
    CHECK(parsed == g2);
    CHECK(parsed.generation() == 2);
    CHECK(parsed.kind() == LamKind::basilica);
    CHECK(to_text(parsed) == expected);

    CHECK_THROWS_AS(lamination_from_text("garbage\n"), std::invalid_argument);
    CHECK_THROWS_AS(lamination_from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(lamination_from_text("lamination v1 generation=1 kind=nope\n"),
                    std::invalid_argument);
}

TEST_CASE("round trip through text for deeper generations") {
    for (int g : {5, 8}) {
        Lamination lam = basilica(g);
        CHECK(lamination_from_text(to_text(lam)) == lam);
    }
}

TEST_CASE("validation handles denominators beyond 64 bits") {
    // Pull two basilica chords down 80 generations by repeated halving;
    // the sweep has to leave its fixed-width fast path for these.
    Angle lo = a(1, 3), hi = a(2, 3);
    Angle lo2 = a(1, 6), hi2 = a(5, 6);
    for (int i = 0; i < 80; ++i) {
        lo = lo.halved().first;
        hi = hi.halved().first;
        lo2 = lo2.halved().first;
        hi2 = hi2.halved().first;
    }
    Lamination deep({Chord(lo, hi), Chord(lo2, hi2)}, 0, LamKind::intermediate);
    CHECK(deep.chords()[0].lo.den() > BigInt(UINT64_MAX));
    CHECK(validate(deep).ok());

    // lo2 < lo < hi < hi2, so re-pairing the ends makes them interleave
    CHECK(chords_cross(Chord(lo, hi2), Chord(hi, lo2)));
    Lamination crossing({Chord(lo, hi2), Chord(hi, lo2)}, 0, LamKind::intermediate);
    CHECK(validate(crossing).crossings.size() == 1);
}
