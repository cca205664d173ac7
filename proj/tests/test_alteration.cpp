#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mclam/alteration.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace mclam;

namespace {

Angle a(long num, long den) { return Angle::make(num, den); }
Chord c(long n1, long d1, long n2, long d2) { return Chord(a(n1, d1), a(n2, d2)); }

bool has_gap_labeled(const Lamination& lam, const char* label_text) {
    GapGraph graph(lam);
    return graph.find_by_label(ComponentLabel::parse(label_text)).has_value();
}

}  // namespace

TEST_CASE("toggle_pairing on the reference identifications") {
    auto m_case = toggle_pairing(c(1, 6, 5, 6), c(1, 3, 2, 3));
    CHECK(m_case == std::pair{c(1, 6, 1, 3), c(2, 3, 5, 6)});

    auto t_case = toggle_pairing(c(5, 48, 7, 48), c(29, 48, 31, 48));
    CHECK(t_case == std::pair{c(5, 48, 31, 48), c(7, 48, 29, 48)});
}

TEST_CASE("toggle_pairing rejects crossing and degenerate input") {
    CHECK_THROWS_AS(toggle_pairing(c(0, 1, 1, 2), c(1, 4, 3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(toggle_pairing(c(1, 6, 1, 3), c(1, 3, 2, 3)), std::invalid_argument);
}

TEST_CASE("toggle_pairing is an involution") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> num(0, 9999);
    std::uniform_int_distribution<long> den(2, 997);
    int done = 0;
    while (done < 2000) {
        std::set<Angle> pts;
        while (pts.size() < 4) pts.insert(Angle::make(num(rng), den(rng)));
        std::vector<Angle> p(pts.begin(), pts.end());
        // both non-crossing pairings of the sorted quadruple
        Chord par1(p[0], p[1]), par2(p[2], p[3]);
        Chord nest1(p[0], p[3]), nest2(p[1], p[2]);
        auto from_parallel = toggle_pairing(par1, par2);
        CHECK(from_parallel == std::pair{nest1, nest2});
        CHECK(toggle_pairing(from_parallel.first, from_parallel.second) ==
              std::pair{par1, par2});
        auto from_nested = toggle_pairing(nest1, nest2);
        CHECK(from_nested == std::pair{par1, par2});
        ++done;
    }
}

TEST_CASE("meeting_chord") {
    GapGraph graph(basilica(6));
    auto gap = [&](const char* name) {
        auto idx = graph.find_by_label(name_to_label(name));
        REQUIRE(idx);
        return graph.gaps()[*idx];
    };
    CHECK(meeting_chord(gap("M"), gap("L")) == c(1, 3, 2, 3));
    CHECK(meeting_chord(gap("M"), gap("T")) == c(5, 24, 7, 24));
    CHECK(meeting_chord(gap("L"), gap("2L")) == c(5, 12, 7, 12));
    CHECK_THROWS_AS(meeting_chord(gap("L"), gap("R")), std::invalid_argument);
}

TEST_CASE("alter with target L changes nothing") {
    Lamination source = basilica(5);
    AlterationResult result = alter(source, AlterTarget::name("L"));
    CHECK(result.steps.empty());
    CHECK(result.final == source);
    CHECK(result.final.generation() == 5);
}

TEST_CASE("alter with target M (type 1-1)") {
    AlterationResult result = alter(basilica(2), AlterTarget::name("M"));
    REQUIRE(result.steps.size() == 1);
    CHECK(result.final.generation() == 5);  // auto-extended to N+4

    const AlterationStep& step = result.steps[0];
    CHECK(step.meeting == c(1, 3, 2, 3));
    CHECK(step.removed == std::pair{c(1, 6, 5, 6), c(1, 3, 2, 3)});
    CHECK(step.added == std::pair{c(1, 6, 1, 3), c(2, 3, 5, 6)});

    CHECK(has_gap_labeled(result.final, "[1/12,5/12;7/12,11/12]"));  // merged L and R
    CHECK(has_gap_labeled(result.final, "[1/6,5/24;7/24,1/3]"));     // split halves of M
    CHECK(has_gap_labeled(result.final, "[2/3,17/24;19/24,5/6]"));

    auto [chords, gaps] = leaf_diff_report(result, result.source);
    CHECK(chords == 2);
    CHECK(gaps == 3);

    auto [only_altered, only_basilica] = chord_diff(result.final, result.source);
    CHECK(only_altered == std::vector<Chord>{c(1, 6, 1, 3), c(2, 3, 5, 6)});
    CHECK(only_basilica == std::vector<Chord>{c(1, 6, 5, 6), c(1, 3, 2, 3)});
}

TEST_CASE("alter with target 2L (type 1-2)") {
    AlterationResult result = alter(basilica(2), AlterTarget::name("2L"));
    REQUIRE(result.steps.size() == 1);
    const AlterationStep& step = result.steps[0];
    CHECK(step.meeting == c(5, 12, 7, 12));
    CHECK(step.removed == std::pair{c(5, 24, 7, 24), c(17, 24, 19, 24)});
    CHECK(step.added == std::pair{c(5, 24, 19, 24), c(7, 24, 17, 24)});

    // T and B merge into the new central gap; M splits around it.
    CHECK(has_gap_labeled(result.final, "[5/24,7/24;17/24,19/24]"));
    CHECK(has_gap_labeled(result.final, "[1/6,5/24;19/24,5/6]"));
    CHECK(has_gap_labeled(result.final, "[7/24,1/3;2/3,17/24]"));

    auto [chords, gaps] = leaf_diff_report(result, result.source);
    CHECK(chords == 2);
    CHECK(gaps == 3);
}

TEST_CASE("alter with target T (type 2)") {
    AlterationResult result = alter(basilica(2), AlterTarget::name("T"));
    REQUIRE(result.steps.size() == 2);
    CHECK(result.final.generation() == 6);

    CHECK(result.steps[0].meeting == c(1, 3, 2, 3));
    CHECK(result.steps[1].meeting == c(5, 24, 7, 24));
    CHECK(result.steps[1].removed == std::pair{c(5, 48, 7, 48), c(29, 48, 31, 48)});
    CHECK(result.steps[1].added == std::pair{c(5, 48, 31, 48), c(7, 48, 29, 48)});

    REQUIRE(result.intermediates.size() == 1);
    // the intermediate stage is exactly the M alteration at this depth
    AlterationResult m = alter(basilica(6), AlterTarget::name("M"));
    CHECK(result.intermediates[0].chords() == m.final.chords());

    CHECK(has_gap_labeled(result.final, "[5/48,7/48;29/48,31/48]"));  // merged central gap
    CHECK(has_gap_labeled(result.final, "[1/12,5/48;31/48,11/12]"));
    CHECK(has_gap_labeled(result.final, "[7/48,5/12;7/12,29/48]"));

    auto [chords, gaps] = leaf_diff_report(result, result.source);
    CHECK(chords == 4);
    CHECK(gaps == 5);
}

TEST_CASE("alter accepts explicit labels and explicit paths") {
    AlterationResult by_label =
        alter(basilica(2), AlterTarget::label(ComponentLabel::parse("[5/24,11/48;13/48,7/24]")));
    AlterationResult by_name = alter(basilica(2), AlterTarget::name("T"));
    CHECK(by_label.final == by_name.final);

    AlterationResult by_path = alter(
        basilica(2), AlterTarget::explicit_path({name_to_label("L"), name_to_label("M"),
                                                 name_to_label("T")}));
    CHECK(by_path.final == by_name.final);
}

TEST_CASE("explicit paths are validated, not re-routed") {
    CHECK_THROWS_AS(alter(basilica(2), AlterTarget::explicit_path({name_to_label("M")})),
                    std::invalid_argument);
    // L and T are not adjacent
    CHECK_THROWS_AS(alter(basilica(2), AlterTarget::explicit_path(
                                           {name_to_label("L"), name_to_label("T")})),
                    std::invalid_argument);
}

TEST_CASE("a backtracking path undoes itself") {
    AlterationResult result = alter(
        basilica(2), AlterTarget::explicit_path({name_to_label("L"), name_to_label("M"),
                                                 name_to_label("L")}));
    CHECK(result.steps.size() == 2);
    CHECK(result.steps[0].added == result.steps[1].removed);
    CHECK(result.final.chords() == basilica(result.final.generation()).chords());
}

TEST_CASE("alteration results stay valid, symmetric, and push forward into the basilica") {
    for (const char* name : {"M", "2L", "T", "RT", "2T"}) {
        AlterationResult result = alter(basilica(2), AlterTarget::name(name));
        std::vector<const Lamination*> stages;
        for (const Lamination& lam : result.intermediates) stages.push_back(&lam);
        stages.push_back(&result.final);

        Lamination parent = basilica(result.final.generation() - 1);
        for (const Lamination* stage : stages) {
            CHECK(validate(*stage).ok());
            CHECK(rotate_half(*stage) == *stage);
            Lamination image = pushforward(*stage);
            for (const Chord& chord : image.chords()) {
                CHECK(parent.contains(chord));
            }
        }
        // every altered chord doubles onto a chord of the source basilica
        for (const Chord& chord : result.final.chords()) {
            Chord doubled(chord.lo.doubled(), chord.hi.doubled());
            CHECK(result.source.contains(doubled));
        }
    }
}

TEST_CASE("leaf counts for a type 5 target") {
    // Walk outward through the top limb: L, M, T, 2T, 3T, 4T.
    Lamination lam = basilica(9);
    GapGraph graph(lam);
    auto idx = graph.find_by_label(name_to_label("L"));
    REQUIRE(idx);
    std::vector<std::size_t> faces{*idx};
    faces.push_back(*graph.find_by_label(name_to_label("M")));
    faces.push_back(*graph.find_by_label(name_to_label("T")));
    for (int hop = 0; hop < 3; ++hop) {
        const Gap& cur = graph.gaps()[faces.back()];
        auto label = label_gap(cur);
        REQUIRE(label);
        auto [f1, f2] = graph.faces_of(label->inner());
        faces.push_back(f1 == faces.back() ? f2 : f1);
    }
    std::vector<Gap> path;
    for (std::size_t f : faces) path.push_back(graph.gaps()[f]);

    AlterationResult result = alter_path(lam, path);
    CHECK(result.steps.size() == 5);
    auto [chords, gaps] = leaf_diff_report(result, lam);
    CHECK(chords == 10);
    CHECK(gaps == 11);
}

TEST_CASE("alter input validation") {
    CHECK_THROWS_AS(alter(basilica(4), AlterTarget::name("XL")), std::invalid_argument);

    Lamination not_basilica({c(1, 4, 3, 4)}, 0, LamKind::basilica);
    CHECK_THROWS_AS(alter(not_basilica, AlterTarget::name("M")), std::invalid_argument);

    // a fixed depth is honored when every step is operable there
    AlterationResult shallow = alter(basilica(3), AlterTarget::name("M"), /*allow_extend=*/false);
    CHECK(shallow.final.generation() == 3);
    CHECK(shallow.steps.size() == 1);

    // but rejected when the target gap is not nameable at that depth
    CHECK_THROWS_AS(alter(basilica(4), AlterTarget::name("RT"), /*allow_extend=*/false),
                    std::invalid_argument);
}
