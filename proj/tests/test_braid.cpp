/**
 * @file test_braid.cpp
 * @brief Braid grammar, free reduction, plat orientations, and diagram
 *        construction, including the writhe/crossing-count invariants.
 */
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/errors.hpp"
#include "platjones/qtensor.hpp"

using namespace platjones;

namespace {

Spin half() { return Spin{1}; }

PlatSpec makeSpec(int strands, int k = 5) {
    PlatSpec spec;
    spec.strands = strands;
    spec.colors.assign(strands / 2, half());
    spec.k = k;
    return spec;
}

BraidWord randomWord(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> pickIndex(1, strands - 1);
    std::uniform_int_distribution<int> pickSign(0, 1);
    BraidWord w;
    w.strands = strands;
    for (int i = 0; i < length; ++i) {
        w.letters.push_back({pickIndex(rng), pickSign(rng) == 0 ? 1 : -1});
    }
    return w;
}

}  // namespace

TEST_CASE("word grammar parses tokens and exponents") {
    const BraidWord trefoil = parseWord("s2 s2 s2", 4);
    REQUIRE(trefoil.letters.size() == 3);
    for (const BraidLetter& letter : trefoil.letters) {
        CHECK(letter.index == 2);
        CHECK(letter.sign == 1);
    }

    const BraidWord expanded = parseWord("s1^-2 s3", 4);
    REQUIRE(expanded.letters.size() == 3);
    CHECK(expanded.letters[0] == BraidLetter{1, -1});
    CHECK(expanded.letters[1] == BraidLetter{1, -1});
    CHECK(expanded.letters[2] == BraidLetter{3, 1});

    CHECK(parseWord("", 4).letters.empty());
    CHECK(parseWord("  \t\n ", 4).letters.empty());
    CHECK(parseWord("s2^0", 4).letters.empty());
    CHECK(parseWord("s2^+3", 4).letters.size() == 3);
    CHECK(parseWord("s11", 12).letters.front().index == 11);
}

TEST_CASE("word grammar rejects malformed input with positions") {
    CHECK_THROWS_AS(parseWord("s0", 4), ParseError);
    CHECK_THROWS_AS(parseWord("s4", 4), ParseError);

    try {
        parseWord("s2 x1", 4);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 3);
    }
    try {
        parseWord("s2 s0 s1", 4);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);  // points at the offending index digits
    }
    CHECK_THROWS_AS(parseWord("s", 4), ParseError);
    CHECK_THROWS_AS(parseWord("s2^", 4), ParseError);
    CHECK_THROWS_AS(parseWord("s2^x", 4), ParseError);
    CHECK_THROWS_AS(parseWord("s2,s3", 4), ParseError);
    CHECK_THROWS_AS(parseWord("s 2", 4), ParseError);

    // Plat closures need an even number of strands.
    CHECK_THROWS_AS(parseWord("s1 s2", 3), SemanticError);
    CHECK_THROWS_AS(parseWord("", 0), SemanticError);
}

TEST_CASE("printing a word and re-parsing round-trips") {
    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 50; ++trial) {
        const int strands = 2 * (1 + trial % 4);
        if (strands < 4) {
            continue;  // no generators on a lone cap
        }
        const BraidWord w = randomWord(rng, strands, trial % 17);
        CHECK(parseWord(printWord(w), strands) == w);
    }
    CHECK(printWord(parseWord("s1^-2 s3", 4)) == "s1^-1 s1^-1 s3");
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
    const BraidWord nested = parseWord("s1 s2 s2^-1 s1^-1", 4);
    CHECK(freeReduce(nested).letters.empty());

    const BraidWord partial = parseWord("s1 s2 s2 s2^-1", 4);
    const BraidWord reduced = freeReduce(partial);
    CHECK(reduced == parseWord("s1 s2", 4));

    // Same-sign repetitions are not touched.
    const BraidWord trefoil = parseWord("s2 s2 s2", 4);
    CHECK(freeReduce(trefoil) == trefoil);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const BraidWord w = randomWord(rng, 6, trial % 25);
        const BraidWord once = freeReduce(w);
        CHECK(once.letters.size() <= w.letters.size());
        CHECK(freeReduce(once) == once);  // idempotent
        for (std::size_t i = 1; i < once.letters.size(); ++i) {
            const bool cancels = once.letters[i - 1].index == once.letters[i].index &&
                                 once.letters[i - 1].sign == -once.letters[i].sign;
            CHECK_FALSE(cancels);
        }
    }
}

TEST_CASE("crossing count is the letter count") {
    CHECK(crossingCount(parseWord("s1^4", 4)) == 4);
    CHECK(crossingCount(parseWord("", 2)) == 0);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const BraidWord w = randomWord(rng, 4, trial % 20);
        CHECK(crossingCount(freeReduce(w)) <= crossingCount(w));
    }
}

TEST_CASE("plat orientations default to the alternating cap pattern") {
    CHECK(platOrientations(makeSpec(2)) == std::vector<int>{1, -1});
    CHECK(platOrientations(makeSpec(4)) == std::vector<int>{1, -1, -1, 1});
    CHECK(platOrientations(makeSpec(6)) == std::vector<int>{1, -1, -1, 1, 1, -1});
    CHECK(platOrientations(makeSpec(8)) ==
          std::vector<int>{1, -1, -1, 1, 1, -1, -1, 1});

    PlatSpec custom = makeSpec(4);
    custom.orientations = {-1, 1, 1, -1};
    CHECK(platOrientations(custom) == custom.orientations);

    PlatSpec equalCap = makeSpec(4);
    equalCap.orientations = {1, 1, -1, -1};
    CHECK_THROWS_AS(platOrientations(equalCap), SemanticError);

    PlatSpec shortPattern = makeSpec(4);
    shortPattern.orientations = {1, -1};
    CHECK_THROWS_AS(platOrientations(shortPattern), SemanticError);
}

TEST_CASE("plat description JSON round-trips and validates") {
    const std::string text =
        R"({"strands": 4, "colors": ["1/2","1/2"], "orientations": "+--+",)"
        R"( "level": 5, "word": "s2 s2 s2"})";
    const PlatSpec spec = platSpecFromJson(text);
    CHECK(spec.strands == 4);
    REQUIRE(spec.colors.size() == 2);
    CHECK(spec.colors[0] == half());
    CHECK(spec.colors[1] == half());
    CHECK(spec.orientations == std::vector<int>{1, -1, -1, 1});
    CHECK(spec.k == 5);
    CHECK(spec.word == "s2 s2 s2");

    const PlatSpec again = platSpecFromJson(platSpecToJson(spec));
    CHECK(again.strands == spec.strands);
    CHECK(again.colors == spec.colors);
    CHECK(again.orientations == spec.orientations);
    CHECK(again.k == spec.k);
    CHECK(again.word == spec.word);

    // Orientation pattern is optional; the default applies downstream.
    const PlatSpec bare =
        platSpecFromJson(R"({"strands": 2, "colors": ["1"], "level": 6})");
    CHECK(bare.orientations.empty());
    CHECK(platOrientations(bare) == std::vector<int>{1, -1});

    CHECK_THROWS_AS(platSpecFromJson("{"), ParseError);
    CHECK_THROWS_AS(platSpecFromJson(R"({"strands": 4, "level": 5})"), ParseError);
    // One color per cap pair.
    CHECK_THROWS_AS(
        platSpecFromJson(R"({"strands": 4, "colors": ["1/2"], "level": 5})"),
        SemanticError);
    // Color outside the range at this k (max spin 3/2 at k=5).
    CHECK_THROWS_AS(
        platSpecFromJson(R"({"strands": 2, "colors": ["2"], "level": 5})"),
        SemanticError);
    // Deformation index must be at least 3.
    CHECK_THROWS_AS(
        platSpecFromJson(R"({"strands": 2, "colors": ["1/2"], "level": 2})"),
        SemanticError);
    CHECK_THROWS_AS(
        platSpecFromJson(R"({"strands": 3, "colors": ["1/2"], "level": 5})"),
        SemanticError);
}

TEST_CASE("diagrams of the standard small closures") {
    SUBCASE("empty word on one cap is the unknot") {
        const LinkDiagram d = buildDiagram(makeSpec(2), parseWord("", 2));
        CHECK(d.crossings.empty());
        CHECK(d.components == 1);
        CHECK(writhe(d) == 0);
        CHECK(d.segments == 2);
        CHECK(d.wireOrientation == std::vector<int>{1, -1});
    }
    SUBCASE("s2 s2 s2 on four strands closes to a trefoil") {
        const LinkDiagram d = buildDiagram(makeSpec(4), parseWord("s2 s2 s2", 4));
        CHECK(d.crossings.size() == 3);
        CHECK(d.components == 1);
        CHECK(writhe(d) == 3);
        const LinkDiagram mirror =
            buildDiagram(makeSpec(4), parseWord("s2^-3", 4));
        CHECK(mirror.components == 1);
        CHECK(writhe(mirror) == -3);
    }
    SUBCASE("s2 s2 on four strands closes to a Hopf link") {
        const LinkDiagram d = buildDiagram(makeSpec(4), parseWord("s2 s2", 4));
        CHECK(d.crossings.size() == 2);
        CHECK(d.components == 2);
        CHECK(writhe(d) == 2);
    }
    SUBCASE("alternating six-strand word closes to a single component") {
        const LinkDiagram d = buildDiagram(
            makeSpec(6), parseWord("s2 s4^-1 s2 s4^-1 s2 s4^-1", 6));
        CHECK(d.crossings.size() == 6);
        CHECK(d.components == 1);
        CHECK(writhe(d) == 0);
    }
    SUBCASE("figure-eight word on four strands") {
        // The knot is amphichiral but this particular diagram is not
        // balanced: two negative-sign letters pair with like-oriented
        // strands.  Writhe is a diagram quantity, so -2 is the pinned value.
        const LinkDiagram d =
            buildDiagram(makeSpec(4), parseWord("s2 s1^-1 s2 s1^-1", 4));
        CHECK(d.crossings.size() == 4);
        CHECK(d.components == 1);
        CHECK(writhe(d) == -2);
    }
    SUBCASE("two-component unlink from the identity word on four strands") {
        const LinkDiagram d = buildDiagram(makeSpec(4), parseWord("", 4));
        CHECK(d.components == 2);
        CHECK(writhe(d) == 0);
    }
}

TEST_CASE("diagram bookkeeping stays consistent") {
    const PlatSpec spec = makeSpec(4);
    const BraidWord w = parseWord("s1 s2 s3^-1 s2", 4);
    const LinkDiagram d = buildDiagram(spec, w);

    CHECK(d.segments == 4 + 2 * static_cast<int>(w.letters.size()));
    CHECK(static_cast<int>(d.segmentWire.size()) == d.segments);
    CHECK(d.bottomCaps.size() == 2);
    CHECK(d.topCaps.size() == 2);
    for (const DiagramCrossing& c : d.crossings) {
        CHECK(c.orientedSign * c.orientedSign == 1);
        // The two strands swap across the crossing.
        CHECK(d.segmentWire[c.aboveLeft] == d.segmentWire[c.belowRight]);
        CHECK(d.segmentWire[c.aboveRight] == d.segmentWire[c.belowLeft]);
    }
    for (int s = 0; s < d.strands; ++s) {
        CHECK(d.wireColor[s] == spec.colors[s / 2]);
    }
    // Every wire orientation is assigned, and caps flip the travel direction.
    for (const auto& cap : d.bottomCaps) {
        CHECK(d.wireOrientation[d.segmentWire[cap.first]] ==
              -d.wireOrientation[d.segmentWire[cap.second]]);
    }
    for (const auto& cap : d.topCaps) {
        CHECK(d.wireOrientation[d.segmentWire[cap.first]] ==
              -d.wireOrientation[d.segmentWire[cap.second]]);
    }

    BraidWord mismatched = w;
    mismatched.strands = 6;
    CHECK_THROWS_AS(buildDiagram(spec, mismatched), SemanticError);
}

TEST_CASE("writhe is stable under inverse-pair insertion and mirrors") {
    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 120; ++trial) {
        const int strands = trial % 2 == 0 ? 4 : 6;
        const PlatSpec spec = makeSpec(strands);
        const BraidWord w = randomWord(rng, strands, 1 + trial % 12);
        const int base = writhe(buildDiagram(spec, w));

        BraidWord padded = w;
        std::uniform_int_distribution<std::size_t> pickPos(0, w.letters.size());
        std::uniform_int_distribution<int> pickIndex(1, strands - 1);
        const std::size_t at = pickPos(rng);
        const int index = pickIndex(rng);
        padded.letters.insert(padded.letters.begin() + at, {index, 1});
        padded.letters.insert(padded.letters.begin() + at + 1, {index, -1});
        CHECK(writhe(buildDiagram(spec, padded)) == base);

        // The word followed by its reversed inverse closes to writhe zero.
        BraidWord cancelling = w;
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            cancelling.letters.push_back({it->index, -it->sign});
        }
        CHECK(writhe(buildDiagram(spec, cancelling)) == 0);
    }
}
