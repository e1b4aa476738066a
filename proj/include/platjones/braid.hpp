/**
 * @file braid.hpp
 * @brief Braid words, plat-closure metadata, and oriented link diagrams.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "platjones/qtensor.hpp"

namespace platjones {

/// One elementary crossing sigma_{index}^{sign}.
struct BraidLetter {
    int index = 1;  ///< generator index, 1..strands-1
    int sign = 1;   ///< +1 for sigma, -1 for its inverse

    bool operator==(const BraidLetter&) const = default;
};

/// A word in the braid group on `strands` strands, letters read in word
/// order = bottom to top of the braid.
struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord&) const = default;
};

/// Plat-closure description: N bottom/top cap pairs over 2N strands, one
/// color per pair, an optional per-strand orientation pattern, and the
/// deformation index of the ambient algebra.
struct PlatSpec {
    int strands = 0;                ///< 2N
    std::vector<Spin> colors;       ///< one color per cap pair (size N)
    std::vector<int> orientations;  ///< per-strand +-1; empty selects the default pattern
    int k = 0;                      ///< deformation index (JSON field "level")
    std::string word;               ///< braid word text carried alongside the spec
};

/// Parses the word grammar  word := token*;  token := 's' INT ('^' SIGNEDINT)?
/// (whitespace separated; '^e' expands to |e| copies with the sign of e).
/// Throws ParseError with the offending position, or SemanticError for an
/// invalid strand count.
BraidWord parseWord(const std::string& text, int strands);

/// Renders one token per letter ("s2 s2 s1^-1"); parseWord(printWord(w))
/// reproduces w exactly.
std::string printWord(const BraidWord& w);

/// Repeatedly deletes adjacent inverse pairs until none remain.
BraidWord freeReduce(BraidWord w);

/// Number of elementary crossings, i.e. the letter count |B|.
int crossingCount(const BraidWord& w);

/// Per-strand orientation vector: the spec's pattern when given (validated:
/// the two strands of each cap must carry opposite signs), otherwise the
/// default period-four pattern (+,-,-,+, +,-,-,+, ...).
std::vector<int> platOrientations(const PlatSpec& spec);

/// JSON round trip for PlatSpec:
///   {"strands": 4, "colors": ["1/2","1/2"], "orientations": "+--+",
///    "level": 5, "word": "s2 s2 s2"}
/// Parsing validates the full spec (even strand count, one color per cap in
/// range at k, well-formed orientation pattern).
PlatSpec platSpecFromJson(const std::string& text);
std::string platSpecToJson(const PlatSpec& spec);

/// One crossing of the planar diagram: the four incident strand segments.
/// `sign` is the braid letter's exponent sign; `orientedSign` is the
/// right-handed crossing sign after orientation decoration (letter sign
/// times the product of the two lower strand orientations).
struct DiagramCrossing {
    int belowLeft = 0;
    int belowRight = 0;
    int aboveLeft = 0;
    int aboveRight = 0;
    int slot = 1;          ///< generator index of the letter
    int sign = 1;          ///< letter exponent sign
    int orientedSign = 0;  ///< decorated crossing sign
};

/// Planar encoding of a plat closure: strand segments between crossings,
/// cap pairings, and per-wire decorations.  A "wire" is one monotone strand
/// of the braid, identified by its bottom slot (0-based); the closure links
/// wires into components through the bottom and top caps.
struct LinkDiagram {
    int strands = 0;
    int segments = 0;  ///< segment ids are 0..segments-1
    std::vector<DiagramCrossing> crossings;
    std::vector<std::pair<int, int>> bottomCaps;
    std::vector<std::pair<int, int>> topCaps;
    std::vector<int> segmentWire;      ///< owning wire per segment
    std::vector<Spin> wireColor;       ///< cap color per wire
    std::vector<int> wireOrientation;  ///< +1 upward, -1 downward, coherent per component
    int components = 0;
};

/// Builds the plat-closure diagram of w with closure-coherent orientations:
/// each link component is seeded at its minimal bottom strand with the
/// spec's pattern value there and the orientation is propagated through
/// caps and crossings (every cap reverses the travel direction).
LinkDiagram buildDiagram(const PlatSpec& spec, const BraidWord& w);

/// Sum of decorated crossing signs.
int writhe(const LinkDiagram& d);

}  // namespace platjones
