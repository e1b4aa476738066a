/**
 * @file braid.cpp
 * @brief Braid-word grammar, free reduction, plat metadata, and diagram
 *        construction with closure-coherent orientations.
 */
#include "platjones/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "platjones/errors.hpp"

#include "json.hpp"

namespace platjones {

namespace {

bool isDigitAt(const std::string& text, std::size_t i) {
    return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0;
}

void requireEvenStrands(int strands) {
    if (strands < 2 || strands % 2 != 0) {
        throw SemanticError("strand count must be a positive even number, got " +
                            std::to_string(strands));
    }
}

}  // namespace

BraidWord parseWord(const std::string& text, int strands) {
    requireEvenStrands(strands);
    BraidWord w;
    w.strands = strands;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) != 0) {
            ++i;
            continue;
        }
        if (text[i] != 's') {
            throw ParseError("expected generator token starting with 's'", i);
        }
        const std::size_t indexPos = ++i;
        if (!isDigitAt(text, i)) {
            throw ParseError("expected generator index after 's'", i);
        }
        long index = 0;
        while (isDigitAt(text, i)) {
            index = index * 10 + (text[i] - '0');
            if (index > strands) {
                break;  // already out of range; avoid overflow on absurd input
            }
            ++i;
        }
        if (index < 1 || index >= strands) {
            throw ParseError("generator index out of range 1.." +
                                 std::to_string(strands - 1),
                             indexPos);
        }
        long exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool negative = false;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                negative = text[i] == '-';
                ++i;
            }
            const std::size_t expPos = i;
            if (!isDigitAt(text, i)) {
                throw ParseError("expected integer exponent after '^'", i);
            }
            long magnitude = 0;
            while (isDigitAt(text, i)) {
                magnitude = magnitude * 10 + (text[i] - '0');
                if (magnitude > 100000) {
                    throw ParseError("exponent too large", expPos);
                }
                ++i;
            }
            exponent = negative ? -magnitude : magnitude;
        }
        if (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0) {
            throw ParseError("unexpected character inside token", i);
        }
        const int sign = exponent >= 0 ? 1 : -1;
        for (long r = 0; r < std::labs(exponent); ++r) {
            w.letters.push_back({static_cast<int>(index), sign});
        }
    }
    return w;
}

std::string printWord(const BraidWord& w) {
    std::ostringstream out;
    bool first = true;
    for (const BraidLetter& letter : w.letters) {
        if (!first) {
            out << ' ';
        }
        first = false;
        out << 's' << letter.index;
        if (letter.sign < 0) {
            out << "^-1";
        }
    }
    return out.str();
}

BraidWord freeReduce(BraidWord w) {
    std::vector<BraidLetter> stack;
    stack.reserve(w.letters.size());
    for (const BraidLetter& letter : w.letters) {
        if (!stack.empty() && stack.back().index == letter.index &&
            stack.back().sign == -letter.sign) {
            stack.pop_back();
        } else {
            stack.push_back(letter);
        }
    }
    w.letters = std::move(stack);
    return w;
}

int crossingCount(const BraidWord& w) {
    return static_cast<int>(w.letters.size());
}

std::vector<int> platOrientations(const PlatSpec& spec) {
    requireEvenStrands(spec.strands);
    if (spec.orientations.empty()) {
        // Default period-four pattern +,-,-,+ so adjacent caps alternate.
        std::vector<int> pattern(spec.strands);
        for (int s = 0; s < spec.strands; ++s) {
            const int phase = s % 4;
            pattern[s] = (phase == 0 || phase == 3) ? 1 : -1;
        }
        return pattern;
    }
    if (static_cast<int>(spec.orientations.size()) != spec.strands) {
        throw SemanticError("orientation pattern length " +
                            std::to_string(spec.orientations.size()) +
                            " does not match strand count " +
                            std::to_string(spec.strands));
    }
    for (int s = 0; s < spec.strands; ++s) {
        if (spec.orientations[s] != 1 && spec.orientations[s] != -1) {
            throw SemanticError("orientation entries must be +1 or -1");
        }
    }
    for (int cap = 0; cap < spec.strands / 2; ++cap) {
        if (spec.orientations[2 * cap] == spec.orientations[2 * cap + 1]) {
            throw SemanticError("cap " + std::to_string(cap + 1) +
                                " joins two strands of equal orientation");
        }
    }
    return spec.orientations;
}

namespace {

/// Full structural validation, shared by the JSON reader and buildDiagram.
void validateSpec(const PlatSpec& spec) {
    requireEvenStrands(spec.strands);
    if (static_cast<int>(spec.colors.size()) != spec.strands / 2) {
        throw SemanticError("expected one color per cap pair: " +
                            std::to_string(spec.strands / 2) + " colors, got " +
                            std::to_string(spec.colors.size()));
    }
    const QContext ctx(spec.k);
    for (const Spin& color : spec.colors) {
        if (!ctx.inRange(color)) {
            throw SemanticError("cap color " + spinToString(color) +
                                " is outside the admissible range at k=" +
                                std::to_string(spec.k));
        }
    }
    platOrientations(spec);  // validates the pattern when one is given
}

}  // namespace

PlatSpec platSpecFromJson(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    PlatSpec spec;
    try {
        spec.strands = doc.at("strands").get<int>();
        for (const auto& entry : doc.at("colors")) {
            spec.colors.push_back(spinFromString(entry.get<std::string>()));
        }
        if (doc.contains("orientations") && !doc.at("orientations").is_null()) {
            const auto pattern = doc.at("orientations").get<std::string>();
            for (std::size_t s = 0; s < pattern.size(); ++s) {
                if (pattern[s] == '+') {
                    spec.orientations.push_back(1);
                } else if (pattern[s] == '-') {
                    spec.orientations.push_back(-1);
                } else {
                    throw ParseError("orientation pattern must use only '+' and '-'", s);
                }
            }
        }
        spec.k = doc.at("level").get<int>();
        if (doc.contains("word") && !doc.at("word").is_null()) {
            spec.word = doc.at("word").get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed plat description: ") + e.what(), 0);
    }
    validateSpec(spec);
    return spec;
}

std::string platSpecToJson(const PlatSpec& spec) {
    nlohmann::json doc;
    doc["strands"] = spec.strands;
    auto colors = nlohmann::json::array();
    for (const Spin& color : spec.colors) {
        colors.push_back(spinToString(color));
    }
    doc["colors"] = std::move(colors);
    if (!spec.orientations.empty()) {
        std::string pattern;
        for (int e : spec.orientations) {
            pattern.push_back(e > 0 ? '+' : '-');
        }
        doc["orientations"] = pattern;
    }
    doc["level"] = spec.k;
    if (!spec.word.empty()) {
        doc["word"] = spec.word;
    }
    return doc.dump();
}

LinkDiagram buildDiagram(const PlatSpec& spec, const BraidWord& w) {
    validateSpec(spec);
    if (w.strands != spec.strands) {
        throw SemanticError("braid word is on " + std::to_string(w.strands) +
                            " strands but the plat closure expects " +
                            std::to_string(spec.strands));
    }
    const int n = spec.strands;

    LinkDiagram d;
    d.strands = n;
    d.segments = n;

    // Sweep bottom to top.  slotSeg / slotWire track, per strand slot, the
    // open segment id and the wire (bottom slot) currently occupying it.
    std::vector<int> slotSeg(n);
    std::vector<int> slotWire(n);
    d.segmentWire.assign(n, 0);
    for (int s = 0; s < n; ++s) {
        slotSeg[s] = s;
        slotWire[s] = s;
        d.segmentWire[s] = s;
    }
    for (const BraidLetter& letter : w.letters) {
        const int left = letter.index - 1;
        DiagramCrossing c;
        c.belowLeft = slotSeg[left];
        c.belowRight = slotSeg[left + 1];
        c.aboveLeft = d.segments;
        c.aboveRight = d.segments + 1;
        c.slot = letter.index;
        c.sign = letter.sign;
        std::swap(slotWire[left], slotWire[left + 1]);
        d.segmentWire.push_back(slotWire[left]);
        d.segmentWire.push_back(slotWire[left + 1]);
        slotSeg[left] = c.aboveLeft;
        slotSeg[left + 1] = c.aboveRight;
        d.segments += 2;
        d.crossings.push_back(c);
    }
    for (int cap = 0; cap < n / 2; ++cap) {
        d.bottomCaps.emplace_back(2 * cap, 2 * cap + 1);
        d.topCaps.emplace_back(slotSeg[2 * cap], slotSeg[2 * cap + 1]);
    }

    d.wireColor.assign(n, Spin{0});
    for (int s = 0; s < n; ++s) {
        d.wireColor[s] = spec.colors[s / 2];
    }

    // Closure graph on wires: every bottom or top cap joins two wire ends,
    // and crossing a cap reverses the travel direction.  Each component is
    // seeded at its minimal bottom strand with the requested pattern value.
    std::vector<std::vector<int>> adjacent(n);
    for (int cap = 0; cap < n / 2; ++cap) {
        adjacent[2 * cap].push_back(2 * cap + 1);
        adjacent[2 * cap + 1].push_back(2 * cap);
        const int u = slotWire[2 * cap];
        const int v = slotWire[2 * cap + 1];
        adjacent[u].push_back(v);
        adjacent[v].push_back(u);
    }
    const std::vector<int> pattern = platOrientations(spec);
    d.wireOrientation.assign(n, 0);
    d.components = 0;
    for (int seed = 0; seed < n; ++seed) {
        if (d.wireOrientation[seed] != 0) {
            continue;
        }
        ++d.components;
        d.wireOrientation[seed] = pattern[seed];
        std::vector<int> frontier{seed};
        while (!frontier.empty()) {
            const int u = frontier.back();
            frontier.pop_back();
            for (int v : adjacent[u]) {
                if (d.wireOrientation[v] == 0) {
                    d.wireOrientation[v] = -d.wireOrientation[u];
                    frontier.push_back(v);
                }
            }
        }
    }

    // Right-handed crossing sign: the letter's exponent sign when both
    // strands run upward, flipped once per downward strand.
    for (DiagramCrossing& c : d.crossings) {
        const int eu = d.wireOrientation[d.segmentWire[c.belowLeft]];
        const int ev = d.wireOrientation[d.segmentWire[c.belowRight]];
        c.orientedSign = c.sign * eu * ev;
    }
    return d;
}

int writhe(const LinkDiagram& d) {
    int total = 0;
    for (const DiagramCrossing& c : d.crossings) {
        total += c.orientedSign;
    }
    return total;
}

}  // namespace platjones
