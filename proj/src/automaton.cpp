/**
 * @file automaton.cpp
 * @brief Automaton construction, word runs, invariants, and the move ledger.
 */
#include "platjones/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "json.hpp"
#include "platjones/errors.hpp"

namespace platjones {

namespace {

/// Per-crossing move budget c(N) = (2N-1)*ln(2N-1) + 1.
double moveBudget(int capCount) {
    const double m = 2.0 * capCount - 1.0;
    return m * std::log(m) + 1.0;
}

/// The pair-coupled tree over the caps of `spec`, decorated with the given
/// per-strand orientations.  Each cap contributes its color twice.
FusionTree capTree(const PlatSpec& spec, const std::vector<int>& orientations) {
    FusionTree tree;
    tree.shape = oddShape(spec.strands / 2);
    for (const Spin j : spec.colors) {
        tree.leafColors.push_back(j);
        tree.leafColors.push_back(j);
    }
    tree.leafOrientations = orientations;
    return tree;
}

/// Index of the all-zero labeling in the sorted singlet basis of `tree`,
/// or -1 when no such state exists.  Labels are non-negative, so the
/// all-zero state is the lexicographic minimum whenever it is admissible.
int allZeroIndex(const FusionTree& tree, const QContext& ctx) {
    const auto states = enumerateStates(tree, ctx);
    if (states.empty()) {
        return -1;
    }
    const auto& first = states.front().labels;
    const bool zero = std::all_of(first.begin(), first.end(),
                                  [](Spin j) { return j.twice == 0; });
    return zero ? 0 : -1;
}

}  // namespace

Automaton buildAutomaton(const PlatSpec& spec) {
    if (spec.strands < 2 || spec.strands % 2 != 0) {
        throw SemanticError("plat closure needs a positive even strand count, got " +
                            std::to_string(spec.strands));
    }
    const int caps = spec.strands / 2;
    if (static_cast<int>(spec.colors.size()) != caps) {
        throw SemanticError("expected one color per cap (" + std::to_string(caps) +
                            "), got " + std::to_string(spec.colors.size()));
    }
    QContext ctx(spec.k);
    for (const Spin j : spec.colors) {
        if (!ctx.inRange(j)) {
            throw SemanticError("cap color " + spinToString(j) +
                                " is outside the admissible range at k = " +
                                std::to_string(spec.k));
        }
    }
    // The all-zero "multi-singlet" labeling pairs each strand with its cap
    // partner in the zero channel, which forces one repeated color across
    // the caps; reject mixtures up front.
    for (const Spin j : spec.colors) {
        if (!(j == spec.colors.front())) {
            throw SemanticError("caps carry unequal colors; no all-zero singlet "
                                "labeling exists");
        }
    }

    Automaton a{ctx, spec, StateVector{}, StateVector{}, {}};
    const FusionTree tree = capTree(spec, platOrientations(spec));
    const int zero = allZeroIndex(tree, ctx);
    if (zero < 0) {
        throw SemanticError("no singlet state with all labels zero exists for "
                            "these caps");
    }
    a.initialState = basisVector(tree, zero, ctx);
    a.finalState = a.initialState;
    for (int i = 1; i < spec.strands; ++i) {
        a.alphabet.push_back(BraidLetter{i, 1});
        a.alphabet.push_back(BraidLetter{i, -1});
    }
    return a;
}

RunReport runWord(const Automaton& a, const BraidWord& w) {
    if (w.strands != a.spec.strands) {
        throw SemanticError("word is on " + std::to_string(w.strands) +
                            " strands but the closure has " +
                            std::to_string(a.spec.strands));
    }
    const int caps = a.spec.strands / 2;

    // Seed the leaf orientations from the diagram of this word, so each
    // component carries one coherent travel direction through every cap.
    const LinkDiagram diagram = buildDiagram(a.spec, w);
    StateVector v = a.initialState;
    v.tree.leafOrientations = diagram.wireOrientation;

    RunReport report;
    report.wordLength = static_cast<int>(w.letters.size());
    report.boundConstant = moveBudget(caps);

    for (const BraidLetter& letter : w.letters) {
        if (letter.index < 1 || letter.index >= a.spec.strands) {
            throw SemanticError("generator index " + std::to_string(letter.index) +
                                " is outside 1.." +
                                std::to_string(a.spec.strands - 1));
        }
        // A crossing of strands traveling in opposite directions braids with
        // the inverse phase of the parallel exchange; flipping the letter
        // sign on anti-parallel pairs implements that (the eigenvalues are
        // unit modulus, so inverse = conjugate).
        const int prod = v.tree.leafOrientations[letter.index - 1] *
                         v.tree.leafOrientations[letter.index];
        const int effective = prod < 0 ? -letter.sign : letter.sign;
        int routing = 0;
        v = applyGenerator(v, letter.index, effective, a.ctx, &routing);
        report.elementaryMoves += routing + 1;
    }

    // Measurement: align back to the pair-coupled tree (not charged to the
    // ledger) and read off the accepted all-zero component.  The acceptor
    // travels with the strands, so it is the all-zero labeling over the
    // evolved boundary; when the word permutes unequal colors into a cap it
    // simply never fires.
    v = changeBasis(v, oddShape(caps), a.ctx);
    const int zero = allZeroIndex(v.tree, a.ctx);
    report.amplitude = zero < 0 ? cplx{0.0, 0.0} : v.amplitudes[zero];
    report.probability = std::norm(report.amplitude);
    return report;
}

cplx extendedJones(const PlatSpec& spec, const BraidWord& w) {
    const Automaton a = buildAutomaton(spec);
    const RunReport report = runWord(a, w);
    double dims = 1.0;
    for (const Spin j : spec.colors) {
        dims *= qDim(j, a.ctx);
    }
    return dims / qDim(spec.colors.front(), a.ctx) * report.amplitude;
}

double acceptanceProbability(const Automaton& a, const BraidWord& w) {
    return runWord(a, w).probability;
}

std::pair<long long, double> complexityLedger(const PlatSpec& spec,
                                              const BraidWord& w) {
    const Automaton a = buildAutomaton(spec);
    const RunReport report = runWord(a, w);
    const double bound = report.boundConstant * crossingCount(w);
    return {report.elementaryMoves, bound};
}

std::string runReportToJson(const RunReport& r) {
    nlohmann::json doc;
    doc["re"] = r.amplitude.real();
    doc["im"] = r.amplitude.imag();
    doc["probability"] = r.probability;
    doc["moves"] = r.elementaryMoves;
    doc["bound"] = r.boundConstant;
    doc["wordLength"] = r.wordLength;
    return doc.dump();
}

}  // namespace platjones
