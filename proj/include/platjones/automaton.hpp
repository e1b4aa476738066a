/**
 * @file automaton.hpp
 * @brief Measure-once quantum automaton over singlet fusion states: build
 *        the machine for a plat closure, run braid words through it, and
 *        derive link invariants and an elementary-move ledger from the runs.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/fusion.hpp"
#include "platjones/qtensor.hpp"

namespace platjones {

/// The machine evaluating one plat closure.  States are singlet fusion
/// vectors over the 2N cap leaves, the alphabet is the braid generators
/// together with their inverses, and one transition applies one crossing.
/// Immutable after construction; runs are pure functions of (machine, word),
/// so concurrent runs over distinct words are safe.
struct Automaton {
    QContext ctx;                       ///< deformation algebra data
    PlatSpec spec;                      ///< closure the machine evaluates
    StateVector initialState;           ///< pair-coupled tree, all labels 0
    StateVector finalState;             ///< accepted vector, default=initial
    std::vector<BraidLetter> alphabet;  ///< s1, s1^-1, ..., s_{2N-1}^-1
};

/// Outcome of one run: the accepted amplitude, its squared modulus, and the
/// cost ledger.  elementaryMoves counts braidings and duality moves alike,
/// one unit each; boundConstant is c(N) = (2N-1)*ln(2N-1) + 1, the per-
/// crossing constant bounding the ledger via moves <= c(N) * wordLength.
struct RunReport {
    cplx amplitude{1.0, 0.0};
    double probability = 1.0;
    long long elementaryMoves = 0;
    int wordLength = 0;
    double boundConstant = 1.0;
};

/// Constructs the automaton for a plat closure: validates the strand count,
/// builds the algebra context for spec.k, and prepares the initial state as
/// the all-zero ("multi-singlet") labeling of the pair-coupled tree, which
/// exists only when every cap carries one repeated color.  Throws
/// SemanticError for an odd or short strand count, a color list of the
/// wrong length, colors outside the admissible range, or caps carrying
/// unequal colors (no all-zero labeling exists then).
Automaton buildAutomaton(const PlatSpec& spec);

/// Runs w through the automaton: seeds the initial state with the closure-
/// coherent strand orientations of the diagram of w, applies one generator
/// per letter (routing the coupling tree on demand), and projects on the
/// accepted all-zero labeling carried to the evolved boundary.  The move
/// ledger counts, per letter, the routing duality moves plus one braiding;
/// the final alignment used by the projection is measurement, not
/// evolution, and is not charged.  Throws SemanticError when w.strands
/// disagrees with the closure.
RunReport runWord(const Automaton& a, const BraidWord& w);

/// Invariant of the colored plat closure: the product of the cap quantum
/// dimensions times the accepted amplitude, normalized by the first cap's
/// quantum dimension so the unknot evaluates to exactly 1.  For color 1/2
/// this reproduces the Jones polynomial of the closure at t = q (see the
/// calibration notes in the README for the chirality and square-root-branch
/// dictionary against the Kauffman-bracket oracle).
cplx extendedJones(const PlatSpec& spec, const BraidWord& w);

/// Probability that the automaton accepts w: the squared modulus of the
/// accepted amplitude.  Always in [0, 1] (unitary evolution between
/// unit-norm endpoints).
double acceptanceProbability(const Automaton& a, const BraidWord& w);

/// Cost summary for evaluating w: the elementary-move count of the run and
/// the bound c(N) * crossings it must stay under.  The empty word costs
/// (0, 0).
std::pair<long long, double> complexityLedger(const PlatSpec& spec,
                                              const BraidWord& w);

/// Serializes a report as a JSON object with fields re, im, probability,
/// moves, bound, wordLength.
std::string runReportToJson(const RunReport& r);

}  // namespace platjones
