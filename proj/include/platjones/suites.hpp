/**
 * @file suites.hpp
 * @brief Verification suites shared by the command-line front end and the
 *        acceptance runner: each suite re-derives a family of values or
 *        properties and reports per-check pass/fail lines with pinned
 *        tolerances.
 */
#pragma once

#include <string>
#include <vector>

namespace platjones {

/// One verification line: what was checked, whether it held, and a short
/// measurement summary (worst deviation, corpus size, ...).
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Trefoil golden values: the positive plat word against its closed form
/// (and the mirror word against the conjugate) for every k in 5..16,
/// tolerance 1e-9.
std::vector<CheckResult> verifyTrefoilSuite();

/// Exhaustive engine-vs-bracket-oracle comparison: all plat words up to
/// maxCrossings letters on 4 strands and maxCrossings-2 on 6 strands,
/// color 1/2, k in {5, 7, 8}, tolerance 1e-8; plus every catalog entry
/// (catalog resolved from `catalogOverride`, the environment, or the
/// default path).
std::vector<CheckResult> verifyOracleSuite(int maxCrossings,
                                           const std::string& catalogOverride = "");

/// Representation checks on the full singlet spaces for 4 and 6 strands,
/// colors from {1/2, 1}, k in {5, 6, 7}: Yang-Baxter and far-commutativity
/// residuals (1e-10) and unitarity of generator and basis-change matrices
/// (1e-12).
std::vector<CheckResult> verifyYangBaxterSuite();

/// Recoupling-identity checks: pentagon coherence loops on random colored
/// four-leaf trees, duality-matrix orthogonality on random admissible
/// tuples (200 tuples, k <= 10, 1e-10), and the frozen golden block at
/// k = 5 (1e-12).
std::vector<CheckResult> verifyIdentitiesSuite();

/// Coupling-graph anchors: the 120-scheme four-leaf twist graph, monotone
/// rotation diameters for n = 2..8, and growth-constant stability (< x2).
std::vector<CheckResult> verifyGraphSuite();

/// Eigen-basis structure: odd generators diagonal on the pair basis and
/// even generators on the shifted basis, off-diagonals <= 1e-14, for 4 and
/// 6 strands.
std::vector<CheckResult> verifyDiagonalitySuite();

/// Move-ledger bound on a fixed 500-word random corpus over 4, 6, and 8
/// strands (lengths up to 20): elementaryMoves <= c(N) * crossings for
/// every word; reports the worst ratio.
std::vector<CheckResult> verifyLedgerSuite();

/// Automaton axioms: empty-word amplitude exactly 1, free-reduction and
/// braid-relation invariance within 1e-10 on a 200-word corpus, and unit
/// amplitude bound throughout.
std::vector<CheckResult> verifyAutomatonSuite();

}  // namespace platjones
