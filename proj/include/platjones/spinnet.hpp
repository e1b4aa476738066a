/**
 * @file spinnet.hpp
 * @brief Rotation and Twist-Rotation graphs on binary coupling schemes:
 *        generation, exact diameters, and the empirical growth check for
 *        the per-crossing move budget.
 */
#pragma once

#include <string>
#include <vector>

namespace platjones {

/// Edge flavor in a coupling graph: a rotation re-parenthesizes one internal
/// node ((A B) C <-> A (B C)); a twist swaps two adjacent leaves.
enum class EdgeType { rotation, twist };

/// One directed adjacency entry.  Twist connections appear twice, once per
/// handedness (+1 / -1): the deformed algebra splits each classical swap
/// into a left- and a right-handed exchange with the same endpoints, so the
/// doubling lives on the edges, never on the vertices.  Rotations carry
/// handedness 0.
struct GraphEdge {
    int to = 0;
    EdgeType type = EdgeType::rotation;
    int handedness = 0;
};

/// Graph over binary coupling schemes on leafCount labeled leaves.  A vertex
/// is a parenthesized word such as "((1 2) 3)" — the bracketing plus the
/// leaf order — and vertices are numbered by the lexicographic order of
/// those words, which makes the numbering reproducible across builds.
struct CouplingGraph {
    int leafCount = 0;
    bool twists = false;
    std::vector<std::string> vertices;
    std::vector<std::vector<GraphEdge>> adjacency;
};

/// Builds the full coupling graph on n+1 leaves.  With includeTwists the
/// vertex set runs over every leaf order and every bracketing ((n+1)! times
/// Catalan(n) schemes) and edges carry both flavors; without, the leaf
/// order is fixed at 1..n+1 and the Catalan(n) bracketings form the
/// rotation (associahedron) graph.  Throws SemanticError for n outside
/// 2..8.  The twist family is factorially large: sizes beyond n = 6 with
/// twists do not fit in a desk machine's memory.
CouplingGraph buildGraph(int n, bool includeTwists);

/// Exact diameter by breadth-first search from every vertex (sources are
/// swept in parallel).  A single-vertex graph has diameter 0.
int diameter(const CouplingGraph& g);

/// One row of the growth table: exact rotation-graph diameter on n+1 leaves
/// against the bound c*n*ln(n), with one c fitted for the whole sweep.
struct GrowthRow {
    int n = 0;
    int diameter = 0;
    double bound = 0.0;
};

/// Sweeps the fixed-order rotation family for n = 2..nMax, fits the
/// smallest c with diameter <= c*n*ln(n) on every row, and returns the
/// table.  Throws SemanticError when nMax is outside 2..8 or when the
/// per-row constants drift by a factor of 2 or more (the growth law would
/// then be failing).
std::vector<GrowthRow> growthCheck(int nMax);

/// Renders a growth table as CSV with the header "n,diameter,bound".
std::string growthCsv(const std::vector<GrowthRow>& rows);

}  // namespace platjones
