/**
 * @file fusion.hpp
 * @brief Binary coupling trees over colored leaves, singlet-sector state
 *        enumeration, elementary recoupling moves, and the braiding
 *        eigen-action on adjacent leaves.
 *
 * Tree shapes are laminar families of leaf intervals: every internal node
 * is the interval of leaves below it, and a node (a,b) splits into children
 * (a,m) and (m+1,b).  All vectors live in the total-spin-0 sector (root
 * label fixed to 0); basis states are ordered lexicographically by their
 * internal labels over the sorted node list, so matrices are reproducible.
 */
#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "platjones/qtensor.hpp"

namespace platjones {

/// Rooted binary tree over ordered leaves 1..leafCount, encoded as the
/// sorted list of internal-node leaf intervals (the root (1, leafCount)
/// included).  Two shapes over the same leaves differ only in bracketing.
struct TreeShape {
    int leafCount = 0;
    std::vector<std::pair<int, int>> nodes;  ///< sorted intervals (a,b), a<b

    bool operator==(const TreeShape&) const = default;

    bool contains(int a, int b) const;
    int indexOf(int a, int b) const;  ///< position in nodes; -1 if absent
    /// Split point m of node (a,b): children are (a,m), (m+1,b).
    int splitOf(int a, int b) const;
};

/// Pair tree: (j_{2l-1}, j_{2l}) -> k_l, then a left caterpillar over the
/// pair outputs.  Odd braid generators act diagonally here.
TreeShape oddShape(int pairs);

/// Left comb over [j_1, (j_2 j_3), (j_4 j_5), ..., j_{2N}]: every pair
/// (j_{2l}, j_{2l+1}) is directly coupled, so even braid generators act
/// diagonally.  For one pair this coincides with the odd shape.
TreeShape evenShape(int pairs);

/// A shape with per-leaf color and orientation decorations; the root sector
/// is fixed to total spin 0 throughout.
struct FusionTree {
    TreeShape shape;
    std::vector<Spin> leafColors;
    std::vector<int> leafOrientations;

    bool operator==(const FusionTree&) const = default;
    bool sameBoundary(const FusionTree& other) const {
        return leafColors == other.leafColors &&
               leafOrientations == other.leafOrientations;
    }
};

/// One admissible labeling of a tree's internal edges, aligned with
/// shape.nodes order (the root entry is always spin 0).
struct FusionState {
    std::vector<Spin> labels;

    bool operator==(const FusionState&) const = default;
};

/// All admissible singlet-sector labelings in canonical (lexicographic)
/// order; deterministic across runs.  An empty list is legal.
std::vector<FusionState> enumerateStates(const FusionTree& tree, const QContext& ctx);

/// Amplitudes over enumerateStates(tree, ctx) of a fixed tree.
struct StateVector {
    FusionTree tree;
    std::vector<cplx> amplitudes;
};

/// Unit vector along the canonical basis state of the given index.
StateVector basisVector(const FusionTree& tree, std::size_t index, const QContext& ctx);

double norm(const StateVector& v);

/// Elementary recoupling at the internal node (a,b).  forward=true demands
/// the local pattern ((x y) z) (left child internal) and rotates it to
/// (x (y z)); forward=false is the inverse rotation.  Amplitudes transform
/// by the recoupling matrix of the ambient algebra; the move is unitary.
/// Throws SemanticError on a malformed node handle.
StateVector fMove(const StateVector& v, std::pair<int, int> node, bool forward,
                  const QContext& ctx);

/// Re-expresses v in the target shape through a shortest sequence of
/// elementary moves (breadth-first search over shapes up to 8 leaves, with
/// a deterministic comb routing fallback beyond).  movesUsed, when given,
/// receives the number of elementary moves applied.
/// Throws SemanticError when the shapes cover different boundary data.
StateVector changeBasis(const StateVector& v, const TreeShape& target,
                        const QContext& ctx, int* movesUsed = nullptr);

/// Braiding eigenvalue for the channel z of two adjacent leaves with spins
/// j, jp.  For orientationProduct +1 (parallel strands):
///   lambda_z = (-1)^{j+jp-z} q^{(c_j+c_jp)/2 + c_min - c_z/2},
/// for -1 (antiparallel):
///   lambda_z = (-1)^{|j-jp|-z} q^{c_z/2 - |c_j-c_jp|/2},
/// with c_x = x(x+1).  Throws SemanticError on an inadmissible channel.
cplx braidEigenvalue(Spin z, Spin j, Spin jp, int orientationProduct,
                     const QContext& ctx);

/// Action of braid generator i (1-based, crossing leaves i and i+1): routes
/// to the nearest shape where the two leaves are directly coupled, scales
/// each amplitude by the channel eigenvalue (inverse for sign < 0), and
/// swaps the two leaf decorations.  movesUsed counts routing fMoves only.
/// Throws SemanticError when i is out of range.
StateVector applyGenerator(const StateVector& v, int i, int sign,
                           const QContext& ctx, int* movesUsed = nullptr);

}  // namespace platjones
