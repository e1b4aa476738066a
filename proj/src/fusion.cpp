/**
 * @file fusion.cpp
 * @brief Fusion-tree state enumeration, recoupling moves, and braiding.
 */
#include "platjones/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "platjones/errors.hpp"

namespace platjones {

bool TreeShape::contains(int a, int b) const {
    return std::binary_search(nodes.begin(), nodes.end(), std::make_pair(a, b));
}

int TreeShape::indexOf(int a, int b) const {
    const auto probe = std::make_pair(a, b);
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), probe);
    if (it == nodes.end() || *it != probe) {
        return -1;
    }
    return static_cast<int>(it - nodes.begin());
}

int TreeShape::splitOf(int a, int b) const {
    // The left child is the longest interval starting at a strictly inside
    // (a,b); with none, the left child is the leaf a itself.
    int m = a;
    for (const auto& nd : nodes) {
        if (nd.first == a && nd.second < b && nd.second > m) {
            m = nd.second;
        }
    }
    return m;
}

TreeShape oddShape(int pairs) {
    TreeShape shape;
    shape.leafCount = 2 * pairs;
    for (int l = 1; l <= pairs; ++l) {
        shape.nodes.emplace_back(2 * l - 1, 2 * l);
    }
    for (int l = 2; l <= pairs; ++l) {
        shape.nodes.emplace_back(1, 2 * l);
    }
    std::sort(shape.nodes.begin(), shape.nodes.end());
    return shape;
}

TreeShape evenShape(int pairs) {
    TreeShape shape;
    shape.leafCount = 2 * pairs;
    for (int l = 1; l < pairs; ++l) {
        shape.nodes.emplace_back(2 * l, 2 * l + 1);
        shape.nodes.emplace_back(1, 2 * l + 1);
    }
    shape.nodes.emplace_back(1, 2 * pairs);
    std::sort(shape.nodes.begin(), shape.nodes.end());
    return shape;
}

namespace {

/// Labeled spin of a leaf span: the leaf color for a single leaf, the
/// state's edge label otherwise.
Spin spanLabel(const FusionTree& tree, const FusionState& state, int a, int b) {
    if (a == b) {
        return tree.leafColors[static_cast<std::size_t>(a) - 1];
    }
    return state.labels[static_cast<std::size_t>(tree.shape.indexOf(a, b))];
}

struct Partial {
    Spin label;
    std::map<std::pair<int, int>, Spin> assign;
};

std::vector<Partial> enumerateSpan(const FusionTree& tree, const QContext& ctx,
                                   int a, int b) {
    if (a == b) {
        return {{tree.leafColors[static_cast<std::size_t>(a) - 1], {}}};
    }
    const int m = tree.shape.splitOf(a, b);
    const auto left = enumerateSpan(tree, ctx, a, m);
    const auto right = enumerateSpan(tree, ctx, m + 1, b);
    std::vector<Partial> out;
    for (const Partial& l : left) {
        for (const Partial& r : right) {
            const int lo = std::abs(l.label.twice - r.label.twice);
            const int hi = l.label.twice + r.label.twice;
            for (int tz = lo; tz <= hi; tz += 2) {
                const Spin z{tz};
                if (!admissible(l.label, r.label, z, ctx)) {
                    continue;
                }
                Partial p;
                p.label = z;
                p.assign = l.assign;
                p.assign.insert(r.assign.begin(), r.assign.end());
                p.assign[{a, b}] = z;
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

std::vector<int> labelKey(const FusionState& s) {
    std::vector<int> key;
    key.reserve(s.labels.size());
    for (const Spin& j : s.labels) {
        key.push_back(j.twice);
    }
    return key;
}

/// Shape after one elementary rotation at `node`; no amplitude work.
/// Returns false when the requested pattern is absent.
bool rotatedShape(const TreeShape& shape, std::pair<int, int> node, bool forward,
                  TreeShape& out, std::pair<int, int>* removed = nullptr,
                  std::pair<int, int>* added = nullptr) {
    const auto [a, b] = node;
    if (shape.indexOf(a, b) < 0) {
        return false;
    }
    const int m = shape.splitOf(a, b);
    std::pair<int, int> oldEdge;
    std::pair<int, int> newEdge;
    if (forward) {  // ((x y) z) -> (x (y z))
        if (m == a) {
            return false;  // left child is a leaf
        }
        const int p = shape.splitOf(a, m);
        oldEdge = {a, m};
        newEdge = {p + 1, b};
    } else {  // (x (y z)) -> ((x y) z)
        if (m + 1 == b) {
            return false;  // right child is a leaf
        }
        const int p = shape.splitOf(m + 1, b);
        oldEdge = {m + 1, b};
        newEdge = {a, p};
    }
    out = shape;
    out.nodes.erase(out.nodes.begin() + out.indexOf(oldEdge.first, oldEdge.second));
    out.nodes.insert(std::lower_bound(out.nodes.begin(), out.nodes.end(), newEdge),
                     newEdge);
    if (removed != nullptr) {
        *removed = oldEdge;
    }
    if (added != nullptr) {
        *added = newEdge;
    }
    return true;
}

struct ShapeMove {
    std::pair<int, int> node;
    bool forward = true;
};

std::vector<std::pair<TreeShape, ShapeMove>> shapeNeighbors(const TreeShape& shape) {
    std::vector<std::pair<TreeShape, ShapeMove>> out;
    for (const auto& node : shape.nodes) {
        for (const bool forward : {true, false}) {
            TreeShape next;
            if (rotatedShape(shape, node, forward, next)) {
                out.push_back({std::move(next), {node, forward}});
            }
        }
    }
    return out;
}

std::vector<int> shapeKey(const TreeShape& shape) {
    std::vector<int> key;
    key.reserve(2 * shape.nodes.size());
    for (const auto& [a, b] : shape.nodes) {
        key.push_back(a);
        key.push_back(b);
    }
    return key;
}

/// Breadth-first search from `source` to the nearest shape satisfying
/// `accept`; returns the move sequence (empty when source already does).
template <typename Accept>
std::vector<ShapeMove> planMoves(const TreeShape& source, Accept accept) {
    if (accept(source)) {
        return {};
    }
    std::map<std::vector<int>, std::pair<std::vector<int>, ShapeMove>> trail;
    std::map<std::vector<int>, TreeShape> seen;
    std::queue<TreeShape> frontier;
    seen[shapeKey(source)] = source;
    frontier.push(source);
    while (!frontier.empty()) {
        const TreeShape shape = frontier.front();
        frontier.pop();
        const std::vector<int> hereKey = shapeKey(shape);
        for (auto& [next, move] : shapeNeighbors(shape)) {
            const std::vector<int> key = shapeKey(next);
            if (seen.count(key)) {
                continue;
            }
            seen[key] = next;
            trail[key] = {hereKey, move};
            if (accept(next)) {
                std::vector<ShapeMove> path;
                std::vector<int> walk = key;
                while (walk != shapeKey(source)) {
                    auto& [prev, mv] = trail.at(walk);
                    path.push_back(mv);
                    walk = prev;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            frontier.push(next);
        }
    }
    throw SemanticError("no move sequence reaches the requested tree shape");
}

/// Deterministic routing for wide trees (beyond the BFS cutoff): rotate the
/// source down to the left comb, then climb to the target by inverting the
/// target's own comb routing.
std::vector<ShapeMove> combRoute(const TreeShape& shape) {
    std::vector<ShapeMove> out;
    TreeShape current = shape;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const auto& node : current.nodes) {
            const int m = current.splitOf(node.first, node.second);
            if (m + 1 < node.second) {  // right child internal: comb it down
                TreeShape next;
                rotatedShape(current, node, false, next);
                out.push_back({node, false});
                current = std::move(next);
                progressed = true;
                break;
            }
        }
    }
    return out;
}

std::vector<ShapeMove> planMovesVia(const TreeShape& source, const TreeShape& target) {
    if (source.leafCount <= 8) {
        return planMoves(source, [&](const TreeShape& s) { return s == target; });
    }
    std::vector<ShapeMove> path = combRoute(source);
    std::vector<ShapeMove> back = combRoute(target);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
        path.push_back({it->node, !it->forward});
    }
    return path;
}

}  // namespace

std::vector<FusionState> enumerateStates(const FusionTree& tree, const QContext& ctx) {
    if (static_cast<int>(tree.leafColors.size()) != tree.shape.leafCount ||
        static_cast<int>(tree.leafOrientations.size()) != tree.shape.leafCount) {
        throw SemanticError("tree decorations do not match the leaf count");
    }
    for (const Spin& color : tree.leafColors) {
        if (!ctx.inRange(color)) {
            throw SemanticError("leaf color " + spinToString(color) +
                                " is outside the admissible range");
        }
    }
    std::vector<FusionState> states;
    for (const Partial& p : enumerateSpan(tree, ctx, 1, tree.shape.leafCount)) {
        if (p.label.twice != 0) {
            continue;
        }
        FusionState s;
        s.labels.reserve(tree.shape.nodes.size());
        for (const auto& node : tree.shape.nodes) {
            s.labels.push_back(p.assign.at(node));
        }
        states.push_back(std::move(s));
    }
    std::sort(states.begin(), states.end(),
              [](const FusionState& x, const FusionState& y) {
                  return labelKey(x) < labelKey(y);
              });
    return states;
}

StateVector basisVector(const FusionTree& tree, std::size_t index, const QContext& ctx) {
    StateVector v;
    v.tree = tree;
    const std::size_t dim = enumerateStates(tree, ctx).size();
    if (index >= dim) {
        throw SemanticError("basis index out of range");
    }
    v.amplitudes.assign(dim, cplx{0.0, 0.0});
    v.amplitudes[index] = cplx{1.0, 0.0};
    return v;
}

double norm(const StateVector& v) {
    double sum = 0.0;
    for (const cplx& a : v.amplitudes) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

StateVector fMove(const StateVector& v, std::pair<int, int> node, bool forward,
                  const QContext& ctx) {
    TreeShape newShape;
    std::pair<int, int> removed;
    std::pair<int, int> added;
    if (!rotatedShape(v.tree.shape, node, forward, newShape, &removed, &added)) {
        throw SemanticError("no elementary move with the requested pattern at node (" +
                            std::to_string(node.first) + "," +
                            std::to_string(node.second) + ")");
    }
    // Spans of the three subtrees in the pattern ((a b) c) <-> (a (b c)).
    const auto [A, B] = node;
    const int m = v.tree.shape.splitOf(A, B);
    int aEnd = 0;
    int bEnd = 0;
    if (forward) {
        aEnd = v.tree.shape.splitOf(A, m);  // a = (A..aEnd), b = (..m), c = (..B)
        bEnd = m;
    } else {
        aEnd = m;
        bEnd = added.second;  // b = (m+1..added.second), c = (..B)
    }

    const std::vector<FusionState> oldStates = enumerateStates(v.tree, ctx);
    FusionTree newTree = v.tree;
    newTree.shape = newShape;
    const std::vector<FusionState> newStates = enumerateStates(newTree, ctx);

    std::map<std::vector<int>, std::size_t> oldIndex;
    for (std::size_t i = 0; i < oldStates.size(); ++i) {
        oldIndex[labelKey(oldStates[i])] = i;
    }
    // Position of each old edge in the new node list (-1 for the removed one).
    const int removedPos = v.tree.shape.indexOf(removed.first, removed.second);
    std::vector<int> oldPosInNew(v.tree.shape.nodes.size(), -1);
    for (std::size_t i = 0; i < v.tree.shape.nodes.size(); ++i) {
        const auto& nd = v.tree.shape.nodes[i];
        oldPosInNew[i] = newShape.indexOf(nd.first, nd.second);
    }
    const int addedPos = newShape.indexOf(added.first, added.second);

    StateVector out;
    out.tree = newTree;
    out.amplitudes.assign(newStates.size(), cplx{0.0, 0.0});
    for (std::size_t sn = 0; sn < newStates.size(); ++sn) {
        const FusionState& ns = newStates[sn];
        const Spin aL = spanLabel(newTree, ns, A, aEnd);
        const Spin bL = spanLabel(newTree, ns, aEnd + 1, bEnd);
        const Spin cL = spanLabel(newTree, ns, bEnd + 1, B);
        const Spin fL = spanLabel(newTree, ns, A, B);
        const FMatrix F = fMatrix(aL, bL, cL, fL, ctx);
        const Spin moved = ns.labels[static_cast<std::size_t>(addedPos)];

        // Reconstruct the candidate old label vector, substituting each
        // possible label on the removed edge.
        std::vector<int> oldKey(v.tree.shape.nodes.size(), 0);
        for (std::size_t i = 0; i < oldKey.size(); ++i) {
            if (static_cast<int>(i) != removedPos) {
                oldKey[i] = ns.labels[static_cast<std::size_t>(oldPosInNew[i])].twice;
            }
        }
        const std::vector<Spin>& sumOver = forward ? F.rows : F.cols;
        for (const Spin& other : sumOver) {
            oldKey[static_cast<std::size_t>(removedPos)] = other.twice;
            const auto it = oldIndex.find(oldKey);
            if (it == oldIndex.end()) {
                continue;
            }
            const double entry = forward ? F.at(other, moved) : F.at(moved, other);
            out.amplitudes[sn] += entry * v.amplitudes[it->second];
        }
    }
    return out;
}

StateVector changeBasis(const StateVector& v, const TreeShape& target,
                        const QContext& ctx, int* movesUsed) {
    if (target.leafCount != v.tree.shape.leafCount) {
        throw SemanticError("target tree covers different boundary data");
    }
    const std::vector<ShapeMove> plan = planMovesVia(v.tree.shape, target);
    StateVector out = v;
    for (const ShapeMove& move : plan) {
        out = fMove(out, move.node, move.forward, ctx);
    }
    if (movesUsed != nullptr) {
        *movesUsed = static_cast<int>(plan.size());
    }
    return out;
}

cplx braidEigenvalue(Spin z, Spin j, Spin jp, int orientationProduct,
                     const QContext& ctx) {
    if (!admissible(j, jp, z, ctx)) {
        throw SemanticError("braiding channel " + spinToString(z) +
                            " is not admissible for (" + spinToString(j) + "," +
                            spinToString(jp) + ")");
    }
    // Eighth-integer bookkeeping: with t = 2j, the Casimir c_j = j(j+1)
    // contributes t(t+2) in units of 1/8.
    const auto c8 = [](int t) { return static_cast<long long>(t) * (t + 2); };
    const int tj = j.twice;
    const int tp = jp.twice;
    const int tz = z.twice;
    long long num8 = 0;
    int signExp = 0;
    if (orientationProduct > 0) {
        num8 = c8(tj) + c8(tp) + 2 * c8(std::min(tj, tp)) - c8(tz);
        signExp = (tj + tp - tz) / 2;
    } else {
        num8 = c8(tz) - std::llabs(c8(tj) - c8(tp));
        signExp = (std::abs(tj - tp) - tz) / 2;
    }
    const double sign = signExp % 2 == 0 ? 1.0 : -1.0;
    return sign * ctx.qPow8(num8);
}

StateVector applyGenerator(const StateVector& v, int i, int sign,
                           const QContext& ctx, int* movesUsed) {
    const int leaves = v.tree.shape.leafCount;
    if (i < 1 || i >= leaves) {
        throw SemanticError("generator index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(leaves - 1));
    }
    StateVector current = v;
    int moves = 0;
    if (v.tree.shape.indexOf(i, i + 1) < 0) {
        if (leaves <= 8) {
            const std::vector<ShapeMove> plan = planMoves(
                v.tree.shape,
                [&](const TreeShape& s) { return s.contains(i, i + 1); });
            for (const ShapeMove& move : plan) {
                current = fMove(current, move.node, move.forward, ctx);
            }
            moves = static_cast<int>(plan.size());
        } else {
            // Left comb over the atoms [1, .., i-1, (i i+1), i+2, .., L]:
            // prefixes never end at leaf i, and the i==1 comb starts with
            // the pair node itself.
            TreeShape target;
            target.leafCount = leaves;
            target.nodes.emplace_back(i, i + 1);
            for (int b = 2; b <= leaves; ++b) {
                if (i == 1 ? b == 2 : b == i) {
                    continue;
                }
                target.nodes.emplace_back(1, b);
            }
            std::sort(target.nodes.begin(), target.nodes.end());
            current = changeBasis(current, target, ctx, &moves);
        }
    }

    const std::vector<FusionState> states = enumerateStates(current.tree, ctx);
    const int channelPos = current.tree.shape.indexOf(i, i + 1);
    const Spin jLeft = current.tree.leafColors[static_cast<std::size_t>(i) - 1];
    const Spin jRight = current.tree.leafColors[static_cast<std::size_t>(i)];
    const int orientationProduct =
        current.tree.leafOrientations[static_cast<std::size_t>(i) - 1] *
        current.tree.leafOrientations[static_cast<std::size_t>(i)];
    for (std::size_t s = 0; s < states.size(); ++s) {
        const Spin z = states[s].labels[static_cast<std::size_t>(channelPos)];
        const cplx lambda = braidEigenvalue(z, jLeft, jRight, orientationProduct, ctx);
        current.amplitudes[s] *= sign > 0 ? lambda : std::conj(lambda);
    }
    std::swap(current.tree.leafColors[static_cast<std::size_t>(i) - 1],
              current.tree.leafColors[static_cast<std::size_t>(i)]);
    std::swap(current.tree.leafOrientations[static_cast<std::size_t>(i) - 1],
              current.tree.leafOrientations[static_cast<std::size_t>(i)]);
    if (movesUsed != nullptr) {
        *movesUsed = moves;
    }
    return current;
}

}  // namespace platjones
