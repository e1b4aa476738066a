/**
 * @file spinnet.cpp
 * @brief Coupling-graph generation, parallel all-pairs BFS, growth table.
 */
#include "platjones/spinnet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numeric>
#include <queue>
#include <thread>
#include <unordered_map>
#include <utility>

#include "platjones/errors.hpp"

namespace platjones {

namespace {

/// A bracketing over leaf positions a..b, stored as the sorted list of its
/// internal intervals (the root interval included, singletons excluded).
using Interval = std::pair<int, int>;
using Shape = std::vector<Interval>;

/// All bracketings over positions a..b.
std::vector<Shape> enumerateShapes(int a, int b) {
    if (a == b) {
        return {Shape{}};
    }
    std::vector<Shape> out;
    for (int m = a; m < b; ++m) {
        for (const Shape& left : enumerateShapes(a, m)) {
            for (const Shape& right : enumerateShapes(m + 1, b)) {
                Shape s;
                s.reserve(left.size() + right.size() + 1);
                s.insert(s.end(), left.begin(), left.end());
                s.insert(s.end(), right.begin(), right.end());
                s.push_back({a, b});
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

/// Split point of the internal interval (a,b): the end of its left child.
int splitOf(const Shape& s, int a, int b) {
    int m = a;
    for (const Interval& node : s) {
        if (node.first == a && node.second < b && node.second > m) {
            m = node.second;
        }
    }
    return m;
}

bool hasNode(const Shape& s, int a, int b) {
    return std::binary_search(s.begin(), s.end(), Interval{a, b});
}

/// Parenthesized word of a scheme: leaf labels from `order`, bracketing
/// from `shape`, e.g. "((1 2) 3)".
std::string encodeScheme(const std::vector<int>& order, const Shape& shape,
                         int a, int b) {
    if (a == b) {
        return std::to_string(order[a - 1]);
    }
    const int m = splitOf(shape, a, b);
    return "(" + encodeScheme(order, shape, a, m) + " " +
           encodeScheme(order, shape, m + 1, b) + ")";
}

/// Shapes one elementary rotation away.  At a node (a,b) with an internal
/// left child (a,m) split at p, (A B) C -> A (B C) replaces (a,m) by
/// (p+1,b); the mirrored move applies when the right child is internal.
std::vector<Shape> rotatedShapes(const Shape& s, int leafCount) {
    std::vector<Shape> out;
    for (const Interval& node : s) {
        const int a = node.first;
        const int b = node.second;
        const int m = splitOf(s, a, b);
        if (m > a) {  // left child internal: rotate forward
            const int p = splitOf(s, a, m);
            Shape next = s;
            next.erase(std::find(next.begin(), next.end(), Interval{a, m}));
            next.push_back({p + 1, b});
            std::sort(next.begin(), next.end());
            out.push_back(std::move(next));
        }
        if (m + 1 < b && hasNode(s, m + 1, b)) {  // right child internal
            const int p = splitOf(s, m + 1, b);
            Shape next = s;
            next.erase(std::find(next.begin(), next.end(), Interval{m + 1, b}));
            next.push_back({a, p});
            std::sort(next.begin(), next.end());
            out.push_back(std::move(next));
        }
    }
    (void)leafCount;
    return out;
}

/// Eccentricity of `source` by breadth-first search; parallel twist copies
/// are harmless (the visited check drops them).
int eccentricity(const CouplingGraph& g, int source) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::queue<int> frontier;
    dist[source] = 0;
    frontier.push(source);
    int farthest = 0;
    while (!frontier.empty()) {
        const int at = frontier.front();
        frontier.pop();
        for (const GraphEdge& e : g.adjacency[at]) {
            if (dist[e.to] < 0) {
                dist[e.to] = dist[at] + 1;
                farthest = std::max(farthest, dist[e.to]);
                frontier.push(e.to);
            }
        }
    }
    for (const int d : dist) {
        if (d < 0) {
            throw SemanticError("coupling graph is not connected");
        }
    }
    return farthest;
}

}  // namespace

CouplingGraph buildGraph(int n, bool includeTwists) {
    if (n < 2 || n > 8) {
        throw SemanticError("coupling graphs are generated for 2 <= n <= 8, got " +
                            std::to_string(n));
    }
    const int leafCount = n + 1;
    const std::vector<Shape> shapes = enumerateShapes(1, leafCount);

    std::vector<std::vector<int>> orders;
    std::vector<int> order(leafCount);
    std::iota(order.begin(), order.end(), 1);
    if (includeTwists) {
        do {
            orders.push_back(order);
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        orders.push_back(order);
    }

    CouplingGraph g;
    g.leafCount = leafCount;
    g.twists = includeTwists;

    // Scheme list in a first pass, then lexicographic ids.
    std::vector<std::pair<int, int>> schemes;  // (order idx, shape idx)
    for (std::size_t o = 0; o < orders.size(); ++o) {
        for (std::size_t s = 0; s < shapes.size(); ++s) {
            g.vertices.push_back(encodeScheme(orders[o], shapes[s], 1, leafCount));
            schemes.push_back({static_cast<int>(o), static_cast<int>(s)});
        }
    }
    std::vector<int> byWord(g.vertices.size());
    std::iota(byWord.begin(), byWord.end(), 0);
    std::sort(byWord.begin(), byWord.end(), [&](int lhs, int rhs) {
        return g.vertices[lhs] < g.vertices[rhs];
    });
    std::vector<std::string> sortedWords;
    std::vector<std::pair<int, int>> sortedSchemes;
    std::unordered_map<std::string, int> idOf;
    sortedWords.reserve(byWord.size());
    sortedSchemes.reserve(byWord.size());
    for (std::size_t i = 0; i < byWord.size(); ++i) {
        sortedWords.push_back(std::move(g.vertices[byWord[i]]));
        sortedSchemes.push_back(schemes[byWord[i]]);
        idOf[sortedWords.back()] = static_cast<int>(i);
    }
    g.vertices = std::move(sortedWords);

    g.adjacency.resize(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& [o, s] = sortedSchemes[v];
        for (const Shape& next : rotatedShapes(shapes[s], leafCount)) {
            const int to = idOf.at(encodeScheme(orders[o], next, 1, leafCount));
            g.adjacency[v].push_back({to, EdgeType::rotation, 0});
        }
        if (includeTwists) {
            for (int i = 0; i + 1 < leafCount; ++i) {
                std::vector<int> swapped = orders[o];
                std::swap(swapped[i], swapped[i + 1]);
                const int to =
                    idOf.at(encodeScheme(swapped, shapes[s], 1, leafCount));
                g.adjacency[v].push_back({to, EdgeType::twist, +1});
                g.adjacency[v].push_back({to, EdgeType::twist, -1});
            }
        }
    }
    return g;
}

int diameter(const CouplingGraph& g) {
    const int count = static_cast<int>(g.vertices.size());
    if (count <= 1) {
        return 0;
    }
    const int workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(count)));
    const int chunk = (count + workers - 1) / workers;
    std::vector<std::future<int>> parts;
    for (int begin = 0; begin < count; begin += chunk) {
        const int end = std::min(begin + chunk, count);
        parts.push_back(std::async(std::launch::async, [&g, begin, end] {
            int widest = 0;
            for (int source = begin; source < end; ++source) {
                widest = std::max(widest, eccentricity(g, source));
            }
            return widest;
        }));
    }
    int widest = 0;
    for (auto& part : parts) {
        widest = std::max(widest, part.get());
    }
    return widest;
}

std::vector<GrowthRow> growthCheck(int nMax) {
    if (nMax < 2 || nMax > 8) {
        throw SemanticError("growth sweep runs for 2 <= nMax <= 8, got " +
                            std::to_string(nMax));
    }
    std::vector<GrowthRow> rows;
    double cLow = 0.0;
    double cHigh = 0.0;
    for (int n = 2; n <= nMax; ++n) {
        const int d = diameter(buildGraph(n, false));
        const double c = d / (n * std::log(n));
        cLow = rows.empty() ? c : std::min(cLow, c);
        cHigh = std::max(cHigh, c);
        rows.push_back({n, d, 0.0});
    }
    if (nMax > 2 && cHigh >= 2.0 * cLow) {
        throw SemanticError("rotation-graph diameters drift off the c*n*ln(n) "
                            "growth law");
    }
    for (GrowthRow& row : rows) {
        row.bound = cHigh * row.n * std::log(row.n);
    }
    return rows;
}

std::string growthCsv(const std::vector<GrowthRow>& rows) {
    std::string out = "n,diameter,bound\n";
    char line[96];
    for (const GrowthRow& row : rows) {
        std::snprintf(line, sizeof(line), "%d,%d,%.12g\n", row.n, row.diameter,
                      row.bound);
        out += line;
    }
    return out;
}

}  // namespace platjones
