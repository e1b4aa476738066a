/**
 * @file oracle.cpp
 * @brief Exact Kauffman bracket enumeration and Jones normalization.
 */
#include "platjones/oracle.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "platjones/errors.hpp"

namespace platjones {

LaurentPoly LaurentPoly::monomial(int quarterExp, long long coeff) {
    LaurentPoly p;
    if (coeff != 0) {
        p.terms[quarterExp] = coeff;
    }
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms) {
        const long long sum = (terms.count(e) ? terms[e] : 0) + c;
        if (sum == 0) {
            terms.erase(e);
        } else {
            terms[e] = sum;
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out += other;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms) {
        for (const auto& [e2, c2] : other.terms) {
            out += monomial(e1 + e2, c1 * c2);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(long long factor) const {
    LaurentPoly out;
    if (factor == 0) {
        return out;
    }
    for (const auto& [e, c] : terms) {
        out.terms[e] = c * factor;
    }
    return out;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms) {
        out.terms[-e] = c;
    }
    return out;
}

std::string LaurentPoly::toString(const std::string& variable) const {
    if (terms.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        long long mag = c;
        if (first) {
            if (c < 0) {
                out << '-';
                mag = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            mag = c < 0 ? -c : c;
        }
        first = false;
        if (e == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) {
            out << mag << '*';
        }
        out << variable;
        if (e != 4) {
            if (e % 4 == 0) {
                out << '^' << e / 4;
            } else if (e % 2 == 0) {
                out << "^(" << e / 2 << "/2)";
            } else {
                out << "^(" << e << "/4)";
            }
        }
    }
    return out.str();
}

namespace {

int findRoot(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void unite(std::vector<int>& parent, int a, int b) {
    parent[findRoot(parent, a)] = findRoot(parent, b);
}

}  // namespace

LaurentPoly kauffmanBracket(const LinkDiagram& d, std::uint64_t* statesVisited) {
    const int kappa = static_cast<int>(d.crossings.size());
    if (kappa > 16) {
        throw SemanticError("state sum supports at most 16 crossings, got " +
                            std::to_string(kappa));
    }

    // Loop value d = -A^2 - A^{-2}; precompute its powers.  A state with L
    // loops contributes weight * d^{L-1} (unknot normalization).
    const int maxLoops = d.strands / 2 + kappa + 1;
    std::vector<LaurentPoly> loopPower(maxLoops + 1);
    loopPower[0] = LaurentPoly::one();
    const LaurentPoly loopValue =
        LaurentPoly::monomial(8, -1) + LaurentPoly::monomial(-8, -1);
    for (int m = 1; m <= maxLoops; ++m) {
        loopPower[m] = loopPower[m - 1] * loopValue;
    }

    LaurentPoly total;
    std::uint64_t states = 0;
    std::vector<int> parent(d.segments);
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << kappa); ++state) {
        ++states;
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& cap : d.bottomCaps) {
            unite(parent, cap.first, cap.second);
        }
        for (const auto& cap : d.topCaps) {
            unite(parent, cap.first, cap.second);
        }
        int aExponent = 0;  // net A power of this state, in whole units
        for (int c = 0; c < kappa; ++c) {
            const DiagramCrossing& x = d.crossings[c];
            const bool vertical = ((state >> c) & 1u) == 0;
            // A positive letter weights the vertical smoothing with A and
            // the horizontal one with A^{-1}; a negative letter swaps them.
            aExponent += (vertical ? 1 : -1) * x.sign;
            if (vertical) {
                unite(parent, x.belowLeft, x.aboveLeft);
                unite(parent, x.belowRight, x.aboveRight);
            } else {
                unite(parent, x.belowLeft, x.belowRight);
                unite(parent, x.aboveLeft, x.aboveRight);
            }
        }
        int loops = 0;
        for (int s = 0; s < d.segments; ++s) {
            if (findRoot(parent, s) == s) {
                ++loops;
            }
        }
        total += loopPower[loops - 1] * LaurentPoly::monomial(4 * aExponent, 1);
    }
    if (statesVisited != nullptr) {
        *statesVisited = states;
    }
    return total;
}

BracketResult bracketResult(const LinkDiagram& d) {
    BracketResult out;
    out.bracket = kauffmanBracket(d, &out.statesVisited);
    out.writhe = writhe(d);
    out.components = d.components;
    return out;
}

LaurentPoly jonesFromBracket(const BracketResult& b) {
    // V(t) = (-A)^{-3w} <L> with t = A^{-4}: a quarter-exponent e in A maps
    // to -e/4 in t, the prefactor shifts by +3w quarter-steps of t and
    // contributes the sign (-1)^w.
    LaurentPoly v;
    const long long sign = b.writhe % 2 == 0 ? 1 : -1;
    for (const auto& [e, c] : b.bracket.terms) {
        v += LaurentPoly::monomial(-e / 4 + 3 * b.writhe, sign * c);
    }
    return v;
}

cplx evalAtRoot(const LaurentPoly& p, const QContext& ctx) {
    cplx value{0.0, 0.0};
    for (const auto& [e, c] : p.terms) {
        value += static_cast<double>(c) * ctx.qPow4(e);
    }
    return value;
}

}  // namespace platjones
