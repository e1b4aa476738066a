/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for color-1/2 invariants: exact Kauffman
 *        bracket state sums over plat diagrams, Jones normalization, and
 *        evaluation at roots of unity.
 *
 * All polynomial arithmetic is exact over the integers; floating point
 * enters only in evalAtRoot.  Exponents are stored in quarter units of the
 * nominal variable (A for brackets, t for Jones data), so A^1 is {4: 1} and
 * t^{1/2} is {2: 1}.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "platjones/braid.hpp"
#include "platjones/qtensor.hpp"

namespace platjones {

/// Sparse Laurent polynomial with integer coefficients over quarter-integer
/// exponents.  Zero coefficients are never stored.
struct LaurentPoly {
    std::map<int, long long> terms;  ///< quarter-exponent -> coefficient

    static LaurentPoly monomial(int quarterExp, long long coeff);
    static LaurentPoly one() { return monomial(0, 1); }

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly scaled(long long factor) const;

    /// Substitutes x -> 1/x (negates every exponent).
    LaurentPoly inverted() const;

    bool isZero() const { return terms.empty(); }
    bool operator==(const LaurentPoly&) const = default;

    /// Human-readable rendering such as "-t^-4 + t^-3 + t^-1".
    std::string toString(const std::string& variable) const;
};

/// Bracket state sum bundled with the diagram data the Jones normalization
/// needs, plus the state counter for cost assertions.
struct BracketResult {
    LaurentPoly bracket;  ///< Kauffman bracket in A, unknot-normalized
    int writhe = 0;
    int components = 1;
    std::uint64_t statesVisited = 0;
};

/// Exact 2^kappa state sum: each crossing resolves into the two planar
/// smoothings (weights A and A^{-1} as dictated by the letter sign), loops
/// count through a union-find over strand segments, and each state adds its
/// weight times (-A^2 - A^{-2})^{loops-1}.
/// Throws SemanticError when the diagram has more than 16 crossings.
LaurentPoly kauffmanBracket(const LinkDiagram& d, std::uint64_t* statesVisited = nullptr);

/// Convenience wrapper: bracket, writhe, component count, state counter.
BracketResult bracketResult(const LinkDiagram& d);

/// Writhe-corrected Jones polynomial V(t) = (-A)^{-3w} <L> under t = A^{-4},
/// returned as exact Laurent data in t.
LaurentPoly jonesFromBracket(const BracketResult& b);

/// Evaluates Laurent data at the context's root q = exp(-2 pi i / k), with
/// quarter powers taken through the principal q^{1/4}.
cplx evalAtRoot(const LaurentPoly& p, const QContext& ctx);

}  // namespace platjones
