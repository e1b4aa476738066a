/**
 * @file qtensor.hpp
 * @brief q-deformed SU(2) arithmetic at a root of unity.
 *
 * Everything is evaluated at q = exp(-2*pi*i/k) for an integer k >= 3.
 * Spins are stored doubled (twice = 2j) so half-integers stay exact.
 * Provides q-integers/q-factorials, fusion admissibility at level k-2,
 * q-Clebsch-Gordan coefficients (highest-weight construction + lowering),
 * the single-sum Racah q-6j symbol, and the orthogonal recoupling (F)
 * matrices built from it.
 *
 * Conventions (frozen; see README):
 *   [n]      = sin(pi n / k) / sin(pi / k)
 *   {a b e; c d f}  standard single-sum formula over q-factorials
 *   F(j1,j2,j3,j)[j12][j23]
 *            = sqrt([2j12+1][2j23+1]) (-1)^{j1+j2+j3+j} {j1 j2 j12; j3 j j23}
 * F is real orthogonal; rows/columns run over admissible channels in
 * ascending spin order.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace platjones {

using cplx = std::complex<double>;

/// Half-integer spin stored as 2j.
struct Spin {
    int twice = 0;

    constexpr Spin() = default;
    constexpr explicit Spin(int twiceJ) : twice(twiceJ) {}

    double value() const { return 0.5 * twice; }
    bool operator==(const Spin&) const = default;
    auto operator<=>(const Spin&) const = default;
};

/// Parses "0", "1", "1/2", "3/2", ... ; throws ParseError on anything else.
Spin spinFromString(const std::string& text);
/// Formats as "p/2" for odd doubled values, plain integer otherwise.
std::string spinToString(Spin j);

/**
 * Immutable root-of-unity regime: k, q = exp(-2*pi*i/k), level = k-2,
 * maxSpin = (k-2)/2, plus cached q-integer and q-factorial tables and a
 * memo for 6j evaluations.  Safe for concurrent use after construction.
 */
class QContext {
public:
    explicit QContext(int k);
    /// Copies carry the same regime and tables but start with an empty 6j
    /// memo; the memo is a cache, not state.
    QContext(const QContext& other);

    int k() const { return k_; }
    int level() const { return k_ - 2; }
    cplx q() const { return q_; }
    int maxSpinTwice() const { return k_ - 2; }

    /// [n] for any n >= 0; exactly 0 when n is a multiple of k.
    double qInt(int n) const;
    /// [n]! = [1][2]...[n]; exactly 0 for n >= k.  [0]! = 1.
    double qFac(int n) const;
    /// q^{num4/4} with the principal quarter root exp(-2*pi*i/(4k)).
    cplx qPow4(long long num4) const;
    /// q^{num8/8} with the principal eighth root.
    cplx qPow8(long long num8) const;

    bool inRange(Spin j) const { return j.twice >= 0 && j.twice <= maxSpinTwice(); }

private:
    int k_;
    cplx q_;
    std::vector<double> qint_;  // [0 .. 2k]
    std::vector<double> qfac_;  // [0 .. 2k]

    friend double qSixJ(const struct QRacahKey&, const QContext&);
    mutable std::unordered_map<std::uint64_t, double> sixjMemo_;
    mutable std::mutex memoMutex_;
};

/// Six spins identifying one Racah evaluation {j1 j2 j12; j3 j j23}.
/// Its triads are (j1,j2,j12), (j3,j,j12), (j1,j,j23), (j3,j2,j23).
struct QRacahKey {
    Spin j1, j2, j12, j3, j, j23;
};

double qInt(int n, const QContext& ctx);
double qDim(Spin j, const QContext& ctx);

/// Fusion admissibility: |j1-j2| <= j3 <= j1+j2, integer total spin,
/// and the level truncation j1+j2+j3 <= k-2.
bool admissible(Spin j1, Spin j2, Spin j3, const QContext& ctx);

/**
 * q-Clebsch-Gordan coefficient <j1 m1, j2 m2 | j m>.  All magnetic numbers
 * are doubled like spins.  Zero when m != m1+m2 or (j1,j2,j) is
 * inadmissible; throws SemanticError when a projection exceeds its spin.
 * Normalized so the stretched coefficient <j1 j1, j2 j2 | j1+j2, j1+j2> = 1;
 * lower-m rows are generated by the coproduct lowering operator.
 */
cplx qCG(Spin j1, int twiceM1, Spin j2, int twiceM2, Spin j, int twiceM,
         const QContext& ctx);

/// Racah q-6j symbol by the standard single-sum formula; 0 on inadmissible
/// triads; always real in this regime.  Memoized per context.
double qSixJ(const QRacahKey& key, const QContext& ctx);

/// (-1)^{j1+j2+j3+j} {j1 j2 j12; j3 j j23} / sqrt(qDim(j12) qDim(j23)).
double normRacah(Spin j1, Spin j2, Spin j3, Spin j, Spin j12, Spin j23,
                 const QContext& ctx);

/// Recoupling matrix between ((j1 j2) j3)_j and (j1 (j2 j3))_j channel bases.
struct FMatrix {
    std::vector<Spin> rows;  // admissible j12, ascending
    std::vector<Spin> cols;  // admissible j23, ascending
    std::vector<std::vector<double>> m;

    double at(Spin j12, Spin j23) const;
};

/// Throws SemanticError when either channel set is empty.
FMatrix fMatrix(Spin j1, Spin j2, Spin j3, Spin j, const QContext& ctx);

} // namespace platjones
