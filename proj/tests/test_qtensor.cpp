/**
 * @file test_qtensor.cpp
 * @brief Unit tests for the q-arithmetic layer.
 *
 * The 6j values are cross-checked three independent ways: frozen
 * hand-evaluated numbers, the Clebsch-Gordan contraction solve
 * (tests/support/recoupling.hpp), and the classical limit at huge k.
 */
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "platjones/errors.hpp"
#include "platjones/qtensor.hpp"
#include "support/recoupling.hpp"

using namespace platjones;
using namespace platjones::testsupport;

namespace {
const Spin s0{0}, sHalf{1}, s1{2}, s3Half{3}, s2{4};
constexpr double kGolden = 1.6180339887498949;  // [2] at k = 5
} // namespace

TEST_CASE("q-integers and quantum dimensions at k=5") {
    QContext ctx(5);
    CHECK(ctx.qInt(0) == 0.0);
    CHECK(ctx.qInt(1) == doctest::Approx(1.0));
    CHECK(ctx.qInt(2) == doctest::Approx(kGolden));
    CHECK(ctx.qInt(3) == doctest::Approx(kGolden));
    CHECK(ctx.qInt(4) == doctest::Approx(1.0));
    CHECK(ctx.qInt(5) == 0.0);   // exact zero at multiples of k
    CHECK(ctx.qInt(10) == 0.0);
    CHECK(ctx.qInt(6) == doctest::Approx(-1.0));
    CHECK(ctx.qFac(0) == 1.0);
    CHECK(ctx.qFac(3) == doctest::Approx(kGolden * kGolden));
    CHECK(ctx.qFac(5) == 0.0);
    CHECK(ctx.qFac(12) == 0.0);
    CHECK(qDim(sHalf, ctx) == doctest::Approx(kGolden));
    CHECK(qDim(s1, ctx) == doctest::Approx(kGolden));
    CHECK(qDim(s0, ctx) == doctest::Approx(1.0));
    CHECK(ctx.maxSpinTwice() == 3);
    CHECK_THROWS_AS(qDim(s2, ctx), SemanticError);
    CHECK_THROWS_AS(QContext(2), SemanticError);
}

TEST_CASE("q power helpers take the principal fractional root") {
    QContext ctx(7);
    CHECK(std::abs(ctx.qPow4(4) - ctx.q()) < 1e-15);
    CHECK(std::abs(ctx.qPow8(8) - ctx.q()) < 1e-15);
    CHECK(std::abs(ctx.qPow4(2) * ctx.qPow4(2) - ctx.q()) < 1e-15);
    CHECK(std::abs(ctx.qPow8(4) - ctx.qPow4(2)) < 1e-15);
    CHECK(std::abs(ctx.qPow4(0) - cplx{1.0, 0.0}) < 1e-15);
    // exp(-2 pi i / (4k)) lies in the lower half plane
    CHECK(ctx.qPow4(1).imag() < 0.0);
}

TEST_CASE("spin parsing and formatting") {
    CHECK(spinFromString("0") == s0);
    CHECK(spinFromString("1/2") == sHalf);
    CHECK(spinFromString("1") == s1);
    CHECK(spinFromString("3/2") == s3Half);
    CHECK(spinToString(sHalf) == "1/2");
    CHECK(spinToString(s1) == "1");
    CHECK(spinToString(s3Half) == "3/2");
    CHECK_THROWS_AS(spinFromString(""), ParseError);
    CHECK_THROWS_AS(spinFromString("1/3"), ParseError);
    CHECK_THROWS_AS(spinFromString("-1"), ParseError);
    CHECK_THROWS_AS(spinFromString("x"), ParseError);
    CHECK_THROWS_AS(spinFromString("1/2x"), ParseError);
}

TEST_CASE("fusion admissibility honours triangle, parity, and level cut") {
    QContext k5(5), k4(4), k3(3);
    CHECK(admissible(sHalf, sHalf, s1, k5));
    CHECK(admissible(sHalf, sHalf, s0, k5));
    CHECK_FALSE(admissible(sHalf, sHalf, sHalf, k5));     // parity
    CHECK_FALSE(admissible(sHalf, s0, s1, k5));           // triangle
    CHECK(admissible(s1, s1, s1, k5));                    // sum 3 = level 3
    CHECK_FALSE(admissible(s1, s1, s1, k4));              // sum 3 > level 2
    CHECK_FALSE(admissible(sHalf, sHalf, s1, k3));        // sum 2 > level 1
    CHECK(admissible(sHalf, sHalf, s0, k3));
}

TEST_CASE("q-Clebsch-Gordan: stretched anchor, singlet pair, selection rules") {
    QContext ctx(5);
    // stretched coefficient is exactly 1 by construction
    CHECK(std::abs(qCG(sHalf, 1, sHalf, 1, s1, 2, ctx) - cplx{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(qCG(sHalf, 1, s1, 2, s3Half, 3, ctx) - cplx{1.0, 0.0}) < 1e-14);
    // singlet inside 1/2 (x) 1/2: (|+-> - q^{-1/2} |-+>) / sqrt([2])
    const double invSqrtD = 1.0 / std::sqrt(kGolden);
    CHECK(std::abs(qCG(sHalf, 1, sHalf, -1, s0, 0, ctx) - invSqrtD) < 1e-14);
    CHECK(std::abs(qCG(sHalf, -1, sHalf, 1, s0, 0, ctx) + ctx.qPow4(-2) * invSqrtD) < 1e-14);
    // selection rules
    CHECK(qCG(sHalf, 1, sHalf, 1, s1, 0, ctx) == cplx{0.0, 0.0});     // m mismatch
    CHECK(qCG(sHalf, 1, sHalf, -1, s1, -2, ctx) == cplx{0.0, 0.0});   // m mismatch, negative side
    CHECK_THROWS_AS(qCG(sHalf, 1, sHalf, 1, s0, 2, ctx), SemanticError);  // |m| > j
    CHECK_THROWS_AS(qCG(s1, 2, s1, 2, s1, 4, ctx), SemanticError);        // |m| > j
    CHECK_THROWS_AS(qCG(sHalf, 3, sHalf, -1, s1, 2, ctx), SemanticError);
    CHECK_THROWS_AS(qCG(sHalf, 0, sHalf, 0, s1, 0, ctx), SemanticError);  // parity
    // inadmissible channel at the level cut
    QContext k3(3);
    CHECK(qCG(sHalf, 1, sHalf, 1, s1, 2, k3) == cplx{0.0, 0.0});
}

TEST_CASE("q-Clebsch-Gordan columns satisfy the defining raising equation") {
    // Delta(J+) |j,m> must reconstruct sqrt([j-m][j+m+1]) |j,m+1>.
    QContext ctx(6);
    const Spin j1 = s1, j2 = s3Half;
    for (int tj = 1; tj <= 5; tj += 2) {
        const Spin j{tj};
        if (!admissible(j1, j2, j, ctx)) continue;
        for (int tm = tj; tm >= -tj + 2; tm -= 2) {
            // coefficients of J+ applied to the (m-1)-row, in the m-row basis
            for (int tm1 = -j1.twice; tm1 <= j1.twice; tm1 += 2) {
                const int tm2 = tm - tm1;
                if (std::abs(tm2) > j2.twice) continue;
                // raise first slot from (m1-1): A+(j1, m1-1) q^{m2/2}
                cplx acc = {0.0, 0.0};
                if (tm1 - 2 >= -j1.twice) {
                    const double a = std::sqrt(ctx.qInt((j1.twice - tm1 + 2) / 2) *
                                               ctx.qInt((j1.twice + tm1) / 2));
                    acc += qCG(j1, tm1 - 2, j2, tm2, j, tm - 2, ctx) * a * ctx.qPow4(tm2);
                }
                if (tm2 - 2 >= -j2.twice) {
                    const double a = std::sqrt(ctx.qInt((j2.twice - tm2 + 2) / 2) *
                                               ctx.qInt((j2.twice + tm2) / 2));
                    acc += qCG(j1, tm1, j2, tm2 - 2, j, tm - 2, ctx) * a * ctx.qPow4(-tm1);
                }
                const double ladder = std::sqrt(ctx.qInt((tj - tm + 2) / 2) * ctx.qInt((tj + tm) / 2));
                const cplx expect = ladder * qCG(j1, tm1, j2, tm2, j, tm, ctx);
                CHECK(std::abs(acc - expect) < 1e-12);
            }
        }
    }
}

TEST_CASE("q-6j frozen values at k=5") {
    QContext ctx(5);
    const double d = kGolden;
    CHECK(qSixJ({sHalf, sHalf, s0, sHalf, sHalf, s0}, ctx) == doctest::Approx(-1.0 / d));
    CHECK(qSixJ({sHalf, sHalf, s0, sHalf, sHalf, s1}, ctx) == doctest::Approx(1.0 / d));
    CHECK(qSixJ({sHalf, sHalf, s1, sHalf, sHalf, s0}, ctx) == doctest::Approx(1.0 / d));
    CHECK(qSixJ({sHalf, sHalf, s1, sHalf, sHalf, s1}, ctx) == doctest::Approx(1.0 / (d * d)));
    // inadmissible triads give zero
    CHECK(qSixJ({sHalf, sHalf, sHalf, sHalf, sHalf, s0}, ctx) == 0.0);
    CHECK(qSixJ({s1, s1, s2, s1, s1, s0}, ctx) == 0.0);  // j12 = 2 over the level cut
}

TEST_CASE("q-6j classical symmetries") {
    QContext ctx(9);
    std::mt19937 rng(20260816u);
    std::uniform_int_distribution<int> pick(0, ctx.maxSpinTwice());
    int found = 0;
    while (found < 40) {
        const QRacahKey key{Spin{pick(rng)}, Spin{pick(rng)}, Spin{pick(rng)},
                            Spin{pick(rng)}, Spin{pick(rng)}, Spin{pick(rng)}};
        const double v = qSixJ(key, ctx);
        if (v == 0.0) continue;
        ++found;
        // column swap {a b e; c d f} -> {b a e; d c f}
        CHECK(qSixJ({key.j2, key.j1, key.j12, key.j, key.j3, key.j23}, ctx) ==
              doctest::Approx(v));
        // flip rows in the first two columns {a b e; c d f} -> {c d e; a b f}
        CHECK(qSixJ({key.j3, key.j, key.j12, key.j1, key.j2, key.j23}, ctx) ==
              doctest::Approx(v));
    }
}

TEST_CASE("q-6j approaches the classical 6j as k grows") {
    QContext huge(4001);
    const std::vector<QRacahKey> keys = {
        {sHalf, sHalf, s0, sHalf, sHalf, s0}, {sHalf, sHalf, s1, sHalf, sHalf, s1},
        {s1, s1, s1, s1, s1, s1},             {s1, s3Half, s3Half, sHalf, s1, s1},
        {s2, s1, s1, s1, s2, s2},             {s3Half, s3Half, s3Half, s3Half, s3Half, s3Half},
    };
    for (const auto& key : keys) {
        const double classical = classicalSixJ(key.j1.twice, key.j2.twice, key.j12.twice,
                                               key.j3.twice, key.j.twice, key.j23.twice);
        CHECK(std::abs(qSixJ(key, huge) - classical) < 1e-4);
    }
}

TEST_CASE("recoupling matrix: golden 2x2 block and orthogonality") {
    QContext ctx(5);
    FMatrix f = fMatrix(sHalf, sHalf, sHalf, sHalf, ctx);
    REQUIRE(f.rows == std::vector<Spin>{s0, s1});
    REQUIRE(f.cols == std::vector<Spin>{s0, s1});
    const double d = kGolden;
    CHECK(f.at(s0, s0) == doctest::Approx(-1.0 / d));
    CHECK(f.at(s0, s1) == doctest::Approx(std::sqrt(d) / d));
    CHECK(f.at(s1, s0) == doctest::Approx(std::sqrt(d) / d));
    CHECK(f.at(s1, s1) == doctest::Approx(1.0 / d));
    // orthogonal with determinant -1
    CHECK(f.m[0][0] * f.m[1][1] - f.m[0][1] * f.m[1][0] == doctest::Approx(-1.0));

    std::mt19937 rng(7u);
    for (int k : {5, 6, 8, 10}) {
        QContext c(k);
        std::uniform_int_distribution<int> pick(0, c.maxSpinTwice());
        int done = 0;
        while (done < 12) {
            Spin a{pick(rng)}, b{pick(rng)}, g{pick(rng)};
            const int parity = (a.twice + b.twice + g.twice) % 2;
            std::vector<Spin> totals;
            for (int t = parity; t <= c.maxSpinTwice(); t += 2) totals.push_back(Spin{t});
            for (Spin j : totals) {
                FMatrix m;
                try {
                    m = fMatrix(a, b, g, j, c);
                } catch (const SemanticError&) {
                    continue;
                }
                REQUIRE(m.rows.size() == m.cols.size());
                const std::size_t n = m.rows.size();
                for (std::size_t r1 = 0; r1 < n; ++r1)
                    for (std::size_t r2 = 0; r2 < n; ++r2) {
                        double dot = 0.0;
                        for (std::size_t cidx = 0; cidx < n; ++cidx) dot += m.m[r1][cidx] * m.m[r2][cidx];
                        CHECK(std::abs(dot - (r1 == r2 ? 1.0 : 0.0)) < 1e-12);
                    }
                ++done;
            }
        }
    }
}

TEST_CASE("normRacah ties the F entry to the bare 6j") {
    QContext ctx(8);
    for (int t12 : {0, 2}) {
        for (int t23 : {0, 2}) {
            const Spin j12{t12}, j23{t23};
            const double nr = normRacah(sHalf, sHalf, sHalf, sHalf, j12, j23, ctx);
            FMatrix f = fMatrix(sHalf, sHalf, sHalf, sHalf, ctx);
            CHECK(f.at(j12, j23) ==
                  doctest::Approx(nr * qDim(j12, ctx) * qDim(j23, ctx)).epsilon(1e-12));
        }
    }
    CHECK(normRacah(sHalf, sHalf, sHalf, sHalf, s2, s0, ctx) == 0.0);
}

TEST_CASE("6j matches the Clebsch-Gordan contraction oracle") {
    // every 4-tuple with spins <= 3/2 at k in {5, 6, 8}
    int tuples = 0, cleanSolves = 0;
    for (int k : {5, 6, 8}) {
        QContext ctx(k);
        const int cap = std::min(3, ctx.maxSpinTwice());
        for (int t1 = 0; t1 <= cap; ++t1)
            for (int t2 = 0; t2 <= cap; ++t2)
                for (int t3 = 0; t3 <= cap; ++t3)
                    for (int tj = (t1 + t2 + t3) % 2; tj <= cap; tj += 2) {
                        const Spin a{t1}, b{t2}, c{t3}, j{tj};
                        FMatrix f;
                        try {
                            f = fMatrix(a, b, c, j, ctx);
                        } catch (const SemanticError&) {
                            continue;
                        }
                        ++tuples;
                        GenericRecoupling gen = genericRecoupling(a, b, c, j, ctx);
                        REQUIRE(gen.rows == f.rows);
                        REQUIRE(gen.cols == f.cols);
                        CHECK(gen.residual < 1e-8);
                        for (std::size_t r = 0; r < gen.rows.size(); ++r)
                            for (std::size_t cc = 0; cc < gen.cols.size(); ++cc)
                                CHECK(std::abs(gen.u[r][cc] - cplx{f.m[r][cc], 0.0}) < 1e-10);
                        // metric-free cross-check where the level cut is inert
                        if (truncationFree(a, b, c, j, ctx)) {
                            ++cleanSolves;
                            RecouplingSolve sol = solveRecoupling(a, b, c, j, ctx);
                            CHECK(sol.residual < 1e-10);
                            for (std::size_t r = 0; r < sol.rows.size(); ++r)
                                for (std::size_t cc = 0; cc < sol.cols.size(); ++cc)
                                    CHECK(std::abs(sol.u[r][cc] - cplx{f.m[r][cc], 0.0}) < 1e-10);
                        }
                    }
    }
    CHECK(tuples > 200);
    CHECK(cleanSolves > 50);
}

TEST_CASE("pentagon coherence of the recoupling family") {
    for (int k : {5, 6, 7}) {
        QContext ctx(k);
        CHECK(pentagonResidual(sHalf, sHalf, sHalf, sHalf, sHalf, ctx) < 1e-10);
        CHECK(pentagonResidual(sHalf, sHalf, sHalf, sHalf, s3Half, ctx) < 1e-10);
        CHECK(pentagonResidual(s1, sHalf, sHalf, s1, s1, ctx) < 1e-10);
        if (k >= 6) CHECK(pentagonResidual(s1, s1, s1, s1, s1, ctx) < 1e-10);
    }
}
