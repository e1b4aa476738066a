/**
 * @file qtensor.cpp
 * @brief q-deformed SU(2) arithmetic at q = exp(-2*pi*i/k).
 */
#include "platjones/qtensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "platjones/errors.hpp"

namespace platjones {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

// ------------------------------------------------------------------ Spin I/O

Spin spinFromString(const std::string& text) {
    if (text.empty()) throw ParseError("empty spin", 0);
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            int whole = std::stoi(text, &used);
            if (used != text.size() || whole < 0)
                throw ParseError("bad spin '" + text + "'", 0);
            return Spin(2 * whole);
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        std::size_t usedN = 0, usedD = 0;
        int p = std::stoi(num, &usedN);
        int q = std::stoi(den, &usedD);
        if (usedN != num.size() || usedD != den.size() || q != 2 || p < 0)
            throw ParseError("bad spin '" + text + "' (use p/2 or an integer)", 0);
        return Spin(p);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad spin '" + text + "'", 0);
    } catch (const std::out_of_range&) {
        throw ParseError("spin out of range '" + text + "'", 0);
    }
}

std::string spinToString(Spin j) {
    if (j.twice % 2 == 0) return std::to_string(j.twice / 2);
    return std::to_string(j.twice) + "/2";
}

// ------------------------------------------------------------------ QContext

QContext::QContext(int k) : k_(k) {
    if (k < 3) throw SemanticError("root index k must be >= 3 (got " + std::to_string(k) + ")");
    q_ = std::polar(1.0, -2.0 * kPi / k);
    const double s1 = std::sin(kPi / k);
    qint_.resize(2 * k + 1);
    qfac_.resize(2 * k + 1);
    qfac_[0] = 1.0;
    for (int n = 0; n <= 2 * k; ++n) {
        qint_[n] = (n % k == 0) ? 0.0 : std::sin(kPi * n / k) / s1;
        if (n > 0) qfac_[n] = (n >= k) ? 0.0 : qfac_[n - 1] * qint_[n];
    }
}

QContext::QContext(const QContext& other)
    : k_(other.k_), q_(other.q_), qint_(other.qint_), qfac_(other.qfac_) {}

double QContext::qInt(int n) const {
    if (n < 0) throw SemanticError("qInt argument must be non-negative");
    if (n < static_cast<int>(qint_.size())) return qint_[n];
    if (n % k_ == 0) return 0.0;
    return std::sin(kPi * n / k_) / std::sin(kPi / k_);
}

double QContext::qFac(int n) const {
    if (n < 0) throw SemanticError("qFac argument must be non-negative");
    if (n >= k_) return 0.0;
    return qfac_[n];
}

cplx QContext::qPow4(long long num4) const {
    return std::polar(1.0, -2.0 * kPi * static_cast<double>(num4) / (4.0 * k_));
}

cplx QContext::qPow8(long long num8) const {
    return std::polar(1.0, -2.0 * kPi * static_cast<double>(num8) / (8.0 * k_));
}

// ------------------------------------------------------- small free wrappers

double qInt(int n, const QContext& ctx) { return ctx.qInt(n); }

double qDim(Spin j, const QContext& ctx) {
    if (!ctx.inRange(j)) throw SemanticError("spin " + spinToString(j) + " out of range at k=" + std::to_string(ctx.k()));
    return ctx.qInt(j.twice + 1);
}

bool admissible(Spin j1, Spin j2, Spin j3, const QContext& ctx) {
    const int a = j1.twice, b = j2.twice, c = j3.twice;
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    if (c < std::abs(a - b) || c > a + b) return false;
    return a + b + c <= 2 * ctx.level();
}

// ----------------------------------------------------------------------- qCG
//
// The coupled family |j,m> inside j1 (x) j2 is built once per channel:
// the highest-weight row solves  Delta(J+) v = 0  with
// Delta(J±) = J± (x) q^{Jz/2} + q^{-Jz/2} (x) J±, anchored at
//   a_{m1=j1} = q^{(j2^2-(j1-j)^2)/2} sqrt([2j+1]! [2j1]! / ([j1+j2+j+1]! [j1-j2+j]!))
// (so the stretched coefficient is exactly 1), and lower rows follow by
// applying Delta(J-) and dividing by sqrt([j+m][j-m+1]).  The anchor phase
// is the one that makes the recoupling of these families real and equal to
// the 6j-based F matrices (contraction identity in the tests).

namespace {

// sqrt([ (t+u)/2 ] [ (t-u)/2 + 1 ]) for doubled spin t, doubled projection u:
// the J- matrix element |t/2, u/2> -> |t/2, u/2 - 1>.
double lowerElem(const QContext& ctx, int twiceJ, int twiceM) {
    return std::sqrt(ctx.qInt((twiceJ + twiceM) / 2) * ctx.qInt((twiceJ - twiceM) / 2 + 1));
}

// Coefficients of |j,m> over |j1,m1>|j2,m-m1>, indexed by doubled m1 offset.
struct ChannelRow {
    int twiceM1Lo = 0;
    std::vector<cplx> a;  // a[(twiceM1 - twiceM1Lo)/2]

    cplx at(int twiceM1) const {
        int idx = (twiceM1 - twiceM1Lo) / 2;
        if (twiceM1 < twiceM1Lo || idx >= static_cast<int>(a.size())) return {0.0, 0.0};
        return a[static_cast<std::size_t>(idx)];
    }
};

ChannelRow highestWeightRow(Spin j1, Spin j2, Spin j, const QContext& ctx) {
    const int t1 = j1.twice, t2 = j2.twice, tj = j.twice;
    ChannelRow row;
    row.twiceM1Lo = std::max(-t1, tj - t2);
    const int n = (t1 - row.twiceM1Lo) / 2 + 1;
    row.a.assign(static_cast<std::size_t>(n), cplx{0.0, 0.0});

    const double anchorMag = std::sqrt(ctx.qFac(tj + 1) * ctx.qFac(t1) /
                                       (ctx.qFac((t1 + t2 + tj) / 2 + 1) * ctx.qFac((t1 - t2 + tj) / 2)));
    const long long phase8 = static_cast<long long>(t2 - t1 + tj) * (t2 + t1 - tj) / 2;
    row.a[static_cast<std::size_t>(n - 1)] = anchorMag * ctx.qPow8(phase8);

    // a_{m1} = -a_{m1+1} q^{-(j+1)/2} sqrt([j2-j+m1+1][j2+j-m1]) / sqrt([j1-m1][j1+m1+1])
    for (int t = t1 - 2; t >= row.twiceM1Lo; t -= 2) {
        const double num = ctx.qInt((t2 - tj + t) / 2 + 1) * ctx.qInt((t2 + tj - t) / 2);
        const double den = ctx.qInt((t1 - t) / 2) * ctx.qInt((t1 + t) / 2 + 1);
        const cplx prev = row.a[static_cast<std::size_t>((t + 2 - row.twiceM1Lo) / 2)];
        row.a[static_cast<std::size_t>((t - row.twiceM1Lo) / 2)] =
            -prev * ctx.qPow4(-(tj + 2)) * std::sqrt(num / den);
    }
    return row;
}

} // namespace

cplx qCG(Spin j1, int twiceM1, Spin j2, int twiceM2, Spin j, int twiceM,
         const QContext& ctx) {
    const int t1 = j1.twice, t2 = j2.twice, tj = j.twice;
    if (std::abs(twiceM1) > t1 || std::abs(twiceM2) > t2 || std::abs(twiceM) > tj)
        throw SemanticError("projection exceeds its spin in qCG");
    if ((t1 + twiceM1) % 2 != 0 || (t2 + twiceM2) % 2 != 0 || (tj + twiceM) % 2 != 0)
        throw SemanticError("projection parity mismatch in qCG");
    if (twiceM1 + twiceM2 != twiceM) return {0.0, 0.0};
    if (!admissible(j1, j2, j, ctx)) return {0.0, 0.0};

    // Full coefficient vector at m = j, then lower to the requested m.
    ChannelRow row = highestWeightRow(j1, j2, j, ctx);
    for (int tm = tj; tm > twiceM; tm -= 2) {
        ChannelRow next;
        next.twiceM1Lo = std::max(-t1, (tm - 2) - t2);
        const int n = (std::min(t1, (tm - 2) + t2) - next.twiceM1Lo) / 2 + 1;
        next.a.assign(static_cast<std::size_t>(n), cplx{0.0, 0.0});
        const double norm = lowerElem(ctx, tj, tm);
        for (int t = row.twiceM1Lo; t <= std::min(t1, tm + t2); t += 2) {
            const cplx c = row.at(t);
            if (c == cplx{0.0, 0.0}) continue;
            const int tm2 = tm - t;
            // J- on the first factor: |m1> -> |m1-1>, weighted by q^{m2/2}.
            if (t - 2 >= next.twiceM1Lo) {
                next.a[static_cast<std::size_t>((t - 2 - next.twiceM1Lo) / 2)] +=
                    c * lowerElem(ctx, t1, t) * ctx.qPow4(tm2) / norm;
            }
            // J- on the second factor: |m2> -> |m2-1>, weighted by q^{-m1/2}.
            if (t >= next.twiceM1Lo && t <= std::min(t1, (tm - 2) + t2)) {
                next.a[static_cast<std::size_t>((t - next.twiceM1Lo) / 2)] +=
                    c * lowerElem(ctx, t2, tm2) * ctx.qPow4(-t) / norm;
            }
        }
        row = std::move(next);
    }
    return row.at(twiceM1);
}

// ---------------------------------------------------------------------- q-6j

namespace {

double triangleDelta(const QContext& ctx, int ta, int tb, int tc) {
    return std::sqrt(ctx.qFac((-ta + tb + tc) / 2) * ctx.qFac((ta - tb + tc) / 2) *
                     ctx.qFac((ta + tb - tc) / 2) / ctx.qFac((ta + tb + tc) / 2 + 1));
}

std::uint64_t packKey(const QRacahKey& key) {
    std::uint64_t v = 0;
    for (int t : {key.j1.twice, key.j2.twice, key.j12.twice, key.j3.twice, key.j.twice, key.j23.twice})
        v = (v << 10) | static_cast<std::uint64_t>(t & 0x3ff);
    return v;
}

} // namespace

double qSixJ(const QRacahKey& key, const QContext& ctx) {
    const int t1 = key.j1.twice, t2 = key.j2.twice, t12 = key.j12.twice;
    const int t3 = key.j3.twice, tj = key.j.twice, t23 = key.j23.twice;
    if (!admissible(key.j1, key.j2, key.j12, ctx) || !admissible(key.j3, key.j, key.j12, ctx) ||
        !admissible(key.j1, key.j, key.j23, ctx) || !admissible(key.j3, key.j2, key.j23, ctx))
        return 0.0;

    const std::uint64_t memoKey = packKey(key);
    {
        std::lock_guard<std::mutex> lock(ctx.memoMutex_);
        auto it = ctx.sixjMemo_.find(memoKey);
        if (it != ctx.sixjMemo_.end()) return it->second;
    }

    // Triad sums and opposite-pair sums (plain integers).
    const int T1 = (t1 + t2 + t12) / 2, T2 = (t3 + tj + t12) / 2;
    const int T3 = (t1 + tj + t23) / 2, T4 = (t3 + t2 + t23) / 2;
    const int Q1 = (t1 + t2 + t3 + tj) / 2, Q2 = (t2 + t12 + tj + t23) / 2, Q3 = (t1 + t12 + t3 + t23) / 2;

    const double delta = triangleDelta(ctx, t1, t2, t12) * triangleDelta(ctx, t3, tj, t12) *
                         triangleDelta(ctx, t1, tj, t23) * triangleDelta(ctx, t3, t2, t23);

    const int zLo = std::max({T1, T2, T3, T4});
    const int zHi = std::min({Q1, Q2, Q3, ctx.k() - 2});  // [z+1]! vanishes past k-2
    double sum = 0.0;
    for (int z = zLo; z <= zHi; ++z) {
        const double den = ctx.qFac(z - T1) * ctx.qFac(z - T2) * ctx.qFac(z - T3) * ctx.qFac(z - T4) *
                           ctx.qFac(Q1 - z) * ctx.qFac(Q2 - z) * ctx.qFac(Q3 - z);
        const double term = ctx.qFac(z + 1) / den;
        sum += (z % 2 == 0) ? term : -term;
    }
    const double result = delta * sum;

    std::lock_guard<std::mutex> lock(ctx.memoMutex_);
    ctx.sixjMemo_.emplace(memoKey, result);
    return result;
}

double normRacah(Spin j1, Spin j2, Spin j3, Spin j, Spin j12, Spin j23,
                 const QContext& ctx) {
    if (!admissible(j1, j2, j12, ctx) || !admissible(j12, j3, j, ctx) ||
        !admissible(j2, j3, j23, ctx) || !admissible(j1, j23, j, ctx))
        return 0.0;
    const int phase = ((j1.twice + j2.twice + j3.twice + j.twice) / 2) % 2;
    const double w = (phase ? -1.0 : 1.0) * qSixJ({j1, j2, j12, j3, j, j23}, ctx);
    return w / std::sqrt(qDim(j12, ctx) * qDim(j23, ctx));
}

// ------------------------------------------------------------------- FMatrix

double FMatrix::at(Spin j12, Spin j23) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (rows[r] == j12 && cols[c] == j23) return m[r][c];
    return 0.0;
}

FMatrix fMatrix(Spin j1, Spin j2, Spin j3, Spin j, const QContext& ctx) {
    FMatrix f;
    for (int t = 0; t <= ctx.maxSpinTwice(); ++t) {
        Spin cand{t};
        if (admissible(j1, j2, cand, ctx) && admissible(cand, j3, j, ctx)) f.rows.push_back(cand);
        if (admissible(j2, j3, cand, ctx) && admissible(j1, cand, j, ctx)) f.cols.push_back(cand);
    }
    if (f.rows.empty() || f.cols.empty())
        throw SemanticError("no admissible recoupling channels for (" + spinToString(j1) + "," +
                            spinToString(j2) + "," + spinToString(j3) + ";" + spinToString(j) + ")");
    const int phase = ((j1.twice + j2.twice + j3.twice + j.twice) / 2) % 2;
    const double sign = phase ? -1.0 : 1.0;
    f.m.assign(f.rows.size(), std::vector<double>(f.cols.size(), 0.0));
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        for (std::size_t c = 0; c < f.cols.size(); ++c)
            f.m[r][c] = std::sqrt(qDim(f.rows[r], ctx) * qDim(f.cols[c], ctx)) * sign *
                        qSixJ({j1, j2, f.rows[r], j3, j, f.cols[c]}, ctx);
    return f;
}

} // namespace platjones
