// SPDX-License-Identifier: MIT
#include "cubmcf/enumerate.hpp"

#include <cmath>
#include <limits>

namespace cubmcf {

namespace {

constexpr unsigned kBits = 96;

struct Range {
    Int lo, hi;
    bool empty() const { return lo > hi; }
};

Range integer_range(const Ival& v) { return {ceil_rat(v.lo), floor_rat(v.hi)}; }

void intersect(Ival& acc, const Ival& v) {
    if (v.lo > acc.lo) acc.lo = v.lo;
    if (v.hi < acc.hi) acc.hi = v.hi;
}

}  // namespace

void enumerate_box(const Order& o, const std::array<Rat, 3>& lo, const std::array<Rat, 3>& hi,
                   const std::function<bool(const AlgInt&)>& visit) {
    std::array<Ival, 3> R, R2, box;
    for (int i = 0; i < 3; ++i) {
        R[i] = o.root_ival(i, kBits);
        R2[i] = (R[i] * R[i]).trimmed(kBits);
        box[i] = Ival(lo[i], hi[i]).trimmed(kBits);
        if (box[i].lo > box[i].hi) return;
    }

    // v3 = sum_i sigma_i / f'(r_i)
    Ival v3i(Rat(0));
    for (int i = 0; i < 3; ++i) {
        Ival d(Rat(1));
        for (int m = 0; m < 3; ++m)
            if (m != i) d = d * (R[i] - R[m]);
        v3i = v3i + (box[i] / d).trimmed(kBits);
    }
    Range r3 = integer_range(v3i);

    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::array<Ival, 3> gap, gap2, boxdiff;
    for (int t = 0; t < 3; ++t) {
        int i = pairs[t][0], j = pairs[t][1];
        gap[t] = (R[j] - R[i]).trimmed(kBits);
        gap2[t] = (R2[j] - R2[i]).trimmed(kBits);
        boxdiff[t] = box[j] - box[i];
    }

    for (Int v3 = r3.lo; v3 <= r3.hi; ++v3) {
        Rat v3r(v3);
        Ival v2i(Rat(-1), Rat(1));
        bool first = true;
        for (int t = 0; t < 3; ++t) {
            Ival cand = ((boxdiff[t] - v3r * gap2[t]) / gap[t]).trimmed(kBits);
            if (first) v2i = cand, first = false;
            else intersect(v2i, cand);
        }
        Range r2 = integer_range(v2i);
        for (Int v2 = r2.lo; v2 <= r2.hi; ++v2) {
            Rat v2r(v2);
            Ival v1i = box[0] - v2r * R[0] - v3r * R2[0];
            for (int i = 1; i < 3; ++i) intersect(v1i, box[i] - v2r * R[i] - v3r * R2[i]);
            Range r1 = integer_range(v1i);
            for (Int v1 = r1.lo; v1 <= r1.hi; ++v1)
                if (!visit(AlgInt(v1, v2, v3))) return;
        }
    }
}

AlgInt balancing_unit(const Order& o, const AlgInt& x) {
    if (!o.has_units() || x.is_zero()) return AlgInt(1);
    const auto& [u1, u2] = o.units();
    std::array<long double, 3> L1, L2, X;
    long double mean = 0;
    for (int i = 0; i < 3; ++i) {
        L1[i] = o.log_abs(u1, i);
        L2[i] = o.log_abs(u2, i);
        X[i] = o.log_abs(x, i);
        mean += X[i] / 3;
    }
    // least squares for X - mean + k L1 + l L2 = 0
    long double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (int i = 0; i < 3; ++i) {
        a11 += L1[i] * L1[i];
        a12 += L1[i] * L2[i];
        a22 += L2[i] * L2[i];
        b1 -= L1[i] * (X[i] - mean);
        b2 -= L2[i] * (X[i] - mean);
    }
    long double det = a11 * a22 - a12 * a12;
    long k0 = std::lround((b1 * a22 - b2 * a12) / det);
    long l0 = std::lround((a11 * b2 - a12 * b1) / det);

    Signature s1 = o.signature(u1), s2 = o.signature(u2);
    long double best = std::numeric_limits<long double>::infinity();
    UnitDecomposition pick{1, 0, 0};
    for (long k = k0 - 2; k <= k0 + 2; ++k)
        for (long l = l0 - 2; l <= l0 + 2; ++l) {
            Signature s;
            for (int i = 0; i < 3; ++i)
                s.s[i] = (k % 2 != 0 ? s1.s[i] : 1) * (l % 2 != 0 ? s2.s[i] : 1);
            int sign;
            if (s.totally_positive()) sign = 1;
            else if (s.s[0] < 0 && s.s[1] < 0 && s.s[2] < 0) sign = -1;
            else continue;
            long double worst = 0;
            for (int i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(X[i] - mean + k * L1[i] + l * L2[i]));
            if (worst < best) best = worst, pick = {sign, k, l};
        }
    return o.unit_compose(pick, u1, u2);
}

std::optional<Int> associated_rational(const Order& o, const AlgInt& x) {
    if (x.is_zero()) return std::nullopt;
    Int n = abs(o.norm(x));
    Int c;
    mpz_root(c.get_mpz_t(), n.get_mpz_t(), 3);
    if (c * c * c != n) return std::nullopt;
    auto q = o.divide_exact(x, AlgInt(c));
    if (q && o.is_unit(*q)) return c;
    return std::nullopt;
}

}  // namespace cubmcf
