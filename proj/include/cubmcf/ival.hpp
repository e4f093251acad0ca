// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>

namespace cubmcf {

using Int = mpz_class;
using Rat = mpq_class;

Int floor_div(const Int& n, const Int& d);
Int ceil_div(const Int& n, const Int& d);
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

/// Closed rational interval [lo, hi]. Every operation rounds outward, so the
/// true value of any expression stays inside the computed enclosure.
struct Ival {
    Rat lo, hi;

    Ival() = default;
    Ival(const Rat& a) : lo(a), hi(a) {}
    Ival(const Rat& a, const Rat& b) : lo(a), hi(b) {}

    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    Rat width() const { return hi - lo; }

    /// Widen endpoints onto the dyadic grid 2^-bits to keep numerators small.
    Ival trimmed(unsigned bits) const;

    friend Ival operator+(const Ival& a, const Ival& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Ival operator-(const Ival& a, const Ival& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend Ival operator-(const Ival& a) { return {-a.hi, -a.lo}; }
    friend Ival operator*(const Ival& a, const Ival& b);
    friend Ival operator*(const Rat& s, const Ival& a) {
        return s >= 0 ? Ival{s * a.lo, s * a.hi} : Ival{s * a.hi, s * a.lo};
    }
    /// Division by an interval that excludes zero.
    friend Ival operator/(const Ival& a, const Ival& b);

    static Ival hull(const Ival& a, const Ival& b) {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }
};

/// Upper bound on sqrt(x) for x >= 0, accurate to about 2^-bits relative.
Rat sqrt_upper(const Rat& x, unsigned bits = 40);

}  // namespace cubmcf
