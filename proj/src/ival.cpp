// SPDX-License-Identifier: MIT
#include "cubmcf/ival.hpp"

#include <stdexcept>

namespace cubmcf {

Int floor_div(const Int& n, const Int& d) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int ceil_div(const Int& n, const Int& d) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int floor_rat(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }
Int ceil_rat(const Rat& x) { return ceil_div(x.get_num(), x.get_den()); }

Ival Ival::trimmed(unsigned bits) const {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rat a(floor_rat(lo * scale), scale);
    Rat b(ceil_rat(hi * scale), scale);
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

Ival operator*(const Ival& a, const Ival& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Ival operator/(const Ival& a, const Ival& b) {
    if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an interval containing 0");
    Ival inv{1 / b.hi, 1 / b.lo};
    return a * inv;
}

Rat sqrt_upper(const Rat& x, unsigned bits) {
    if (x < 0) throw std::domain_error("sqrt_upper of a negative number");
    // ceil(sqrt(x * 4^bits)) / 2^bits
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Int n = ceil_rat(x * scale * scale);
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    if (s * s < n) s += 1;
    Rat r(s, scale);
    r.canonicalize();
    return r;
}

}  // namespace cubmcf
