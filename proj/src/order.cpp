// SPDX-License-Identifier: MIT
#include "cubmcf/order.hpp"

#include <cmath>
#include <sstream>

namespace cubmcf {

std::string_view errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::ZeroDivisor: return "ZeroDivisor";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotTotallyReal: return "NotTotallyReal";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::DecompositionNotFound: return "DecompositionNotFound";
        case Errc::NonIntegralTrace: return "NonIntegralTrace";
        case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
        case Errc::BoundViolated: return "BoundViolated";
        case Errc::NotGalois: return "NotGalois";
        case Errc::SignatureMismatch: return "SignatureMismatch";
        case Errc::DegenerateBasis: return "DegenerateBasis";
        case Errc::MissingUnits: return "MissingUnits";
        case Errc::NotPeriodic: return "NotPeriodic";
        case Errc::ZeroPivot: return "ZeroPivot";
        case Errc::NegativeComponent: return "NegativeComponent";
        case Errc::NotTotallyPositive: return "NotTotallyPositive";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

Int pow2(unsigned k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

template <class T>
std::array<T, 3> mul_coords(const std::array<T, 3>& a, const std::array<T, 3>& b, const Int& p,
                            const Int& q, const Int& r) {
    T c0 = a[0] * b[0];
    T c1 = a[0] * b[1] + a[1] * b[0];
    T c2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
    T c3 = a[1] * b[2] + a[2] * b[1];
    T c4 = a[2] * b[2];
    // x^3 = -r - q x - p x^2,  x^4 = pr + (pq - r) x + (p^2 - q) x^2
    return {T(c0 - r * c3 + p * r * c4), T(c1 - q * c3 + (p * q - r) * c4),
            T(c2 - p * c3 + (p * p - q) * c4)};
}

template <class T>
std::array<T, 3> mul_x(const std::array<T, 3>& a, const Int& p, const Int& q, const Int& r) {
    return {T(-r * a[2]), T(a[0] - q * a[2]), T(a[1] - p * a[2])};
}

// Columns of the multiplication-by-a matrix: a, a x, a x^2.
template <class T>
std::array<std::array<T, 3>, 3> mult_matrix(const std::array<T, 3>& a, const Int& p, const Int& q,
                                            const Int& r) {
    auto c1 = mul_x(a, p, q, r);
    auto c2 = mul_x(c1, p, q, r);
    std::array<std::array<T, 3>, 3> m;
    for (int i = 0; i < 3; ++i) {
        m[i][0] = a[i];
        m[i][1] = c1[i];
        m[i][2] = c2[i];
    }
    return m;
}

template <class T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
    return T(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
}

// First column of adj(M): the coordinates of det(M) * a^{-1}.
template <class T>
std::array<T, 3> adj_first_column(const std::array<std::array<T, 3>, 3>& m) {
    return {T(m[1][1] * m[2][2] - m[1][2] * m[2][1]), T(-(m[1][0] * m[2][2] - m[1][2] * m[2][0])),
            T(m[1][0] * m[2][1] - m[1][1] * m[2][0])};
}

void append_term(std::ostringstream& os, const Int& c, const std::string& mono, bool& first) {
    if (c == 0) return;
    if (c > 0 && !first) os << '+';
    if (mono.empty()) {
        os << c;
    } else if (c == 1) {
        os << mono;
    } else if (c == -1) {
        os << '-' << mono;
    } else {
        os << c << '*' << mono;
    }
    first = false;
}

std::size_t hash_mpz(const mpz_t z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
    if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(mpz_sgn(z) + 1);
}

}  // namespace

// ---------------------------------------------------------------- AlgInt

std::string AlgInt::str() const {
    std::ostringstream os;
    os << '[' << c[0] << ", " << c[1] << ", " << c[2] << ']';
    return os.str();
}

std::string AlgInt::poly(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    append_term(os, c[0], "", first);
    append_term(os, c[1], var, first);
    append_term(os, c[2], var + "^2", first);
    if (first) os << '0';
    return os.str();
}

std::size_t AlgIntHash::operator()(const AlgInt& a) const {
    std::size_t h = 0;
    for (const auto& v : a.c) h = h * 1000003u ^ hash_mpz(v.get_mpz_t());
    return h;
}

std::optional<AlgInt> FieldElem::integral() const {
    AlgInt out;
    for (int i = 0; i < 3; ++i) {
        if (c[i].get_den() != 1) return std::nullopt;
        out.c[i] = c[i].get_num();
    }
    return out;
}

std::pair<AlgInt, Int> FieldElem::split() const {
    Int d = 1;
    for (const auto& v : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
    AlgInt n;
    for (int i = 0; i < 3; ++i) n.c[i] = c[i].get_num() * (d / c[i].get_den());
    return {n, d};
}

std::string FieldElem::str() const {
    std::ostringstream os;
    os << '[' << c[0] << ", " << c[1] << ", " << c[2] << ']';
    return os.str();
}

std::size_t FieldElemHash::operator()(const FieldElem& a) const {
    std::size_t h = 0;
    for (const auto& v : a.c)
        h = h * 1000003u ^ hash_mpz(v.get_num_mpz_t()) ^ (hash_mpz(v.get_den_mpz_t()) << 1);
    return h;
}

// ---------------------------------------------------------------- Order

Order::Order(Int p, Int q, Int r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
    if (r_ == 0) throw Error(Errc::NotIrreducible, "x divides " + str());
    Int disc = discriminant();
    if (disc <= 0) throw Error(Errc::NotTotallyReal, "discriminant " + disc.get_str() + " of " + str());

    // Cauchy bound and dyadic points between consecutive roots, taken near the
    // critical points of f.
    Int B = 1 + std::max({abs(p_), abs(q_), abs(r_)});
    Int crit = p_ * p_ - 3 * q_;
    unsigned k = 2;
    Int X1, X2;
    for (;; k *= 2) {
        Int scale = pow2(k);
        Int S;
        Int rad = crit * scale * scale;
        mpz_sqrt(S.get_mpz_t(), rad.get_mpz_t());
        X1 = floor_div(-p_ * scale - S, Int(3));
        X2 = floor_div(-p_ * scale + S, Int(3));
        int s1 = poly_sign_dyadic(X1, k), s2 = poly_sign_dyadic(X2, k);
        if (s1 == 0 || s2 == 0) throw Error(Errc::NotIrreducible, "rational root of " + str());
        if (X1 < X2 && s1 > 0 && s2 < 0) break;
        if (k > 4096) throw Error(Errc::NotTotallyReal, "could not separate roots of " + str());
    }
    unsigned K = 64;
    while (K < k) K *= 2;
    Int up = pow2(K - k);
    std::array<Int, 3> lo{-B * pow2(K), X1 * up, X2 * up};
    std::array<Int, 3> hi{X1 * up, X2 * up, B * pow2(K)};
    Level base{K, {}};
    for (int i = 0; i < 3; ++i) {
        int slo = poly_sign_dyadic(lo[i], K);
        while (hi[i] - lo[i] > 1) {
            Int mid = floor_div(lo[i] + hi[i], Int(2));
            int s = poly_sign_dyadic(mid, K);
            if (s == 0) throw Error(Errc::NotIrreducible, "rational root of " + str());
            (s == slo ? lo[i] : hi[i]) = mid;
        }
        base.lower[i] = lo[i];
    }
    levels_->push_back(base);

    // An integer root would have to sit inside one of the final brackets.
    for (int i = 0; i < 3; ++i) {
        Int n = floor_div(base.lower[i], pow2(K));
        for (Int c = n; c <= n + 1; ++c)
            if (poly_sign_dyadic(c, 0) == 0) throw Error(Errc::NotIrreducible, "integer root " + c.get_str());
    }
}

Int Order::discriminant() const {
    const Int &p = p_, &q = q_, &r = r_;
    return 18 * p * q * r - 4 * p * p * p * r + p * p * q * q - 4 * q * q * q - 27 * r * r;
}

int Order::poly_sign_dyadic(const Int& X, unsigned k) const {
    Int s = pow2(k);
    Int v = X * X * X + p_ * X * X * s + q_ * X * s * s + r_ * s * s * s;
    return sgn(v);
}

Order::Level Order::refine(const Level& from, unsigned k) const {
    Level out{k, {}};
    Int up = pow2(k - from.k);
    for (int i = 0; i < 3; ++i) {
        Int lo = from.lower[i] * up, hi = (from.lower[i] + 1) * up;
        int slo = poly_sign_dyadic(lo, k);
        while (hi - lo > 1) {
            Int mid = floor_div(lo + hi, Int(2));
            int s = poly_sign_dyadic(mid, k);
            (s == slo ? lo : hi) = mid;
        }
        out.lower[i] = lo;
    }
    return out;
}

const Order::Level& Order::level_at_least(unsigned k) const {
    std::lock_guard<std::mutex> lock(*mu_);
    for (const auto& lv : *levels_)
        if (lv.k >= k) return lv;
    while (levels_->back().k < k) levels_->push_back(refine(levels_->back(), levels_->back().k * 2));
    return levels_->back();
}

std::pair<Int, Int> Order::eval_scaled(const AlgInt& a, int i, unsigned k) const {
    const Level& lv = level_at_least(k);
    k = lv.k;
    const Int& L = lv.lower[i];
    Int s = pow2(k);
    Int base = a.c[0] * s * s;
    Int t1 = a.c[1] * s * L, t2 = t1 + a.c[1] * s;
    Int ylo, yhi;
    Int L1 = L + 1;
    if (L >= 0) {
        ylo = L * L;
        yhi = L1 * L1;
    } else if (L1 <= 0) {
        ylo = L1 * L1;
        yhi = L * L;
    } else {
        ylo = 0;
        yhi = 1;
    }
    Int q1 = a.c[2] * ylo, q2 = a.c[2] * yhi;
    Int lo = base + std::min(t1, t2) + std::min(q1, q2);
    Int hi = base + std::max(t1, t2) + std::max(q1, q2);
    return {lo, hi};
}

AlgInt Order::mul(const AlgInt& a, const AlgInt& b) const {
    AlgInt out;
    out.c = mul_coords(a.c, b.c, p_, q_, r_);
    return out;
}

FieldElem Order::mul(const FieldElem& a, const FieldElem& b) const {
    FieldElem out;
    out.c = mul_coords(a.c, b.c, p_, q_, r_);
    for (auto& v : out.c) v.canonicalize();
    return out;
}

AlgInt Order::pow(const AlgInt& a, long k) const {
    AlgInt base = k < 0 ? unit_inverse(a) : a;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    AlgInt acc(1);
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

AlgInt Order::eval_poly(const std::vector<Int>& coeffs, const AlgInt& t) const {
    AlgInt acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = mul(acc, t) + AlgInt(*it);
    return acc;
}

Int Order::trace(const AlgInt& a) const {
    return 3 * a.c[0] - p_ * a.c[1] + (p_ * p_ - 2 * q_) * a.c[2];
}

Rat Order::trace(const FieldElem& a) const {
    Rat t = 3 * a.c[0] - Rat(p_) * a.c[1] + Rat(p_ * p_ - 2 * q_) * a.c[2];
    t.canonicalize();
    return t;
}

Int Order::norm(const AlgInt& a) const { return det3(mult_matrix(a.c, p_, q_, r_)); }

Rat Order::norm(const FieldElem& a) const {
    Rat n = det3(mult_matrix(a.c, p_, q_, r_));
    n.canonicalize();
    return n;
}

AlgInt Order::adjugate(const AlgInt& a) const {
    AlgInt out;
    out.c = adj_first_column(mult_matrix(a.c, p_, q_, r_));
    return out;
}

FieldElem Order::inverse(const FieldElem& a) const {
    if (a.is_zero()) throw Error(Errc::ZeroDivisor, "inverse of 0");
    auto m = mult_matrix(a.c, p_, q_, r_);
    Rat d = det3(m);
    auto adj = adj_first_column(m);
    FieldElem out;
    for (int i = 0; i < 3; ++i) {
        out.c[i] = adj[i] / d;
        out.c[i].canonicalize();
    }
    return out;
}

std::optional<AlgInt> Order::divide_exact(const AlgInt& a, const AlgInt& b) const {
    if (b.is_zero()) throw Error(Errc::ZeroDivisor, "divide_exact by 0");
    Int n = norm(b);
    AlgInt t = mul(a, adjugate(b));
    AlgInt out;
    for (int i = 0; i < 3; ++i) {
        if (!mpz_divisible_p(t.c[i].get_mpz_t(), n.get_mpz_t())) return std::nullopt;
        mpz_divexact(out.c[i].get_mpz_t(), t.c[i].get_mpz_t(), n.get_mpz_t());
    }
    return out;
}

bool Order::is_unit(const AlgInt& a) const {
    Int n = norm(a);
    return n == 1 || n == -1;
}

AlgInt Order::unit_inverse(const AlgInt& u) const {
    Int n = norm(u);
    if (n != 1 && n != -1) throw Error(Errc::NotAUnit, u.str());
    return n * adjugate(u);
}

std::optional<AlgInt> Order::is_associated(const AlgInt& a, const AlgInt& b) const {
    auto q = divide_exact(a, b);
    if (q && is_unit(*q)) return q;
    return std::nullopt;
}

AlgInt Order::fprime() const { return AlgInt(q_, 2 * p_, Int(3)); }

Int Order::codifferent_trace(const AlgInt& num, const AlgInt& a) const {
    FieldElem prod = mul(FieldElem(mul(num, a)), inverse(FieldElem(fprime())));
    Rat t = trace(prod);
    if (t.get_den() != 1) throw Error(Errc::NonIntegralTrace, num.str() + " is not in the codifferent");
    return t.get_num();
}

int Order::sign(const AlgInt& a, int i) const {
    if (a.is_zero()) throw Error(Errc::ZeroElement, "sign of 0");
    if (a.is_rational()) return sgn(a.c[0]);
    for (unsigned k = 64;; k *= 2) {
        auto [lo, hi] = eval_scaled(a, i, k);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
}

int Order::sign(const FieldElem& a, int i) const { return sign(a.split().first, i); }

Signature Order::signature(const AlgInt& a) const {
    return {{sign(a, 0), sign(a, 1), sign(a, 2)}};
}

Signature Order::signature(const FieldElem& a) const { return signature(a.split().first); }

bool Order::totally_positive(const AlgInt& a) const {
    if (a.is_zero()) return false;
    for (int i = 0; i < 3; ++i)
        if (sign(a, i) < 0) return false;
    return true;
}

bool Order::totally_le(const AlgInt& a, const AlgInt& b) const {
    AlgInt d = b - a;
    return d.is_zero() || totally_positive(d);
}

TotalCmp Order::total_order_cmp(const AlgInt& a, const AlgInt& b) const {
    AlgInt d = b - a;
    if (d.is_zero()) return TotalCmp::Equal;
    Signature s = signature(d);
    if (s.totally_positive()) return TotalCmp::Less;
    if (s.s[0] < 0 && s.s[1] < 0 && s.s[2] < 0) return TotalCmp::Greater;
    return TotalCmp::Incomparable;
}

namespace {

// floor(sigma(N) / D) for D > 0 given an oracle for exact signs.
template <class SignFn, class EvalFn>
Int floor_with(const AlgInt& N, const Int& D, SignFn&& sign_of, EvalFn&& eval) {
    if (N.is_rational()) return floor_div(N.c[0], D);
    for (unsigned k = 64;; k *= 2) {
        auto [lo, hi, kk] = eval(k);
        Int s = pow2(2 * kk) * D;
        Int blo = floor_div(lo, s), bhi = floor_div(hi, s);
        if (bhi - blo > 2) continue;
        Int b = blo;
        while (sign_of(N - AlgInt(Int((b + 1) * D))) > 0) ++b;
        return b;
    }
}

}  // namespace

Int Order::floor(const FieldElem& a, int i) const {
    auto [N, D] = a.split();
    return floor_with(
        N, D, [&](const AlgInt& v) { return sign(v, i); },
        [&](unsigned k) {
            auto [lo, hi] = eval_scaled(N, i, k);
            return std::tuple<Int, Int, unsigned>{lo, hi, level_at_least(k).k};
        });
}

Int Order::floor_ratio(const AlgInt& num, const AlgInt& den, int i) const {
    if (den.is_zero()) throw Error(Errc::ZeroDivisor, "floor_ratio by 0");
    AlgInt N = mul(num, adjugate(den));
    Int D = norm(den);
    if (D < 0) {
        N = -N;
        D = -D;
    }
    return floor_with(
        N, D, [&](const AlgInt& v) { return sign(v, i); },
        [&](unsigned k) {
            auto [lo, hi] = eval_scaled(N, i, k);
            return std::tuple<Int, Int, unsigned>{lo, hi, level_at_least(k).k};
        });
}

Ival Order::root_ival(int i, unsigned k) const {
    const Level& lv = level_at_least(k);
    Int s = pow2(lv.k);
    Rat lo(lv.lower[i], s), hi(lv.lower[i] + 1, s);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

Ival Order::embed(const AlgInt& a, int i, unsigned k) const {
    auto [lo, hi] = eval_scaled(a, i, k);
    Int s = pow2(2 * level_at_least(k).k);
    Rat l(lo, s), h(hi, s);
    l.canonicalize();
    h.canonicalize();
    return {l, h};
}

namespace {
long double to_ld(const Int& v, long shift) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(m), static_cast<int>(e - shift));
}
}  // namespace

long double Order::approx(const AlgInt& a, int i) const {
    unsigned k = level_at_least(64).k;
    auto [lo, hi] = eval_scaled(a, i, k);
    return to_ld(lo + hi, 2 * static_cast<long>(k) + 1);
}

long double Order::approx(const FieldElem& a, int i) const {
    auto [N, D] = a.split();
    return approx(N, i) / to_ld(D, 0);
}

long double Order::log_abs(const AlgInt& a, int i) const {
    if (a.is_zero()) throw Error(Errc::ZeroElement, "log of 0");
    for (unsigned k = 64;; k *= 2) {
        auto [lo, hi] = eval_scaled(a, i, k);
        if (sgn(lo) != sgn(hi) || lo == 0) continue;
        Int w = hi - lo;
        Int m = abs(lo);
        if (w * pow2(50) > m) continue;
        long e = 0;
        double mant = mpz_get_d_2exp(&e, m.get_mpz_t());
        unsigned kk = level_at_least(k).k;
        return std::log(static_cast<long double>(mant)) +
               static_cast<long double>(e - 2 * static_cast<long>(kk)) * std::log(2.0L);
    }
}

int Order::root_of_label(const std::string& label) const {
    for (int i = 0; i < 3; ++i)
        if (labels_[i] == label) return i;
    throw Error(Errc::Parse, "unknown root label '" + label + "'");
}

void Order::set_units(const AlgInt& u1, const AlgInt& u2) {
    if (!is_unit(u1) || !is_unit(u2)) throw Error(Errc::NotAUnit, "fundamental unit candidate");
    units_ = std::make_pair(u1, u2);
}

const std::pair<AlgInt, AlgInt>& Order::units() const {
    if (!units_) throw Error(Errc::MissingUnits, "order " + str() + " has no unit data");
    return *units_;
}

UnitDecomposition Order::unit_decompose(const AlgInt& e, long bound) const {
    const auto& [u1, u2] = units();
    return unit_decompose(e, u1, u2, bound);
}

UnitDecomposition Order::unit_decompose(const AlgInt& e, const AlgInt& u1, const AlgInt& u2,
                                        long bound) const {
    if (!is_unit(e)) throw Error(Errc::NotAUnit, e.str());
    if (e == AlgInt(1)) return {1, 0, 0};
    if (e == AlgInt(-1)) return {-1, 0, 0};
    long double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (int i = 0; i < 3; ++i) {
        long double x = log_abs(u1, i), y = log_abs(u2, i), z = log_abs(e, i);
        a11 += x * x;
        a12 += x * y;
        a22 += y * y;
        b1 += x * z;
        b2 += y * z;
    }
    long double det = a11 * a22 - a12 * a12;
    if (std::fabs(det) < 1e-12L) throw Error(Errc::DecompositionNotFound, "unit pair is dependent");
    long double kf = (b1 * a22 - b2 * a12) / det, lf = (a11 * b2 - a12 * b1) / det;
    long k0 = std::lround(kf), l0 = std::lround(lf);
    AlgInt u1i = unit_inverse(u1), u2i = unit_inverse(u2);
    for (long rad = 0; rad <= 3; ++rad) {
        for (long dk = -rad; dk <= rad; ++dk) {
            for (long dl = -rad; dl <= rad; ++dl) {
                if (std::max(std::labs(dk), std::labs(dl)) != rad) continue;
                long k = k0 + dk, l = l0 + dl;
                if (std::labs(k) > bound || std::labs(l) > bound) continue;
                AlgInt t = mul(mul(e, pow(k >= 0 ? u1i : u1, std::labs(k))), pow(l >= 0 ? u2i : u2, std::labs(l)));
                if (t == AlgInt(1)) return {1, k, l};
                if (t == AlgInt(-1)) return {-1, k, l};
            }
        }
    }
    throw Error(Errc::DecompositionNotFound, e.str());
}

AlgInt Order::unit_compose(const UnitDecomposition& d, const AlgInt& u1, const AlgInt& u2) const {
    return Int(d.sign) * mul(pow(u1, d.k), pow(u2, d.l));
}

std::string Order::str() const {
    std::ostringstream os;
    os << "x^3";
    auto term = [&](const Int& c, const char* mono) {
        if (c == 0) return;
        os << (c > 0 ? " + " : " - ");
        Int m = abs(c);
        if (m != 1 || *mono == '\0') os << m;
        os << mono;
    };
    term(p_, "x^2");
    term(q_, "x");
    term(r_, "");
    return os.str();
}

}  // namespace cubmcf
