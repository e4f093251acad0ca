// SPDX-License-Identifier: MIT
//
// Arithmetic in a monogenic cubic order Z[x]/(x^3 + p x^2 + q x + r) whose
// defining polynomial has three real roots. Elements are stored in the power
// basis; every sign, floor and comparison is decided exactly by refining the
// isolating intervals of the roots.
#pragma once

#include <array>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cubmcf/errors.hpp"
#include "cubmcf/ival.hpp"

namespace cubmcf {

struct AlgInt {
    std::array<Int, 3> c{};

    AlgInt() = default;
    AlgInt(long v) : c{Int(v), Int(0), Int(0)} {}
    AlgInt(const Int& v) : c{v, Int(0), Int(0)} {}
    AlgInt(Int a, Int b, Int d) : c{std::move(a), std::move(b), std::move(d)} {}
    static AlgInt of(long a, long b, long d) { return AlgInt(Int(a), Int(b), Int(d)); }
    static AlgInt x() { return of(0, 1, 0); }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0; }
    const Int& operator[](int i) const { return c[i]; }
    Int& operator[](int i) { return c[i]; }

    AlgInt& operator+=(const AlgInt& o) { for (int i = 0; i < 3; ++i) c[i] += o.c[i]; return *this; }
    AlgInt& operator-=(const AlgInt& o) { for (int i = 0; i < 3; ++i) c[i] -= o.c[i]; return *this; }
    friend AlgInt operator+(AlgInt a, const AlgInt& b) { return a += b; }
    friend AlgInt operator-(AlgInt a, const AlgInt& b) { return a -= b; }
    friend AlgInt operator-(const AlgInt& a) { return AlgInt(-a.c[0], -a.c[1], -a.c[2]); }
    friend AlgInt operator*(const Int& s, const AlgInt& a) { return AlgInt(s * a.c[0], s * a.c[1], s * a.c[2]); }
    friend bool operator==(const AlgInt& a, const AlgInt& b) { return a.c == b.c; }
    friend bool operator<(const AlgInt& a, const AlgInt& b) { return a.c < b.c; }

    /// "[v1, v2, v3]"
    std::string str() const;
    /// Human form in the variable `var`, e.g. "-1+rho^2".
    std::string poly(const std::string& var = "x") const;
};

struct AlgIntHash {
    std::size_t operator()(const AlgInt& a) const;
};

/// Field element with rational power-basis coordinates.
struct FieldElem {
    std::array<Rat, 3> c{};

    FieldElem() = default;
    FieldElem(const AlgInt& a) : c{Rat(a.c[0]), Rat(a.c[1]), Rat(a.c[2])} {}
    FieldElem(Rat a, Rat b, Rat d) : c{std::move(a), std::move(b), std::move(d)} {}

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0; }
    /// Some(AlgInt) when every coordinate is integral.
    std::optional<AlgInt> integral() const;
    /// Split as numerator / denominator with a positive integer denominator.
    std::pair<AlgInt, Int> split() const;

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { for (int i = 0; i < 3; ++i) a.c[i] += b.c[i]; return a; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { for (int i = 0; i < 3; ++i) a.c[i] -= b.c[i]; return a; }
    friend FieldElem operator*(const Rat& s, FieldElem a) { for (auto& v : a.c) v *= s; return a; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c == b.c; }
    std::string str() const;
};

struct FieldElemHash {
    std::size_t operator()(const FieldElem& a) const;
};

/// Signs of an element indexed by ascending root index; entries are +1 or -1.
struct Signature {
    std::array<int, 3> s{1, 1, 1};
    friend bool operator==(const Signature&, const Signature&) = default;
    Signature operator*(const Signature& o) const { return {{s[0] * o.s[0], s[1] * o.s[1], s[2] * o.s[2]}}; }
    bool totally_positive() const { return s[0] > 0 && s[1] > 0 && s[2] > 0; }
};

enum class TotalCmp { Less, LessEq, Greater, GreaterEq, Equal, Incomparable };

/// e = sign * u1^k * u2^l
struct UnitDecomposition {
    int sign;
    long k, l;
};

class Order {
public:
    /// Throws NotIrreducible or NotTotallyReal.
    Order(Int p, Int q, Int r);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    Int discriminant() const;

    // -- ring operations
    AlgInt mul(const AlgInt& a, const AlgInt& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    AlgInt sqr(const AlgInt& a) const { return mul(a, a); }
    AlgInt pow(const AlgInt& a, long k) const;
    AlgInt eval_poly(const std::vector<Int>& coeffs_low_first, const AlgInt& t) const;
    Int trace(const AlgInt& a) const;
    Rat trace(const FieldElem& a) const;
    Int norm(const AlgInt& a) const;
    Rat norm(const FieldElem& a) const;
    /// a^{-1} * norm(a), an element of the order.
    AlgInt adjugate(const AlgInt& a) const;
    FieldElem inverse(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inverse(b)); }
    /// Exact quotient inside the order, or nullopt (NotDivisible). Throws ZeroDivisor.
    std::optional<AlgInt> divide_exact(const AlgInt& a, const AlgInt& b) const;
    bool is_unit(const AlgInt& a) const;
    AlgInt unit_inverse(const AlgInt& u) const;
    /// Unit e with a = e * b, or nullopt. Throws ZeroDivisor.
    std::optional<AlgInt> is_associated(const AlgInt& a, const AlgInt& b) const;
    /// f'(x) as an element.
    AlgInt fprime() const;
    /// Tr(a * num / f'(x)); throws NonIntegralTrace.
    Int codifferent_trace(const AlgInt& num, const AlgInt& a) const;

    // -- embeddings
    /// Sign of sigma_i(a), i ascending root index. Throws ZeroElement.
    int sign(const AlgInt& a, int i) const;
    int sign(const FieldElem& a, int i) const;
    Signature signature(const AlgInt& a) const;
    Signature signature(const FieldElem& a) const;
    bool totally_positive(const AlgInt& a) const;
    /// True when b - a is totally nonnegative.
    bool totally_le(const AlgInt& a, const AlgInt& b) const;
    TotalCmp total_order_cmp(const AlgInt& a, const AlgInt& b) const;
    /// floor(sigma_i(num / den)).
    Int floor_ratio(const AlgInt& num, const AlgInt& den, int i) const;
    Int floor(const FieldElem& a, int i) const;
    /// Rational enclosure of the i-th root with width 2^-k.
    Ival root_ival(int i, unsigned k = 64) const;
    Ival embed(const AlgInt& a, int i, unsigned k = 64) const;
    long double approx(const AlgInt& a, int i) const;
    long double approx(const FieldElem& a, int i) const;
    /// log|sigma_i(a)| to roughly 50 bits of relative accuracy.
    long double log_abs(const AlgInt& a, int i) const;

    // -- labels and units
    void set_labels(std::array<std::string, 3> labels_by_root) { labels_ = std::move(labels_by_root); }
    const std::array<std::string, 3>& labels() const { return labels_; }
    /// Ascending root index for a label; throws Parse if unknown.
    int root_of_label(const std::string& label) const;
    void set_units(const AlgInt& u1, const AlgInt& u2);
    bool has_units() const { return units_.has_value(); }
    const std::pair<AlgInt, AlgInt>& units() const;
    /// e = sign * u1^k * u2^l for the given (or attached) unit pair.
    UnitDecomposition unit_decompose(const AlgInt& e, long bound = 64) const;
    UnitDecomposition unit_decompose(const AlgInt& e, const AlgInt& u1, const AlgInt& u2,
                                     long bound = 64) const;
    AlgInt unit_compose(const UnitDecomposition& d, const AlgInt& u1, const AlgInt& u2) const;

    std::string str() const;

private:
    struct Level {
        unsigned k;
        std::array<Int, 3> lower;  // root i in [lower/2^k, (lower+1)/2^k]
    };

    const Level& level_at_least(unsigned k) const;
    Level refine(const Level& from, unsigned k) const;
    int poly_sign_dyadic(const Int& X, unsigned k) const;
    std::pair<Int, Int> eval_scaled(const AlgInt& a, int i, unsigned k) const;

    Int p_, q_, r_;
    std::array<std::string, 3> labels_{"t0", "t1", "t2"};
    std::optional<std::pair<AlgInt, AlgInt>> units_;
    std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
    std::shared_ptr<std::deque<Level>> levels_ = std::make_shared<std::deque<Level>>();
};

}  // namespace cubmcf
