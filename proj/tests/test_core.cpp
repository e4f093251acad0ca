#include <doctest.h>

#include <random>

#include "cubmcf/families.hpp"
#include "oracle.hpp"

using namespace cubmcf;

namespace {
// Ennola I root indices in label order (rho, rho', rho'') -> ascending index.
constexpr int RHO = 2, RHO1 = 1, RHO2 = 0;

std::array<int, 3> label_order(const Signature& s) { return {s.s[RHO], s.s[RHO1], s.s[RHO2]}; }
}  // namespace

TEST_CASE("multiplication reduces by the minimal polynomial") {
    for (long a = 3; a <= 12; ++a) {
        Order o = construct(FamilyId::ennola1(a));
        AlgInt x = AlgInt::x(), x2 = AlgInt::of(0, 0, 1);
        CHECK(o.mul(AlgInt(1), x2) == x2);
        CHECK(o.mul(x, x2) == AlgInt::of(1, a, -(a - 1)));
        // rho (rho - 1) has characteristic polynomial x^3 - (a^2+a) x^2 + (2a+1) x - 1
        AlgInt u = o.mul(x, x - AlgInt(1));
        Int tr = o.trace(u), e2 = (tr * tr - o.trace(o.sqr(u))) / 2;
        CHECK(tr == a * a + a);
        CHECK(e2 == 2 * a + 1);
        CHECK(o.norm(u) == 1);
    }
}

TEST_CASE("trace and norm closed forms") {
    for (long a = 3; a <= 15; ++a) {
        Order o = construct(FamilyId::ennola1(a));
        CHECK(o.trace(AlgInt(1)) == 3);
        CHECK(o.norm(AlgInt(1)) == 1);
        CHECK(o.trace(AlgInt::x()) == -(a - 1));
        AlgInt g = AlgInt::of(a * a - 3 * a + 11, -(a * a - 5 * a + 1), -(a - 5));
        CHECK(o.trace(g) == 2 * a * a - 4 * a + 37);
        CHECK(o.norm(AlgInt::of(-1, 0, 1)) == -(2 * a - 3));
        for (long s = -4; s <= a + 3; ++s) {
            Int expect = 2 * a * a + 2 * a + 1 + (a * a - 3 * a - 2) * s - (2 * a - 1) * s * s + s * s * s;
            CHECK(o.norm(AlgInt::of(1, s, 1)) == expect);
        }
    }
}

TEST_CASE("trace and norm agree with numeric embeddings") {
    std::mt19937_64 g(7);
    for (auto f : {FamilyId::ennola1(4), FamilyId::simplest(3), FamilyId::ennola2(6), FamilyId::ab(2, 5)}) {
        Order o = construct(f);
        auto rt = oracle::roots(o);
        for (int t = 0; t < 50; ++t) {
            AlgInt x = oracle::random_elem(g, 30);
            long double s = 0, n = 1;
            for (auto r : rt) {
                long double v = oracle::value(x, r);
                s += v;
                n *= v;
            }
            CHECK(std::fabs(o.trace(x).get_d() - s) < 1e-6L * (1 + std::fabs(s)));
            CHECK(std::fabs(o.norm(x).get_d() - n) < 1e-6L * (1 + std::fabs(n)));
            for (int i = 0; i < 3 && !x.is_zero(); ++i) {
                long double v = oracle::value(x, rt[i]);
                if (std::fabs(v) > 1e-9L) CHECK(o.sign(x, i) == (v > 0 ? 1 : -1));
            }
        }
    }
}

TEST_CASE("ring properties on random elements") {
    std::mt19937_64 g(11);
    Order o = construct(FamilyId::simplest(5));
    for (int t = 0; t < 200; ++t) {
        AlgInt a = oracle::random_elem(g, 50), b = oracle::random_elem(g, 50), c = oracle::random_elem(g, 50);
        CHECK(o.mul(a, b) == o.mul(b, a));
        CHECK(o.mul(o.mul(a, b), c) == o.mul(a, o.mul(b, c)));
        CHECK(o.norm(o.mul(a, b)) == o.norm(a) * o.norm(b));
        CHECK(o.trace(a + b) == o.trace(a) + o.trace(b));
        if (!b.is_zero()) CHECK(o.divide_exact(o.mul(a, b), b) == a);
        if (!a.is_zero() && !b.is_zero()) CHECK(o.signature(o.mul(a, b)) == o.signature(a) * o.signature(b));
    }
}

TEST_CASE("signatures in label order") {
    Order o = construct(FamilyId::ennola1(5));
    CHECK(label_order(o.signature(AlgInt(1))) == std::array<int, 3>{1, 1, 1});
    CHECK(label_order(o.signature(AlgInt::x())) == std::array<int, 3>{1, -1, -1});
    CHECK(label_order(o.signature(AlgInt::of(-1, 0, 1))) == std::array<int, 3>{1, -1, 1});
    CHECK_THROWS_AS(o.sign(AlgInt(0), 0), Error);
}

TEST_CASE("total order comparisons") {
    Order o5 = construct(FamilyId::ennola1(5));
    AlgInt g = AlgInt::of(21, -1, 0);
    CHECK(o5.totally_le(g, g));
    CHECK(o5.totally_le(AlgInt(1), g));
    CHECK(o5.total_order_cmp(AlgInt(1), g) == TotalCmp::Less);
    for (long a = 6; a <= 12; ++a) {
        Order o = construct(FamilyId::ennola1(a));
        AlgInt gamma = AlgInt::of(a * a - 3 * a + 11, -(a * a - 5 * a + 1), -(a - 5));
        AlgInt x2 = AlgInt::of(0, 0, 1);
        CHECK_FALSE(o.totally_le(x2, gamma));
        CHECK(o.sign(gamma - x2, RHO2) < 0);
    }
}

TEST_CASE("exact division and units") {
    for (long a = 5; a <= 12; ++a) {
        Order o = construct(FamilyId::ennola2(a));
        auto q = o.divide_exact(AlgInt(1), AlgInt::of(0, -1, 0));
        REQUIRE(q);
        CHECK(*q == AlgInt::of(a, a - 1, -1));
    }
    Order e = construct(FamilyId::ennola1(4));
    AlgInt x = AlgInt::x();
    CHECK(e.divide_exact(AlgInt::of(1, 2, 3), AlgInt(1)) == AlgInt::of(1, 2, 3));
    // x is a unit here, so 2/x is integral; -1+x^2 has odd norm -(2a-3)
    CHECK(e.divide_exact(AlgInt(2), x) == Int(2) * e.unit_inverse(x));
    CHECK_FALSE(e.divide_exact(AlgInt(2), AlgInt::of(-1, 0, 1)).has_value());
    CHECK_THROWS_AS(e.divide_exact(AlgInt(1), AlgInt(0)), Error);
    CHECK(e.is_unit(AlgInt(1)));
    CHECK(e.is_unit(x - AlgInt(1)));
    CHECK_FALSE(e.is_unit(AlgInt::of(-1, 0, 1)));
    CHECK(e.is_associated(AlgInt::of(3, 1, 4), AlgInt::of(3, 1, 4)) == AlgInt(1));
    CHECK_FALSE(e.is_associated(AlgInt(1), AlgInt::of(-1, 0, 1)).has_value());
}

TEST_CASE("unit decomposition round trip") {
    Order o = construct(FamilyId::ennola1(4));
    AlgInt r = AlgInt::x(), r1 = AlgInt::of(-1, 1, 0);
    auto d = o.unit_decompose(o.mul(o.sqr(r), r1));
    CHECK(d.sign == 1);
    CHECK(d.k == 2);
    CHECK(d.l == 1);
    CHECK(o.unit_decompose(AlgInt(1)).k == 0);
    CHECK_THROWS_AS(o.unit_decompose(AlgInt(2)), Error);
    for (long k = -6; k <= 6; k += 3)
        for (long l = -5; l <= 5; l += 2)
            for (int s : {1, -1}) {
                AlgInt u = o.unit_compose({s, k, l}, r, r1);
                auto got = o.unit_decompose(u);
                CHECK(got.sign == s);
                CHECK(got.k == k);
                CHECK(got.l == l);
                CHECK(o.unit_compose(got, r, r1) == u);
            }
}

TEST_CASE("codifferent traces") {
    std::mt19937_64 g(3);
    for (long a = 3; a <= 9; ++a) {
        Order o = construct(FamilyId::ennola1(a));
        for (int t = 0; t < 20; ++t) {
            AlgInt v = oracle::random_elem(g, 100);
            CHECK(o.codifferent_trace(AlgInt::of(a, 1, 0), v) == v[1] + v[2]);
            CHECK(o.codifferent_trace(AlgInt(1), v) == v[2]);
        }
        CHECK(o.codifferent_trace(AlgInt(1), AlgInt(0)) == 0);
    }
}

TEST_CASE("floor ratios") {
    for (long a = 3; a <= 10; ++a) {
        Order o = construct(FamilyId::ennola1(a));
        AlgInt x = AlgInt::x();
        CHECK(o.floor_ratio(x, x, RHO) == 1);
        CHECK(o.floor_ratio(AlgInt::of(-1, 0, 1), AlgInt::of(-1, 1, 0), RHO) == 2);
        CHECK(o.floor_ratio(AlgInt(1), AlgInt::of(-1, 1, 0), RHO) == a + 2);
    }
    for (long a = 5; a <= 10; ++a) {
        Order o = construct(FamilyId::ennola2(a));
        CHECK(o.floor_ratio(AlgInt::x(), AlgInt(1), 2) == a);
        CHECK(o.floor_ratio(AlgInt::of(0, 0, 1), AlgInt(1), 2) == a * a);
    }
}

TEST_CASE("irreducibility and total reality are enforced") {
    CHECK_THROWS_AS(Order(Int(0), Int(-1), Int(0)), Error);          // x^3 - x
    CHECK_THROWS_AS(Order(Int(-6), Int(11), Int(-6)), Error);        // (x-1)(x-2)(x-3)
    CHECK_THROWS_AS(Order(Int(0), Int(0), Int(-2)), Error);          // one real root
    CHECK_NOTHROW(Order(Int(0), Int(-3), Int(1)));
}
