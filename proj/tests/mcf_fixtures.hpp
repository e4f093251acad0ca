// Closed-form JPA and iJPA expansions for the simplest cubic and Ennola
// families, used by the unit tests and the acceptance runner.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubmcf/families.hpp"
#include "cubmcf/mcf.hpp"

namespace fixtures {

using cubmcf::AlgInt;
using cubmcf::FieldElem;
using cubmcf::FieldPair;
using cubmcf::Order;
using cubmcf::Rat;
using cubmcf::Triple;

inline AlgInt P(long c0, long c1, long c2) { return AlgInt::of(c0, c1, c2); }
inline FieldElem Q(long c0, long c1, long c2, long den) {
    FieldElem f(Rat(c0, den), Rat(c1, den), Rat(c2, den));
    for (auto& v : f.c) v.canonicalize();
    return f;
}

struct JpaExpected {
    std::string name;
    Order order;
    int track;
    Triple beta;
    long l0, l1;
    std::vector<Triple> states;
    std::vector<std::pair<long, long>> digits;
};

struct IjpaExpected {
    std::string name;
    Order order;
    int track;
    FieldPair theta;
    long l0, l1;
    std::vector<FieldPair> states;
    std::vector<std::pair<long, long>> digits;
};

inline JpaExpected make_jpa(std::string name, const Order& o, const std::string& root, int sign, long l0, long l1,
                            std::vector<Triple> states, std::vector<std::pair<long, long>> digits) {
    Triple beta{AlgInt(1), sign * AlgInt::x(), P(0, 0, 1)};
    return {std::move(name), o, o.root_of_label(root), beta, l0, l1, std::move(states), std::move(digits)};
}

inline std::vector<JpaExpected> ennola1_expansions(long a) {
    Order o = cubmcf::construct(cubmcf::FamilyId::ennola1(a));
    std::vector<JpaExpected> out;
    out.push_back(make_jpa("(1, rho, rho^2)", o, "rho", 1, 2, 2,
                           {{P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)},
                            {P(-1, 1, 0), P(-1, 0, 1), P(1, 0, 0)},
                            {P(1, -2, 1), P(a + 3, -(a + 2), 0), P(-1, 1, 0)},
                            {P(a + 3, -(a + 2), 0), P(-(a + 3), 2 * a + 5, -(a + 2)), P(1, -2, 1)}},
                           {{1, 1}, {2, a + 2}, {0, a + 2}, {0, a + 3}}));
    AlgInt b6a = P(a - 2, a * a - 2 * a - 1, -(a * a - 2 * a + 2));
    AlgInt b7b = P(-2, -(2 * a + 1), a - 3);
    AlgInt b8b = P(-a + 3, -(a * a - 3 * a - 2), a * a - 2 * a + 4);
    out.push_back(make_jpa("(1, -rho', rho'^2)", o, "rho'", -1, 3, 7,
                           {{P(1, 0, 0), P(0, -1, 0), P(0, 0, 1)},
                            {P(0, -1, 0), P(0, 0, 1), P(1, 0, 0)},
                            {P(0, 0, 1), P(1, a, 0), P(0, -1, 0)},
                            {P(1, a, -(a - 2)), P(0, -1, -a), P(0, 0, 1)},
                            {P(0, -1, -a), P(-1, -a, a - 1), P(1, a, -(a - 2))},
                            {P(-1, -a, a - 1), P(1, a + 1, 2), P(0, -1, -a)},
                            {P(1, a + 1, 2), b6a, P(-1, -a, a - 1)},
                            {b6a, b7b, P(1, a + 1, 2)},
                            {b7b, b8b, b6a},
                            {b8b, P(3 * a - 2, 3 * a * a - a - 1, -(2 * a * a - 5 * a + 2)), b7b}},
                           {{0, 0}, {0, a}, {a - 2, a}, {0, 1}, {0, 1}, {0, a - 2}, {0, 1}, {0, 1}, {0, a}, {a - 3, a}}));
    out.push_back(make_jpa("(1, -rho'', rho''^2)", o, "rho''", -1, 1, 3,
                           {{P(1, 0, 0), P(0, -1, 0), P(0, 0, 1)},
                            {P(-a + 1, -1, 0), P(-a * a + 1, 0, 1), P(1, 0, 0)},
                            {P(-a * a + 1, 0, 1), P(a, 1, 0), P(-a + 1, -1, 0)},
                            {P(a, 1, 0), P(a * a - a, -1, -1), P(-a * a + 1, 0, 1)}},
                           {{a - 1, a * a - 1}, {0, 1}, {0, 1}, {2 * a - 2, a * a - a - 1}}));
    return out;
}

inline std::vector<JpaExpected> ennola2_expansions(long a) {
    Order o = cubmcf::construct(cubmcf::FamilyId::ennola2(a));
    std::vector<JpaExpected> out;
    out.push_back(make_jpa("(1, psi, psi^2)", o, "psi", 1, 2, 1,
                           {{P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)},
                            {P(-a, 1, 0), P(-a * a, 0, 1), P(1, 0, 0)},
                            {P(a * a, -2 * a, 1), P(a * a * a + a * a + 1, -(a * a + a), 0), P(-a, 1, 0)}},
                           {{a, a * a}, {2 * a, a * a + a}, {2 * a + 1, a * a + a}}));
    AlgInt s4b = P(-a + 3, -(a - 3), 1);
    AlgInt s6b = P(a - 3, a - 4, -2);
    AlgInt s7b = P(-2 * a + 5, -(3 * a - 7), -(a - 3));
    AlgInt s8a = P(-a * a + 6 * a - 10, -(a * a - 6 * a + 13), a - 7);
    AlgInt s8b = P(-a * a + 5 * a - 5, -(a * a - 6 * a + 6), 2 * a - 3);
    AlgInt s9b = P(a * a - 5 * a + 7, a * a - 5 * a + 9, -(a - 5));
    out.push_back(make_jpa("(1, -psi', psi'^2)", o, "psi'", -1, 4, 7,
                           {{P(1, 0, 0), P(0, -1, 0), P(0, 0, 1)},
                            {P(0, -1, 0), P(0, 0, 1), P(1, 0, 0)},
                            {P(0, 0, 1), P(1, 1, 0), P(0, -1, 0)},
                            {P(1, 1, 0), P(0, -1, -1), P(0, 0, 1)},
                            {P(0, -1, -1), s4b, P(1, 1, 0)},
                            {s4b, P(1, 2, 1), P(0, -1, -1)},
                            {P(1, 2, 1), s6b, s4b},
                            {s6b, s7b, P(1, 2, 1)},
                            {s8a, s8b, s6b},
                            {s8b, s9b, s8a},
                            {s9b, P(a - 5, -7, -(a + 4)), s8b}},
                           {{0, 0}, {0, 1}, {0, 1}, {0, a - 3}, {0, 1}, {0, 1}, {0, a - 2}, {a - 5, a - 2}, {0, 1}, {0, 1},
                            {0, a - 4}}));
    out.push_back(make_jpa("(1, -psi'', psi''^2)", o, "psi''", -1, 3, 3,
                           {{P(1, 0, 0), P(0, -1, 0), P(0, 0, 1)},
                            {P(0, -1, 0), P(0, 0, 1), P(1, 0, 0)},
                            {P(0, 0, 1), P(1, a - 2, 0), P(0, -1, 0)},
                            {P(1, a - 2, -(a - 2)), P(0, -1, -(a - 2)), P(0, 0, 1)},
                            {P(-1, -(a - 1), 0), P(-1, -(a - 2), a - 1), P(1, a - 2, -(a - 2))},
                            {P(0, 1, a - 1), P(a - 3, a * a - 4 * a + 2, -(a - 2)), P(-1, -(a - 1), 0)}},
                           {{0, 0}, {0, a - 2}, {a - 2, a - 2}, {1, 1}, {1, a - 4}, {a - 3, a - 2}}));
    return out;
}

inline std::vector<std::pair<long, long>> simplest_digits(long a);

inline JpaExpected simplest_jpa(long a) {
    Order o = cubmcf::construct(cubmcf::FamilyId::simplest(a));
    long A = a / 2;
    AlgInt b3a = P(a + 1, a - 1, -1);
    AlgInt b4a = P(-(a + 2), -(2 * a + 3), -(a + 1));
    AlgInt b5a = P(-a, -(a - 3), 2);
    AlgInt b7a = P(a - 2, -9, -(a + 5));
    AlgInt b6a, b7b;
    AlgInt b5b;
    if (a % 2 == 0) {
        b5b = P(2 * A * A + 4 * A + 1, 4 * A * A + 5 * A - 1, 2 * A * A + A - 1);
        b6a = b5b;
        b7b = P(-2 * A * A - 6 * A - 1, -(4 * A * A + 7 * A - 4), -(2 * A * A + A - 3));
    } else {
        b5b = P(2 * A * A + 5 * A + 2, 4 * A * A + 7 * A, 2 * A * A + 2 * A - 1);
        b6a = P(2 * A * A + 7 * A + 3, 4 * A * A + 9 * A - 2, 2 * A * A + 2 * A - 3);
        b7b = P(-2 * A * A - 9 * A - 4, -(4 * A * A + 11 * A - 4), -(2 * A * A + 2 * A - 5));
    }
    std::vector<Triple> states{
        {P(1, 0, 0), P(0, -1, 0), P(0, 0, 1)},
        {P(-1, -1, 0), P(-1, 0, 1), P(1, 0, 0)},
        {P(1, 2, 1), P(a + 2, a + 1, 0), P(-1, -1, 0)},
        {b3a, b4a, P(1, 2, 1)},
        {b4a, b5a, b3a},
        {b5a, b5b, b4a},
        {b6a, b7a, b5a},
        {b7a, b7b, b6a},
        {P(-a * a - 5, -(a * a - a + 14), -7), P(7, a * a + 7 * a + 26, a * a + 6 * a + 14), b7a},
    };
    return make_jpa("(1, -rho', rho'^2)", o, "rho'", -1, 2, 7, std::move(states), simplest_digits(a));
}

inline IjpaExpected simplest_ijpa(long a) {
    Order o = cubmcf::construct(cubmcf::FamilyId::simplest(a));
    IjpaExpected e{"(-rho', rho'^2)", o, o.root_of_label("rho'"), {FieldElem(P(0, -1, 0)), FieldElem(P(0, 0, 1))},
                   0, 0, {}, {}};
    auto F = [](const AlgInt& v) { return FieldElem(v); };
    switch (a) {
        case -1:
            e.l0 = 1, e.l1 = 2;
            e.states = {{F(P(0, -1, 0)), F(P(0, 0, 1))}, {F(P(5, -1, -2)), F(P(-2, 0, 1))}, {F(P(-1, -1, 0)), F(P(0, 0, 1))}};
            e.digits = {{1, 3}, {0, 1}, {0, 3}};
            return e;
        case 0:
            e.l0 = 2, e.l1 = 3;
            e.states = {{F(P(0, -1, 0)), F(P(0, 0, 1))},
                        {F(P(3, 0, -1)), F(P(-2, -1, 1))},
                        {F(P(-1, 0, 1)), F(P(0, -1, 0))},
                        {F(P(0, -1, 0)), F(P(-1, -1, 1))},
                        {F(P(4, 0, -1)), F(P(-2, -1, 1))}};
            e.digits = {{1, 2}, {0, 1}, {1, 1}, {1, 2}, {1, 1}};
            return e;
        case 1:
            e.l0 = 2, e.l1 = 5;
            e.states = {{F(P(0, -1, 0)), F(P(0, 0, 1))},
                        {F(P(1, -1, 0)), F(P(-2, -2, 1))},
                        {F(P(5, 1, -1)), F(P(-2, -2, 1))},
                        {F(P(-1, 0, 1)), F(P(0, -1, 0))},
                        {Q(4, 0, -1, 5), Q(-7, -5, 3, 5)},
                        {F(P(-3, -1, 1)), F(P(1, -1, 0))},
                        {F(P(0, -1, 0)), F(P(-1, -2, 1))}};
            e.digits = {{1, 1}, {2, 2}, {1, 2}, {0, 1}, {0, 1}, {0, 2}, {1, 3}};
            return e;
        case 2:
            e.l0 = 2, e.l1 = 5;
            e.states = {{F(P(0, -1, 0)), F(P(0, 0, 1))},
                        {F(P(1, -1, 0)), F(P(-2, -3, 1))},
                        {F(P(6, 2, -1)), F(P(-2, -3, 1))},
                        {F(P(-1, 0, 1)), F(P(0, -1, 0))},
                        {Q(6, 1, -1, 7), Q(-10, -11, 4, 7)},
                        {F(P(-3, -2, 1)), F(P(1, -1, 0))},
                        {F(P(0, -1, 0)), F(P(-1, -3, 1))}};
            e.digits = {{1, 1}, {2, 3}, {1, 3}, {0, 1}, {0, 1}, {1, 2}, {1, 4}};
            return e;
        case 3:
            e.l0 = 2, e.l1 = 5;
            e.states = {{F(P(0, -1, 0)), F(P(0, 0, 1))},
                        {F(P(1, -1, 0)), F(P(-2, -4, 1))},
                        {F(P(7, 3, -1)), F(P(-2, -4, 1))},
                        {F(P(-1, 0, 1)), F(P(0, -1, 0))},
                        {Q(8, 2, -1, 9), Q(-13, -19, 5, 9)},
                        {F(P(-3, -3, 1)), F(P(1, -1, 0))},
                        {F(P(0, -1, 0)), F(P(-1, -4, 1))}};
            e.digits = {{1, 1}, {2, 4}, {1, 4}, {0, 1}, {0, 1}, {2, 2}, {1, 5}};
            return e;
        default:
            break;
    }
    long A = a / 2;
    e.l0 = 2, e.l1 = 7;
    e.states = {{F(P(0, -1, 0)), F(P(0, 0, 1))},
                {F(P(1, -1, 0)), F(P(-2, -(a + 1), 1))},
                {F(P(a + 4, a, -1)), F(P(-2, -(a + 1), 1))},
                {F(P(-1, 0, 1)), F(P(0, -1, 0))},
                {Q(2 * a + 2, a - 1, -1, 2 * a + 3), Q(-3 * a - 4, -(a * a + 3 * a + 1), a + 2, 2 * a + 3)}};
    if (a % 2 == 0) {
        long D = A * A * A + 4 * A * A + 3 * A - 1;
        e.states.push_back({F(P(-(A + 2), -(A + 1), 1)), F(P(1, -1, 0))});
        e.states.push_back({Q(A * A + 2 * A - 1, A - 2, -1, D),
                            Q(-2 * A * A - 3 * A + 1, -(2 * A * A * A + 3 * A * A + A - 1), A * A + A, D)});
        e.states.push_back({F(P(-(A + 4), -2 * A, 1)), F(P(A + 2, -1, 0))});
    } else {
        long D = A * A * A + 6 * A * A + 7 * A - 5;
        e.states.push_back({F(P(-(A + 2), -(A + 2), 1)), F(P(1, -1, 0))});
        e.states.push_back({Q(A * A + 3 * A - 2, A - 2, -1, D),
                            Q(-2 * A * A - 5 * A + 3, -(2 * A * A * A + 6 * A * A + 2 * A - 3), A * A + 2 * A - 1, D)});
        e.states.push_back({F(P(-(A + 5), -(2 * A + 1), 1)), F(P(A + 3, -1, 0))});
    }
    e.states.push_back({F(P(0, -1, 0)), F(P(-1, -(a + 1), 1))});
    e.digits = simplest_digits(a);
    return e;
}

inline std::vector<std::pair<long, long>> simplest_digits(long a) {
    long A = a / 2;
    bool even = a % 2 == 0;
    return {{1, 1}, {2, a + 1}, {1, a + 1}, {0, 1}, {0, A}, {even ? 0 : 1, 2}, {0, 1}, {A - 2, even ? A + 3 : A + 4},
            {1, a + 2}};
}

/// Mismatch descriptions; empty when the run matches.
inline std::vector<std::string> check_jpa(const JpaExpected& ex) {
    std::vector<std::string> out;
    auto rec = cubmcf::jpa_expand(ex.order, ex.beta, ex.track);
    if (!rec.periodic()) return {"not periodic"};
    if (rec.l0 != ex.l0 || rec.l1 != ex.l1)
        out.push_back("period (" + std::to_string(rec.l0) + ", " + std::to_string(rec.l1) + ")");
    for (std::size_t k = 0; k < ex.states.size() && k < rec.states.size(); ++k) {
        for (int i = 0; i < 3; ++i)
            if (rec.states[k][i] != ex.states[k][i])
                out.push_back("state " + std::to_string(k) + "[" + std::to_string(i) + "] = " + rec.states[k][i].str() +
                              ", expected " + ex.states[k][i].str());
        if (k < ex.digits.size() &&
            (rec.digits[k][0] != ex.digits[k].first || rec.digits[k][1] != ex.digits[k].second))
            out.push_back("digits " + std::to_string(k) + " = (" + rec.digits[k][0].get_str() + ", " +
                          rec.digits[k][1].get_str() + ")");
    }
    return out;
}

inline std::vector<std::string> check_ijpa(const IjpaExpected& ex) {
    std::vector<std::string> out;
    auto rec = cubmcf::ijpa_expand(ex.order, ex.theta, ex.track);
    if (!rec.periodic()) return {"not periodic"};
    if (rec.l0 != ex.l0 || rec.l1 != ex.l1)
        out.push_back("period (" + std::to_string(rec.l0) + ", " + std::to_string(rec.l1) + ")");
    for (std::size_t k = 0; k < ex.states.size() && k < rec.istates.size(); ++k) {
        for (int i = 0; i < 2; ++i)
            if (!(rec.istates[k][i] == ex.states[k][i]))
                out.push_back("state " + std::to_string(k) + "[" + std::to_string(i) + "] = " +
                              rec.istates[k][i].str() + ", expected " + ex.states[k][i].str());
        if (k < ex.digits.size() &&
            (rec.digits[k][0] != ex.digits[k].first || rec.digits[k][1] != ex.digits[k].second))
            out.push_back("digits " + std::to_string(k) + " = (" + rec.digits[k][0].get_str() + ", " +
                          rec.digits[k][1].get_str() + ")");
    }
    return out;
}

}  // namespace fixtures
