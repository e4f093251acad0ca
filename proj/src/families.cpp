// SPDX-License-Identifier: MIT
#include "cubmcf/families.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace cubmcf {

namespace {

std::string trim(std::string s) {
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '(' || c == ')' || c == '[' || c == ']'; };
    while (!s.empty() && ws(s.front())) s.erase(s.begin());
    while (!s.empty() && ws(s.back())) s.pop_back();
    return s;
}

Int parse_int(const std::string& s, const std::string& what) {
    Int v;
    std::string t = trim(s);
    if (t.empty() || v.set_str(t, 10) != 0) throw Error(Errc::Parse, "bad integer for " + what + ": '" + s + "'");
    return v;
}

AlgInt parse_triple(const std::string& s) {
    std::string t = trim(s);
    for (char& c : t)
        if (c == ';' || c == '/' || c == ':') c = ' ';
    std::istringstream is(t);
    std::string a, b, c, extra;
    if (!(is >> a >> b >> c) || (is >> extra)) throw Error(Errc::Parse, "unit must be a coordinate triple: '" + s + "'");
    return AlgInt(parse_int(a, "unit"), parse_int(b, "unit"), parse_int(c, "unit"));
}

void require(bool ok, const FamilyId& f, const char* rule) {
    if (!ok) throw Error(Errc::ParameterOutOfRange, f.str() + " violates " + rule);
}

// Strict check lo < value < hi of a root through its isolating interval.
void check_between(const Order& o, int root, const Rat& lo, const Rat& hi, const std::string& what) {
    for (unsigned k = 64; k <= 1u << 14; k *= 2) {
        Ival iv = o.root_ival(root, k);
        if (iv.lo > lo && iv.hi < hi) return;
        if (iv.hi <= lo || iv.lo >= hi) break;
    }
    throw Error(Errc::BoundViolated, what);
}

}  // namespace

FamilyId FamilyId::parse(const std::string& spec) {
    auto colon = spec.find(':');
    std::string tag = trim(spec.substr(0, colon));
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            pos = comma == std::string::npos ? rest.size() + 1 : comma + 1;
            if (trim(item).empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw Error(Errc::Parse, "expected key=value in '" + item + "'");
            kv[trim(item.substr(0, eq))] = item.substr(eq + 1);
        }
    }
    auto get = [&](const char* key) -> Int {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error(Errc::Parse, "family '" + tag + "' needs " + key);
        return parse_int(it->second, key);
    };
    FamilyId f;
    if (tag == "simplest") {
        f = simplest(get("a").get_si());
    } else if (tag == "ennola1") {
        f = ennola1(get("a").get_si());
    } else if (tag == "ennola2") {
        f = ennola2(get("a").get_si());
    } else if (tag == "ab") {
        f = ab(get("a").get_si(), get("b").get_si());
    } else if (tag == "generic") {
        f = generic(get("p"), get("q"), get("r"));
        bool h1 = kv.count("u1"), h2 = kv.count("u2");
        if (h1 != h2) throw Error(Errc::Parse, "give both u1 and u2 or neither");
        if (h1) f.units = std::make_pair(parse_triple(kv["u1"]), parse_triple(kv["u2"]));
    } else {
        throw Error(Errc::Parse, "unknown family '" + tag + "'");
    }
    return f;
}

std::string FamilyId::str() const {
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::SimplestCubic: os << "simplest:a=" << a; break;
        case FamilyKind::EnnolaI: os << "ennola1:a=" << a; break;
        case FamilyKind::EnnolaII: os << "ennola2:a=" << a; break;
        case FamilyKind::AB: os << "ab:a=" << a << ",b=" << b; break;
        case FamilyKind::Generic: os << "generic:p=" << p << ",q=" << q << ",r=" << r; break;
    }
    return os.str();
}

std::array<Int, 3> FamilyId::coeffs() const {
    switch (kind) {
        case FamilyKind::SimplestCubic: return {Int(-a), Int(-(a + 3)), Int(-1)};
        case FamilyKind::EnnolaI: return {Int(a - 1), Int(-a), Int(-1)};
        case FamilyKind::EnnolaII: return {Int(-(a - 1)), Int(-a), Int(-1)};
        case FamilyKind::AB: return {Int(-(a + b)), Int(a * b), Int(-1)};
        case FamilyKind::Generic: return {p, q, r};
    }
    return {};
}

Order construct(const FamilyId& f) {
    switch (f.kind) {
        case FamilyKind::SimplestCubic: require(f.a >= -1, f, "a >= -1"); break;
        case FamilyKind::EnnolaI: require(f.a >= 3, f, "a >= 3"); break;
        case FamilyKind::EnnolaII: require(f.a >= 5, f, "a >= 5"); break;
        case FamilyKind::AB: require(2 <= f.a && f.a <= f.b - 2, f, "2 <= a <= b - 2"); break;
        case FamilyKind::Generic: break;
    }
    auto [p, q, r] = f.coeffs();
    Order o(p, q, r);
    const Int a(f.a);
    switch (f.kind) {
        case FamilyKind::SimplestCubic: {
            o.set_labels({"rho'", "rho''", "rho"});
            o.set_units(AlgInt::x(), express_conjugate(o, 0, 2));
            break;
        }
        case FamilyKind::EnnolaI:
            o.set_labels({"rho''", "rho'", "rho"});
            o.set_units(AlgInt::x(), AlgInt::of(-1, 1, 0));
            break;
        case FamilyKind::EnnolaII: {
            o.set_labels({"psi'", "psi''", "psi"});
            AlgInt R(-(a - 1), -(a - 1), Int(1));
            o.set_units(R, R - AlgInt(1));
            break;
        }
        case FamilyKind::AB:
            o.set_labels({"rho''", "rho'", "rho"});
            o.set_units(AlgInt::x(), AlgInt(Int(-a), Int(1), Int(0)));
            break;
        case FamilyKind::Generic:
            o.set_labels({"t0", "t1", "t2"});
            if (f.units) o.set_units(f.units->first, f.units->second);
            break;
    }
    return o;
}

void root_bounds_check(const FamilyId& f, const Order& o) {
    const Rat a(f.a);
    switch (f.kind) {
        case FamilyKind::SimplestCubic:
            if (f.a < 7) return;
            check_between(o, 2, a + 1, a + 1 + 2 / a, "rho in (a+1, a+1+2/a)");
            check_between(o, 0, -1 - 1 / (a + 1), -1 - 1 / (a + 2), "rho' in (-1-1/(a+1), -1-1/(a+2))");
            check_between(o, 1, -1 / (a + 2), -1 / (a + 3), "rho'' in (-1/(a+2), -1/(a+3))");
            return;
        case FamilyKind::EnnolaI:
            check_between(o, 2, 1 + 1 / (a + 3), 1 + 1 / (a + 2), "rho in (1+1/(a+3), 1+1/(a+2))");
            check_between(o, 1, -1 / a, -1 / (a + 1), "rho' in (-1/a, -1/(a+1))");
            check_between(o, 0, -a + 1 / (a * a + a), -a + 1 / (a * a), "rho'' in (-a+1/(a^2+a), -a+1/a^2)");
            return;
        case FamilyKind::EnnolaII:
            check_between(o, 2, a + (a - 1) / (a * a * a), a + (a * a - 1) / (a * a * a * a),
                          "psi in (a+(a-1)/a^3, a+(a^2-1)/a^4)");
            check_between(o, 0, -(a - 1) / a, -(a - 2) / (a - 1), "psi' in (-(a-1)/a, -(a-2)/(a-1))");
            check_between(o, 1, -1 / (a - 2), -1 / (a - 1), "psi'' in (-1/(a-2), -1/(a-1))");
            return;
        default:
            return;
    }
}

AlgInt express_conjugate(const Order& o, int target, int track) {
    if (target == track) return AlgInt::x();
    long double r[3] = {o.approx(AlgInt::x(), 0), o.approx(AlgInt::x(), 1), o.approx(AlgInt::x(), 2)};
    const std::vector<Int> f{o.r(), o.q(), o.p(), Int(1)};
    // Separators between consecutive roots decide which root a value is.
    Rat sep01 = o.root_ival(0).hi, sep12 = o.root_ival(1).hi;
    auto root_of = [&](const AlgInt& g) {
        if (o.sign(FieldElem(g) - FieldElem(sep01, 0, 0), track) < 0) return 0;
        return o.sign(FieldElem(g) - FieldElem(Rat(sep12), 0, 0), track) < 0 ? 1 : 2;
    };
    int other = 3 - target - track;
    // An automorphism sends track -> target; the image of `target` is either
    // `other` (3-cycle) or `track` (transposition, impossible for a cubic
    // automorphism unless the field is not Galois).
    int perm[3];
    perm[track] = target;
    perm[target] = other;
    perm[other] = track;
    // Solve sum_j c_j r_i^j = r_perm(i) by Cramer's rule.
    long double M[3][3], rhs[3];
    for (int i = 0; i < 3; ++i) {
        M[i][0] = 1;
        M[i][1] = r[i];
        M[i][2] = r[i] * r[i];
        rhs[i] = r[perm[i]];
    }
    auto det = [](long double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    long double D = det(M);
    long c[3];
    for (int j = 0; j < 3; ++j) {
        long double T[3][3];
        for (int i = 0; i < 3; ++i)
            for (int m = 0; m < 3; ++m) T[i][m] = (m == j) ? rhs[i] : M[i][m];
        long double v = det(T) / D;
        if (!std::isfinite(v) || std::fabs(v) > 1e15L) throw Error(Errc::NotGalois, o.str());
        c[j] = std::lround(v);
    }
    for (long d0 = -1; d0 <= 1; ++d0)
        for (long d1 = -1; d1 <= 1; ++d1)
            for (long d2 = -1; d2 <= 1; ++d2) {
                AlgInt g = AlgInt::of(c[0] + d0, c[1] + d1, c[2] + d2);
                if (o.eval_poly(f, g).is_zero() && root_of(g) == target) return g;
            }
    throw Error(Errc::NotGalois, o.str());
}

std::pair<AlgInt, AlgInt> table_units(const FamilyId& f, const Order& o, int track) {
    switch (f.kind) {
        case FamilyKind::SimplestCubic:
            return {express_conjugate(o, 2, track), express_conjugate(o, 0, track)};
        case FamilyKind::EnnolaI:
            return {AlgInt::x(), AlgInt::of(-1, 1, 0)};
        default:
            return o.units();
    }
}

}  // namespace cubmcf
