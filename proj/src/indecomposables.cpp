// SPDX-License-Identifier: MIT
#include "cubmcf/indecomposables.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubmcf/enumerate.hpp"

namespace cubmcf {

namespace {

const char* symbol(CatalogKind k) {
    switch (k) {
        case CatalogKind::Theta: return "theta";
        case CatalogKind::Kappa: return "kappa";
        case CatalogKind::Lambda: return "lambda";
        case CatalogKind::Mu: return "mu";
        case CatalogKind::KappaTilde: return "kappa~";
        case CatalogKind::LambdaTilde: return "lambda~";
        case CatalogKind::MuTilde: return "mu~";
        default: return "";
    }
}

std::string family_tag(FamilyKind k) {
    switch (k) {
        case FamilyKind::SimplestCubic: return "simplest";
        case FamilyKind::EnnolaI: return "ennola1";
        case FamilyKind::EnnolaII: return "ennola2";
        case FamilyKind::AB: return "ab";
        case FamilyKind::Generic: return "generic";
    }
    return "";
}

std::string signature_str(const Signature& s) {
    std::string out;
    for (int v : s.s) out += v > 0 ? '+' : '-';
    return out;
}

Int det3(const std::array<std::array<Int, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::string CatalogEntry::label(const std::string& root) const {
    std::string prime;
    for (auto it = root.rbegin(); it != root.rend() && *it == '\''; ++it) prime += '\'';
    switch (kind) {
        case CatalogKind::One: return "1";
        case CatalogKind::Exceptional: return "1+" + root + "+" + root + "^2";
        default: break;
    }
    std::string base = symbol(kind);
    std::string tilde;
    if (base.back() == '~') {
        base.pop_back();
        tilde = "~";
    }
    std::ostringstream os;
    os << base << tilde << prime << "_{";
    for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
    os << "}";
    return os.str();
}

IndecomposableCatalog catalog(const FamilyId& f) {
    IndecomposableCatalog c{f, {}};
    const long a = f.a;
    auto add = [&](CatalogKind k, std::vector<long> idx, long v1, long v2, long v3) {
        c.entries.push_back({k, std::move(idx), AlgInt::of(v1, v2, v3)});
    };
    switch (f.kind) {
        case FamilyKind::SimplestCubic:
            if (a < -1) throw Error(Errc::ParameterOutOfRange, "simplest cubic catalog needs a >= -1");
            add(CatalogKind::One, {}, 1, 0, 0);
            add(CatalogKind::Exceptional, {}, 1, 1, 1);
            for (long v = 0; v <= a; ++v)
                for (long W = 0; W <= a - v; ++W) add(CatalogKind::Theta, {v, W}, -v, -(v * (a + 2) + 1 + W), v + 1);
            break;
        case FamilyKind::EnnolaI:
            if (a < 3) throw Error(Errc::ParameterOutOfRange, "Ennola I catalog needs a >= 3");
            add(CatalogKind::One, {}, 1, 0, 0);
            for (long s = 1; s <= a - 1; ++s) add(CatalogKind::Kappa, {s}, 1, s, 1);
            for (long v = 1; v <= a - 1; ++v)
                for (long w = std::max(1L, v - 1); w <= a - 1; ++w) {
                    long m = a * (v - 1) + w;
                    add(CatalogKind::Lambda, {v, w}, -v, -m, m + 1);
                }
            for (long u = 0; u <= a - 2; ++u) add(CatalogKind::Mu, {u}, -1, -u, u + 2);
            break;
        case FamilyKind::EnnolaII:
            if (a < 5) throw Error(Errc::ParameterOutOfRange, "Ennola II catalog needs a >= 5");
            add(CatalogKind::One, {}, 1, 0, 0);
            for (long w = 1; w <= a - 3; ++w) add(CatalogKind::KappaTilde, {w}, 1 - w + a * w, 1 - w + a * w, -w);
            for (long v = 1; v <= a - 3; ++v)
                for (long u = 0; u <= v; ++u) {
                    if (v == 1 && u == 0) continue;
                    add(CatalogKind::LambdaTilde, {v, u}, 1 + v - u + a * u, a - u + a * u, -(u + 1));
                }
            for (long z = 0; z <= a - 4; ++z) add(CatalogKind::MuTilde, {z}, z + 2, z + 4, 1);
            break;
        default:
            throw Error(Errc::ParameterOutOfRange, "no closed-form catalog for " + f.str());
    }
    return c;
}

std::string catalog_csv(const IndecomposableCatalog& c, const Order& o) {
    std::ostringstream os;
    os << "family,a,label,v1,v2,v3,norm,trace,signature\n";
    std::string root = c.family.kind == FamilyKind::EnnolaII ? "psi" : "rho";
    for (const auto& e : c.entries) {
        os << family_tag(c.family.kind) << ',' << c.family.a << ',' << e.label(root) << ',' << e.value[0] << ','
           << e.value[1] << ',' << e.value[2] << ',' << o.norm(e.value) << ',' << o.trace(e.value) << ','
           << signature_str(o.signature(e.value)) << '\n';
    }
    return os.str();
}

std::optional<DecompositionWitness> is_decomposable(const Order& o, const AlgInt& x, const Signature& s) {
    if (x.is_zero()) throw Error(Errc::ZeroElement, "is_decomposable of 0");
    if (!(o.signature(x) == s)) throw Error(Errc::SignatureMismatch, "element does not have the queried signature");

    // Multiplying by a totally positive unit preserves the problem and keeps
    // the coordinate box close to a cube.
    AlgInt eta = balancing_unit(o, x);
    AlgInt y = o.mul(eta, x);
    std::array<Rat, 3> lo, hi;
    for (int i = 0; i < 3; ++i) {
        Ival v = o.embed(y, i);
        if (s.s[i] > 0) lo[i] = 0, hi[i] = v.hi;
        else lo[i] = v.lo, hi[i] = 0;
    }
    std::optional<DecompositionWitness> found;
    enumerate_box(o, lo, hi, [&](const AlgInt& b) {
        if (b.is_zero() || b == y) return true;
        if (!(o.signature(b) == s) || !(o.signature(y - b) == s)) return true;
        AlgInt inv = o.unit_inverse(eta);
        found = DecompositionWitness{{o.mul(inv, b), o.mul(inv, y - b)}};
        return false;
    });
    return found;
}

std::optional<AlgInt> codifferent_with_trace(const Order& o, const AlgInt& x, const Signature& s, const Int& bound,
                                             const Int& target) {
    if (x.is_zero()) throw Error(Errc::ZeroElement, "codifferent search for 0");
    if (!(o.signature(x) == s)) throw Error(Errc::SignatureMismatch, "element does not have the queried signature");
    Signature want = s * o.signature(o.fprime());
    std::array<Int, 3> coef;
    for (int j = 0; j < 3; ++j) {
        AlgInt e;
        e[j] = 1;
        coef[j] = o.codifferent_trace(e, x);
    }
    int piv = -1;
    for (int j = 0; j < 3; ++j)
        if (coef[j] != 0 && (piv < 0 || abs(coef[j]) < abs(coef[piv]))) piv = j;
    if (piv < 0) return std::nullopt;
    int i1 = (piv + 1) % 3, i2 = (piv + 2) % 3;

    // visit 0, 1, -1, 2, -2, ... so small witnesses come first
    auto nth = [](const Int& k) -> Int { return k % 2 == 0 ? Int(-(k / 2)) : Int((k + 1) / 2); };
    Int n = 2 * bound + 1;
    for (Int t1 = 0; t1 < n; ++t1) {
        for (Int t2 = 0; t2 < n; ++t2) {
            AlgInt d;
            d[i1] = nth(t1);
            d[i2] = nth(t2);
            Int rest = target - coef[i1] * d[i1] - coef[i2] * d[i2];
            if (rest % coef[piv] != 0) continue;
            d[piv] = rest / coef[piv];
            if (abs(d[piv]) > bound || d.is_zero()) continue;
            if (o.signature(d) == want) return d;
        }
    }
    return std::nullopt;
}

std::optional<AlgInt> certify_by_codifferent(const Order& o, const AlgInt& x, const Signature& s, const Int& bound) {
    return codifferent_with_trace(o, x, s, bound, Int(1));
}

std::vector<AlgInt> parallelepiped(const Order& o, const AlgInt& g1, const AlgInt& g2, const AlgInt& g3) {
    (void)o;
    std::array<std::array<Int, 3>, 3> m;  // columns are the generators
    const std::array<const AlgInt*, 3> g{&g1, &g2, &g3};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = (*g[c])[r];
    Int det = det3(m);
    if (det == 0) throw Error(Errc::DegenerateBasis, "parallelepiped generators are linearly dependent");

    // adj(m) x = det * t with t in [0,1]^3
    std::array<std::array<Int, 3>, 3> adj;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
            adj[r][c] = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
        }
    std::array<Int, 3> lo, hi;
    for (int r = 0; r < 3; ++r) {
        lo[r] = 0;
        hi[r] = 0;
        for (int c = 0; c < 3; ++c) (m[r][c] < 0 ? lo[r] : hi[r]) += m[r][c];
    }
    Int sd = det > 0 ? Int(1) : Int(-1);
    std::vector<AlgInt> out;
    for (Int x0 = lo[0]; x0 <= hi[0]; ++x0)
        for (Int x1 = lo[1]; x1 <= hi[1]; ++x1)
            for (Int x2 = lo[2]; x2 <= hi[2]; ++x2) {
                bool inside = true;
                for (int r = 0; r < 3 && inside; ++r) {
                    Int t = sd * (adj[r][0] * x0 + adj[r][1] * x1 + adj[r][2] * x2);
                    inside = t >= 0 && t <= sd * det;
                }
                if (inside && !(x0 == 0 && x1 == 0 && x2 == 0)) out.emplace_back(x0, x1, x2);
            }
    return out;
}

std::vector<AlgInt> parallelepiped_candidates(const Order& o, const AlgInt& gamma, const AlgInt& e1,
                                              const AlgInt& e2) {
    if (gamma.is_zero()) throw Error(Errc::ZeroElement, "parallelepiped base is 0");
    for (const AlgInt* e : {&e1, &e2}) {
        if (!o.is_unit(*e)) throw Error(Errc::NotAUnit, e->str() + " is not a unit");
        if (!o.totally_positive(*e)) throw Error(Errc::NotTotallyPositive, e->str() + " is not totally positive");
    }
    AlgInt ge1 = o.mul(gamma, e1);
    auto first = parallelepiped(o, gamma, ge1, o.mul(gamma, e2));
    auto second = parallelepiped(o, gamma, ge1, o.mul(ge1, o.unit_inverse(e2)));
    std::set<AlgInt> all(first.begin(), first.end());
    all.insert(second.begin(), second.end());
    return {all.begin(), all.end()};
}

std::optional<AlgInt> tp_associated(const Order& o, const AlgInt& a, const AlgInt& b) {
    if (abs(o.norm(a)) != abs(o.norm(b))) return std::nullopt;
    auto e = o.is_associated(a, b);
    if (e && o.totally_positive(*e)) return e;
    return std::nullopt;
}

std::optional<std::pair<std::size_t, AlgInt>> find_in_catalog(const Order& o, const IndecomposableCatalog& c,
                                                              const AlgInt& x) {
    Int n = abs(o.norm(x));
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const AlgInt& v = c.entries[i].value;
        if (abs(o.norm(v)) != n) continue;
        if (auto e = o.is_associated(x, v)) return std::make_pair(i, *e);
    }
    return std::nullopt;
}

Int min_nonassociated_norm(const Order& o, const IndecomposableCatalog& c, long bound) {
    const auto& [u1, u2] = o.units();
    std::optional<Int> best;
    auto offer = [&](const AlgInt& x) {
        if (x.is_zero() || associated_rational(o, x)) return;
        Int n = abs(o.norm(x));
        if (!best || n < *best) best = n;
    };
    for (const auto& e : c.entries) offer(e.value);
    for (long i = -bound; i <= bound; ++i)
        for (long j = -bound; j <= bound; ++j)
            for (int sg : {1, -1}) {
                AlgInt eta = o.unit_compose({sg, i, j}, u1, u2);
                if (o.totally_positive(eta)) offer(AlgInt(1) + eta);
            }
    if (!best) throw Error(Errc::DecompositionNotFound, "no element outside the rational associates was found");
    return *best;
}

Int min_norm_box_search(const Order& o, long box) {
    std::optional<Int> best;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b)
            for (long d = -box; d <= box; ++d) {
                AlgInt x = AlgInt::of(a, b, d);
                if (x.is_zero()) continue;
                Int n = abs(o.norm(x));
                if (best && n >= *best) continue;
                if (associated_rational(o, x)) continue;
                best = n;
            }
    return best.value_or(Int(0));
}

}  // namespace cubmcf
