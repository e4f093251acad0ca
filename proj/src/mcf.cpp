// SPDX-License-Identifier: MIT
#include "cubmcf/mcf.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "cubmcf/lattice.hpp"

namespace cubmcf {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::iJPA: return "ijpa";
        case Algorithm::JPA: return "jpa";
        case Algorithm::Brun: return "brun";
    }
    return "?";
}

std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Periodic: return "Periodic";
        case RunStatus::BoundExhausted: return "BoundExhausted";
        case RunStatus::Terminated: return "Terminated";
    }
    return "?";
}

std::string to_string(CoverVerdict v) {
    switch (v) {
        case CoverVerdict::Covered: return "Covered";
        case CoverVerdict::NotCovered: return "NotCovered";
        case CoverVerdict::HypothesisFails: return "HypothesisFails";
    }
    return "?";
}

Triple abs_power_vector(const Order& o, int track) {
    AlgInt x = AlgInt::x();
    if (o.sign(x, track) < 0) x = -x;
    return {AlgInt(1), x, AlgInt::of(0, 0, 1)};
}

FieldPair abs_power_pair(const Order& o, int track) {
    auto v = abs_power_vector(o, track);
    return {FieldElem(v[1]), FieldElem(v[2])};
}

long default_max_iter() {
    if (const char* env = std::getenv("MCF_MAX_ITER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000;
}

namespace {

struct PairHash {
    std::size_t operator()(const FieldPair& p) const {
        FieldElemHash h;
        return h(p[0]) * 31 + h(p[1]);
    }
};

using RatioIndex = std::unordered_map<FieldPair, long, PairHash>;

FieldPair ratio_key(const Order& o, const Triple& b) {
    FieldElem inv = o.inverse(FieldElem(b[0]));
    return {o.mul(FieldElem(b[1]), inv), o.mul(FieldElem(b[2]), inv)};
}

Int coordinate_det(const Triple& b) {
    const auto& m = b;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// eps with next = eps * prev componentwise, when eps is a unit.
std::optional<AlgInt> unit_ratio(const Order& o, const Triple& next, const Triple& prev) {
    auto eps = o.divide_exact(next[0], prev[0]);
    if (!eps || !o.is_unit(*eps)) return std::nullopt;
    for (int i = 1; i < 3; ++i)
        if (o.mul(*eps, prev[i]) != next[i]) return std::nullopt;
    return eps;
}

// Registers state `k` and reports a unit recurrence with an earlier state.
bool detect_period(const Order& o, ExpansionRecord& rec, RatioIndex& seen) {
    long k = static_cast<long>(rec.states.size()) - 1;
    FieldPair key = ratio_key(o, rec.states[k]);
    auto [it, fresh] = seen.emplace(key, k);
    if (fresh) return false;
    long m = it->second;
    auto eps = unit_ratio(o, rec.states[k], rec.states[m]);
    if (!eps) return false;
    rec.l0 = m;
    rec.l1 = k - m;
    rec.period_unit = *eps;
    rec.status = RunStatus::Periodic;
    return true;
}

std::vector<Int> jpa_digits(const Order& o, const Triple& b, int track) {
    return {o.floor_ratio(b[1], b[0], track), o.floor_ratio(b[2], b[0], track)};
}

// Ascending sort in the tracking embedding; returns source positions.
std::array<int, 3> brun_sort(const Order& o, Triple& b, int track) {
    std::array<int, 3> perm{0, 1, 2};
    auto less = [&](int x, int y) { return b[x] != b[y] && o.sign(b[y] - b[x], track) > 0; };
    std::stable_sort(perm.begin(), perm.end(), less);
    Triple sorted{b[perm[0]], b[perm[1]], b[perm[2]]};
    b = sorted;
    return perm;
}

}  // namespace

ExpansionRecord jpa_expand(const Order& o, const Triple& beta, int track, long max_iter) {
    if (beta[0].is_zero()) throw Error(Errc::ZeroPivot, "beta_1 of the initial vector is 0");
    ExpansionRecord rec;
    rec.algorithm = Algorithm::JPA;
    rec.tracking_root = track;
    rec.states.push_back(beta);
    RatioIndex seen;
    detect_period(o, rec, seen);
    for (long step = 0; step < max_iter; ++step) {
        const Triple cur = rec.states.back();
        auto d = jpa_digits(o, cur, track);
        rec.digits.push_back(d);
        Triple next{cur[1] - d[0] * cur[0], cur[2] - d[1] * cur[0], cur[0]};
        rec.states.push_back(next);
        if (next[0].is_zero()) {
            if (coordinate_det(beta) != 0)
                throw Error(Errc::ZeroPivot, "zero pivot at step " + std::to_string(step + 1));
            rec.digits.push_back({});
            rec.status = RunStatus::Terminated;
            return rec;
        }
        if (detect_period(o, rec, seen)) {
            rec.digits.push_back(jpa_digits(o, next, track));
            return rec;
        }
    }
    rec.digits.push_back(jpa_digits(o, rec.states.back(), track));
    rec.status = RunStatus::BoundExhausted;
    return rec;
}

ExpansionRecord ijpa_expand(const Order& o, const FieldPair& theta, int track, long max_iter) {
    ExpansionRecord rec;
    rec.algorithm = Algorithm::iJPA;
    rec.tracking_root = track;
    rec.istates.push_back(theta);
    std::unordered_map<FieldPair, long, PairHash> seen{{theta, 0}};
    auto digits_of = [&](const FieldPair& a) { return std::vector<Int>{o.floor(a[0], track), o.floor(a[1], track)}; };
    for (long step = 0; step < max_iter; ++step) {
        const FieldPair cur = rec.istates.back();
        auto d = digits_of(cur);
        rec.digits.push_back(d);
        FieldElem den = cur[0] - FieldElem(AlgInt(d[0]));
        if (den.is_zero()) {
            rec.status = RunStatus::Terminated;
            return rec;
        }
        FieldElem inv = o.inverse(den);
        FieldPair next{o.mul(cur[1] - FieldElem(AlgInt(d[1])), inv), inv};
        rec.istates.push_back(next);
        long k = static_cast<long>(rec.istates.size()) - 1;
        auto [it, fresh] = seen.emplace(next, k);
        if (!fresh) {
            rec.l0 = it->second;
            rec.l1 = k - it->second;
            rec.status = RunStatus::Periodic;
            rec.digits.push_back(digits_of(next));
            FieldElem prod(AlgInt(1));
            for (long j = rec.l0; j < rec.l0 + rec.l1; ++j) prod = o.mul(prod, rec.istates[j][1]);
            auto u = prod.integral();
            if (!u || !o.is_unit(*u)) throw Error(Errc::NotAUnit, "Hasse-Bernstein product " + prod.str());
            rec.period_unit = *u;
            return rec;
        }
    }
    rec.digits.push_back(digits_of(rec.istates.back()));
    rec.status = RunStatus::BoundExhausted;
    return rec;
}

ExpansionRecord brun_expand(const Order& o, const Triple& beta, int track, long max_iter) {
    ExpansionRecord rec;
    rec.algorithm = Algorithm::Brun;
    rec.tracking_root = track;
    for (const auto& b : beta)
        if (!b.is_zero() && o.sign(b, track) < 0) throw Error(Errc::NegativeComponent, b.str());
    Triple cur = beta;
    auto perm = brun_sort(o, cur, track);
    auto push = [&](const Triple& s, const std::array<int, 3>& p) {
        rec.states.push_back(s);
        rec.digits.push_back({Int(p[0]), Int(p[1]), Int(p[2])});
    };
    push(cur, perm);
    auto has_zero = [](const Triple& s) { return s[0].is_zero() || s[1].is_zero() || s[2].is_zero(); };
    if (has_zero(cur)) {
        rec.status = RunStatus::Terminated;
        return rec;
    }
    RatioIndex seen;
    detect_period(o, rec, seen);
    for (long step = 0; step < max_iter; ++step) {
        Triple next{cur[0], cur[1], cur[2] - cur[1]};
        perm = brun_sort(o, next, track);
        push(next, perm);
        cur = next;
        if (has_zero(cur)) {
            rec.status = RunStatus::Terminated;
            return rec;
        }
        if (detect_period(o, rec, seen)) return rec;
    }
    rec.status = RunStatus::BoundExhausted;
    return rec;
}

AlgInt hasse_bernstein_unit(const Order& o, const ExpansionRecord& rec) {
    if (!rec.periodic() || !rec.period_unit) throw Error(Errc::NotPeriodic, "expansion is not periodic");
    if (rec.algorithm == Algorithm::iJPA) return *rec.period_unit;
    return o.unit_inverse(*rec.period_unit);
}

std::size_t semiconvergent_state_count(const ExpansionRecord& rec) {
    if (rec.periodic()) return static_cast<std::size_t>(rec.l0 + rec.l1);
    std::size_t n = rec.states.size();
    while (n > 0 && rec.states[n - 1][0].is_zero()) --n;
    return n;
}

std::vector<Semiconvergent> semiconvergents(const Order& o, const ExpansionRecord& rec) {
    std::vector<Semiconvergent> rows;
    std::size_t n = semiconvergent_state_count(rec);
    for (std::size_t k = 0; k < n; ++k) {
        const Triple& b = rec.states[k];
        for (int i = 2; i <= 3; ++i) {
            const Int& top = rec.digits[k][i - 2];
            for (Int j = 0; j < top; ++j) {
                AlgInt v = b[i - 1] - j * b[0];
                rows.push_back({static_cast<long>(k), i, j, v, o.norm(v)});
            }
        }
    }
    return rows;
}

std::vector<GeneralizedSemiconvergent> generalized_semiconvergents(const Order& o, const ExpansionRecord& rec) {
    std::vector<GeneralizedSemiconvergent> out;
    const int t = rec.tracking_root;
    std::size_t n = semiconvergent_state_count(rec);
    for (std::size_t k = 0; k < n; ++k) {
        const Triple& b = rec.states[k];
        for (int X = 1; X <= 2; ++X) {
            const int Y = 3 - X;
            const Int& B = rec.digits[k][X - 1];
            for (Int i = 1; i <= B - 1; ++i) {
                AlgInt base = b[X] - i * b[0];
                Signature s = o.signature(base);
                bool blocked = false;
                for (Int l = i + 1; l <= B - 1 && !blocked; ++l) {
                    AlgInt e = (l - i) * b[0] - b[Y];
                    blocked = !e.is_zero() && o.signature(e) == s;
                }
                if (blocked) continue;
                for (Int j = 0;; ++j) {
                    AlgInt e = base - j * b[Y];
                    if (e.is_zero() || o.sign(e, t) != s.s[t]) break;
                    if (o.signature(e) == s) out.push_back({static_cast<long>(k), X + 1, i, j, e});
                }
            }
        }
    }
    return out;
}

namespace {
std::vector<IntVec3> difference_generators(const Order& o, const std::vector<AlgInt>& S, const AlgInt& eps) {
    std::vector<IntVec3> gens;
    for (std::size_t i = 1; i < S.size(); ++i) gens.push_back(o.mul(eps, S[i] - S[0]).c);
    return gens;
}
}  // namespace

CoverReport lattice_cover_check(const Order& o, const ExpansionRecord& rec, long k, const std::vector<AlgInt>& S,
                                const AlgInt& eps, const Int& norm_bound, int coset) {
    CoverReport rep;
    if (k < 0 || static_cast<std::size_t>(k) >= rec.states.size()) throw Error(Errc::ParameterOutOfRange, "state index");
    if (coset != 1 && coset != 2) throw Error(Errc::ParameterOutOfRange, "coset representative must be beta2 or beta3");
    const Triple& b = rec.states[k];
    auto L = hermite_form({b[0].c, b[1].c});
    rep.lattice_matches = L == hermite_form(difference_generators(o, S, eps));
    rep.beta3_norm = o.norm(b[2]);
    rep.norm_hypothesis = abs(rep.beta3_norm) <= norm_bound;
    auto M = coset == 2 ? L : hermite_form({b[0].c, b[2].c});
    rep.covered = std::all_of(S.begin(), S.end(), [&](const AlgInt& s) {
        return lattice_contains(M, (o.mul(eps, s) - b[coset]).c);
    });
    if (!rep.lattice_matches)
        rep.verdict = CoverVerdict::HypothesisFails;
    else
        rep.verdict = rep.covered ? CoverVerdict::Covered : CoverVerdict::NotCovered;
    return rep;
}

std::vector<AlgInt> cover_units(const Order& o, const ExpansionRecord& rec, long k, const std::vector<AlgInt>& S,
                                long bound) {
    const auto& [u1, u2] = o.units();
    const Triple& b = rec.states.at(k);
    auto L = hermite_form({b[0].c, b[1].c});
    std::vector<AlgInt> out;
    for (long i = -bound; i <= bound; ++i)
        for (long j = -bound; j <= bound; ++j) {
            AlgInt e = o.mul(o.pow(u1, i), o.pow(u2, j));
            if (hermite_form(difference_generators(o, S, e)) == L) {
                out.push_back(e);
                out.push_back(-e);
            }
        }
    return out;
}

}  // namespace cubmcf
