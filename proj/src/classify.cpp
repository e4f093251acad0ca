// SPDX-License-Identifier: MIT
#include "cubmcf/classify.hpp"

#include <algorithm>
#include <thread>

#include "cubmcf/enumerate.hpp"

namespace cubmcf {

namespace {

std::string power(const std::string& base, long e) {
    if (e == 0) return "";
    std::string b = base.size() > 1 && base.find_first_of("+-") != std::string::npos ? "(" + base + ")" : base;
    return e == 1 ? b : b + "^" + std::to_string(e);
}

}  // namespace

std::string unit_str(const UnitDecomposition& d, const std::string& u1, const std::string& u2) {
    std::string a = power(u1, d.k), b = power(u2, d.l);
    std::string body = a.empty() ? b : b.empty() ? a : a + " " + b;
    if (body.empty()) body = "1";
    return d.sign < 0 ? "-" + body : body;
}

SemiconvergentRow classify_element(const Order& o, const AlgInt& x, const ClassifyOptions& opt) {
    SemiconvergentRow row;
    row.sc.value = x;
    row.sc.norm = o.norm(x);
    const auto& units = opt.exponent_units ? *opt.exponent_units : o.units();
    if (opt.catalog) {
        if (auto hit = find_in_catalog(o, *opt.catalog, x)) {
            row.indecomposable = true;
            row.entry = hit->first;
            row.label = opt.catalog->entries[hit->first].label(opt.root_label);
            row.unit = o.unit_decompose(hit->second, units.first, units.second);
            return row;
        }
    }
    if (opt.harvest) {
        Int n = abs(row.sc.norm);
        for (const auto& h : *opt.harvest) {
            if (abs(o.norm(h)) != n) continue;
            if (auto e = o.is_associated(x, h)) {
                row.indecomposable = true;
                row.unit = o.unit_decompose(*e, units.first, units.second);
                return row;
            }
        }
    }
    row.witness = is_decomposable(o, x);
    row.indecomposable = !row.witness;
    return row;
}

Classification classify_semiconvergents(const Order& o, const ExpansionRecord& rec, const ClassifyOptions& opt) {
    if (!o.has_units() && !opt.exponent_units)
        throw Error(Errc::MissingUnits, "classification needs a unit pair");
    Classification out;
    for (const auto& sc : semiconvergents(o, rec)) {
        SemiconvergentRow row = classify_element(o, sc.value, opt);
        row.sc = sc;
        out.semiconvergents_ok = out.semiconvergents_ok && row.indecomposable;
        if (sc.j == 0) out.convergents_ok = out.convergents_ok && row.indecomposable;
        out.rows.push_back(std::move(row));
    }
    // beta_1^(k) is not a row itself
    std::size_t n = semiconvergent_state_count(rec);
    for (std::size_t k = 0; k < n && out.convergents_ok; ++k)
        out.convergents_ok = classify_element(o, rec.states[k][0], opt).indecomposable;
    return out;
}

std::vector<AlgInt> harvest_indecomposables(const Order& o, long T, unsigned jobs) {
    std::vector<AlgInt> tp;
    std::array<Rat, 3> lo{Rat(0), Rat(0), Rat(0)}, hi{Rat(T), Rat(T), Rat(T)};
    enumerate_box(o, lo, hi, [&](const AlgInt& x) {
        if (x.is_zero()) return true;
        Int tr = o.trace(x);
        if (tr <= 0 || tr > T) return true;
        if (o.totally_positive(x)) tp.push_back(x);
        return true;
    });
    std::vector<char> keep(tp.size(), 0);
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < tp.size(); i += jobs) keep[i] = !is_decomposable(o, tp[i]);
        });
    for (auto& th : pool) th.join();
    std::vector<AlgInt> out;
    for (std::size_t i = 0; i < tp.size(); ++i)
        if (keep[i]) out.push_back(tp[i]);
    std::sort(out.begin(), out.end(), [&](const AlgInt& a, const AlgInt& b) {
        Int ta = o.trace(a), tb = o.trace(b);
        return ta != tb ? ta < tb : a < b;
    });
    return out;
}

}  // namespace cubmcf
