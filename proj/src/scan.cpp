// SPDX-License-Identifier: MIT
#include "cubmcf/scan.hpp"

#include <atomic>
#include <cmath>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "cubmcf/classify.hpp"

namespace cubmcf {

using nlohmann::json;

namespace {

Int json_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error(Errc::Parse, "expected an integer, got " + j.dump());
}

AlgInt json_elem(const json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(Errc::Parse, "a unit needs three coordinates");
    return AlgInt(json_int(j[0]), json_int(j[1]), json_int(j[2]));
}

json elem_json(const AlgInt& a) { return json::array({a[0].get_si(), a[1].get_si(), a[2].get_si()}); }

}  // namespace

std::vector<FieldEntry> parse_field_ingest(const std::string& text) {
    std::vector<FieldEntry> out;
    try {
        json j = json::parse(text);
        if (!j.is_array()) throw Error(Errc::Parse, "ingest file must hold a JSON array");
        for (const auto& e : j) {
            FieldEntry f;
            const auto& p = e.at("poly");
            f.poly = {json_int(p.at("p")), json_int(p.at("q")), json_int(p.at("r"))};
            if (e.contains("units") && !e["units"].is_null()) {
                const auto& u = e["units"];
                if (!u.is_array() || u.size() != 2) throw Error(Errc::Parse, "units must be a pair");
                f.units = std::make_pair(json_elem(u[0]), json_elem(u[1]));
            }
            f.root = e.at("root").get<double>();
            if (e.contains("note")) f.note = e["note"].get<std::string>();
            out.push_back(std::move(f));
        }
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
    return out;
}

std::string field_ingest_json(const std::vector<FieldEntry>& fields) {
    json j = json::array();
    for (const auto& f : fields) {
        json e{{"poly", {{"p", f.poly[0].get_si()}, {"q", f.poly[1].get_si()}, {"r", f.poly[2].get_si()}}},
               {"root", f.root}};
        if (f.units) e["units"] = {elem_json(f.units->first), elem_json(f.units->second)};
        if (!f.note.empty()) e["note"] = f.note;
        j.push_back(e);
    }
    return j.dump(2);
}

int nearest_root(const Order& o, double value) {
    int best = 0;
    long double gap = INFINITY;
    for (int i = 0; i < 3; ++i) {
        long double d = std::fabs(o.approx(AlgInt::x(), i) - value);
        if (d < gap) gap = d, best = i;
    }
    return best;
}

ScanRow scan_field(const FieldEntry& f, long trace_bound, long max_iter, unsigned jobs) {
    if (!f.units) throw Error(Errc::MissingUnits, "field entry without a unit pair");
    Order o(f.poly[0], f.poly[1], f.poly[2]);
    o.set_units(f.units->first, f.units->second);
    ScanRow row;
    row.field = f;
    row.discriminant = o.discriminant();
    row.track = nearest_root(o, f.root);
    ExpansionRecord rec = jpa_expand(o, abs_power_vector(o, row.track), row.track, max_iter);
    row.status = rec.status;
    row.l0 = rec.l0;
    row.l1 = rec.l1;
    auto harvest = harvest_indecomposables(o, trace_bound, jobs);
    row.harvest = harvest.size();
    ClassifyOptions opt;
    opt.harvest = &harvest;
    Classification c = classify_semiconvergents(o, rec, opt);
    row.convergents_ok = c.convergents_ok;
    row.semiconvergents_ok = c.semiconvergents_ok;
    row.rows = c.rows.size();
    return row;
}

std::vector<ScanRow> scan_fields(const std::vector<FieldEntry>& fields, long trace_bound, unsigned jobs,
                                 long max_iter) {
    std::vector<ScanRow> out(fields.size());
    std::vector<std::exception_ptr> errors(fields.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < fields.size();) {
            try {
                out[i] = scan_field(fields[i], trace_bound, max_iter);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::max(1u, jobs); ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "discriminant,p,q,r,root,preperiod,period,conv,semiconv,status\n";
    for (const auto& r : rows) {
        os << r.discriminant << ',' << r.field.poly[0] << ',' << r.field.poly[1] << ',' << r.field.poly[2] << ','
           << r.field.root << ',' << r.l0 << ',' << r.l1 << ',' << (r.convergents_ok ? "yes" : "no") << ','
           << (r.semiconvergents_ok ? "yes" : "no") << ',' << to_string(r.status) << '\n';
    }
    return os.str();
}

std::string scan_json(const std::vector<ScanRow>& rows) {
    json j = json::array();
    for (const auto& r : rows)
        j.push_back({{"discriminant", r.discriminant.get_str()},
                     {"poly", {{"p", r.field.poly[0].get_si()}, {"q", r.field.poly[1].get_si()}, {"r", r.field.poly[2].get_si()}}},
                     {"root", r.field.root},
                     {"note", r.field.note},
                     {"status", to_string(r.status)},
                     {"preperiod", r.l0},
                     {"period", r.l1},
                     {"convergents_ok", r.convergents_ok},
                     {"semiconvergents_ok", r.semiconvergents_ok},
                     {"rows", r.rows},
                     {"harvest", r.harvest}});
    return j.dump(2);
}

}  // namespace cubmcf
