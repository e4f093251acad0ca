// SPDX-License-Identifier: MIT
#include "cubmcf/io.hpp"

#include <json.hpp>
#include <sstream>

namespace cubmcf {

using nlohmann::json;

namespace {

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

Int to_int(const json& j) {
    try {
        if (j.is_number_integer()) return Int(j.get<long>());
        return Int(j.get<std::string>());
    } catch (const std::exception& e) {
        throw Error(Errc::Parse, std::string("bad integer in record: ") + e.what());
    }
}

Rat to_rat(const json& j) {
    try {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    } catch (const std::exception& e) {
        throw Error(Errc::Parse, std::string("bad rational in record: ") + e.what());
    }
}

json elem(const AlgInt& a) { return json::array({str(a[0]), str(a[1]), str(a[2])}); }
json elem(const FieldElem& a) { return json::array({str(a.c[0]), str(a.c[1]), str(a.c[2])}); }
AlgInt alg(const json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(Errc::Parse, "element needs three coordinates");
    return AlgInt(to_int(j[0]), to_int(j[1]), to_int(j[2]));
}
FieldElem field(const json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(Errc::Parse, "element needs three coordinates");
    return FieldElem(to_rat(j[0]), to_rat(j[1]), to_rat(j[2]));
}

Algorithm algorithm_of(const std::string& s) {
    for (auto a : {Algorithm::iJPA, Algorithm::JPA, Algorithm::Brun})
        if (to_string(a) == s) return a;
    throw Error(Errc::Parse, "unknown algorithm '" + s + "'");
}

RunStatus status_of(const std::string& s) {
    for (auto v : {RunStatus::Periodic, RunStatus::BoundExhausted, RunStatus::Terminated})
        if (to_string(v) == s) return v;
    throw Error(Errc::Parse, "unknown status '" + s + "'");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

json row_json(const SemiconvergentRow& r, const std::string& u1, const std::string& u2) {
    json j{{"k", r.sc.k},
           {"i", r.sc.i},
           {"j", str(r.sc.j)},
           {"value", elem(r.sc.value)},
           {"norm", str(r.sc.norm)},
           {"indecomposable", r.indecomposable},
           {"label", r.label}};
    if (r.unit) {
        j["unit"] = unit_str(*r.unit, u1, u2);
        j["unit_exponents"] = {r.unit->sign, r.unit->k, r.unit->l};
    }
    if (r.witness) j["witness"] = {elem(r.witness->parts.first), elem(r.witness->parts.second)};
    return j;
}

}  // namespace

std::string record_to_json(const ExpansionRecord& rec, int indent) {
    json j;
    j["algorithm"] = to_string(rec.algorithm);
    j["tracking_root"] = rec.tracking_root;
    j["status"] = to_string(rec.status);
    j["l0"] = rec.l0;
    j["l1"] = rec.l1;
    j["period_unit"] = rec.period_unit ? elem(*rec.period_unit) : json(nullptr);
    j["states"] = json::array();
    for (const auto& t : rec.states) j["states"].push_back({elem(t[0]), elem(t[1]), elem(t[2])});
    j["istates"] = json::array();
    for (const auto& p : rec.istates) j["istates"].push_back({elem(p[0]), elem(p[1])});
    j["digits"] = json::array();
    for (const auto& d : rec.digits) {
        json row = json::array();
        for (const auto& v : d) row.push_back(str(v));
        j["digits"].push_back(row);
    }
    return j.dump(indent);
}

ExpansionRecord record_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
    ExpansionRecord rec;
    try {
        rec.algorithm = algorithm_of(j.at("algorithm").get<std::string>());
        rec.tracking_root = j.at("tracking_root").get<int>();
        rec.status = status_of(j.at("status").get<std::string>());
        rec.l0 = j.at("l0").get<long>();
        rec.l1 = j.at("l1").get<long>();
        if (!j.at("period_unit").is_null()) rec.period_unit = alg(j["period_unit"]);
        for (const auto& t : j.at("states")) rec.states.push_back({alg(t.at(0)), alg(t.at(1)), alg(t.at(2))});
        for (const auto& p : j.at("istates")) rec.istates.push_back({field(p.at(0)), field(p.at(1))});
        for (const auto& d : j.at("digits")) {
            std::vector<Int> row;
            for (const auto& v : d) row.push_back(to_int(v));
            rec.digits.push_back(std::move(row));
        }
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
    return rec;
}

bool operator==(const ExpansionRecord& a, const ExpansionRecord& b) {
    return a.algorithm == b.algorithm && a.tracking_root == b.tracking_root && a.status == b.status &&
           a.l0 == b.l0 && a.l1 == b.l1 && a.period_unit == b.period_unit && a.states == b.states &&
           a.istates == b.istates && a.digits == b.digits;
}

std::string classification_csv(const Classification& c, const std::string& u1, const std::string& u2) {
    std::ostringstream os;
    os << "k,i,j,v1,v2,v3,norm,indecomposable,label,unit,unit_sign,unit_k,unit_l,witness\n";
    for (const auto& r : c.rows) {
        const auto& v = r.sc.value;
        os << r.sc.k << ',' << r.sc.i << ',' << r.sc.j << ',' << v[0] << ',' << v[1] << ',' << v[2] << ','
           << r.sc.norm << ',' << (r.indecomposable ? 1 : 0) << ',' << csv_field(r.label) << ',';
        if (r.unit)
            os << csv_field(unit_str(*r.unit, u1, u2)) << ',' << r.unit->sign << ',' << r.unit->k << ','
               << r.unit->l;
        else
            os << ",,,";
        os << ',';
        if (r.witness) os << csv_field(r.witness->parts.first.str() + "+" + r.witness->parts.second.str());
        os << '\n';
    }
    return os.str();
}

std::string classification_json(const Classification& c, const std::string& u1, const std::string& u2) {
    json j{{"convergents_ok", c.convergents_ok}, {"semiconvergents_ok", c.semiconvergents_ok}};
    j["rows"] = json::array();
    for (const auto& r : c.rows) j["rows"].push_back(row_json(r, u1, u2));
    return j.dump(2);
}

std::string catalog_json(const IndecomposableCatalog& c, const Order& o) {
    json j{{"family", c.family.str()}, {"entries", json::array()}};
    std::string root = c.family.kind == FamilyKind::EnnolaII ? "psi" : "rho";
    for (const auto& e : c.entries) {
        Signature s = o.signature(e.value);
        std::string sig;
        for (int v : s.s) sig += v > 0 ? '+' : '-';
        j["entries"].push_back({{"label", e.label(root)},
                                {"value", elem(e.value)},
                                {"norm", str(o.norm(e.value))},
                                {"trace", str(o.trace(e.value))},
                                {"signature", sig}});
    }
    return j.dump(2);
}

std::string pythagoras_json(const Order& o, const AlgInt& gamma, int cap) {
    SquareSet set = squares_below(o, gamma);
    MinSquaresResult m = min_squares(o, set, cap);
    json j{{"gamma", elem(gamma)}, {"squares", json::array()}, {"forced_decomposition", json::array()}};
    for (const auto& s : set.squares) j["squares"].push_back(elem(s));
    switch (m.outcome) {
        case SquaresOutcome::Found: {
            j["min_squares"] = m.count;
            auto all = decompositions_of_length(o, set, m.count);
            if (all.size() == 1)
                for (const auto& s : all.front()) j["forced_decomposition"].push_back(elem(s));
            break;
        }
        case SquaresOutcome::MoreThanCap: j["min_squares"] = "MoreThanCap"; break;
        case SquaresOutcome::NoRepresentation: j["min_squares"] = "NoRepresentation"; break;
    }
    return j.dump(2);
}

}  // namespace cubmcf
