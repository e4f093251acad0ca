#include <doctest.h>

#include <json.hpp>

#include "cubmcf/families.hpp"
#include "cubmcf/io.hpp"
#include "cubmcf/scan.hpp"

using namespace cubmcf;

TEST_CASE("expansion records survive a JSON round trip") {
    std::vector<ExpansionRecord> recs;
    {
        Order o = construct(FamilyId::ennola1(5));
        recs.push_back(jpa_expand(o, abs_power_vector(o, o.root_of_label("rho'")), o.root_of_label("rho'")));
        recs.push_back(jpa_expand(o, {AlgInt(1), AlgInt(2), AlgInt(3)}, 2));
    }
    {
        Order o = construct(FamilyId::simplest(4));
        recs.push_back(brun_expand(o, abs_power_vector(o, 2), 2, 40));
        int t = o.root_of_label("rho'");
        recs.push_back(ijpa_expand(o, abs_power_pair(o, t), t));
    }
    for (const auto& rec : recs) {
        INFO(to_string(rec.algorithm) << " " << to_string(rec.status));
        std::string text = record_to_json(rec);
        ExpansionRecord back = record_from_json(text);
        CHECK(back == rec);
        CHECK(record_to_json(back) == text);
        CHECK(record_to_json(back, -1) == record_to_json(rec, -1));
    }
    CHECK(recs[0].status == RunStatus::Periodic);
    CHECK(recs[1].status == RunStatus::Terminated);
    CHECK(recs[2].status == RunStatus::BoundExhausted);
    CHECK_FALSE(recs[3].istates.empty());
}

TEST_CASE("malformed records are parse errors") {
    CHECK_THROWS_AS(record_from_json("{"), Error);
    CHECK_THROWS_AS(record_from_json("{}"), Error);
    Order o = construct(FamilyId::ennola1(3));
    auto j = nlohmann::json::parse(record_to_json(jpa_expand(o, abs_power_vector(o, 2), 2)));
    j["algorithm"] = "euclid";
    CHECK_THROWS_AS(record_from_json(j.dump()), Error);
    j["algorithm"] = "jpa";
    j["states"][0][0] = {"1", "x", "0"};
    CHECK_THROWS_AS(record_from_json(j.dump()), Error);
}

TEST_CASE("the standard input vector takes the absolute value of the root") {
    Order o = construct(FamilyId::simplest(4));
    int neg = o.root_of_label("rho'"), pos = o.root_of_label("rho");
    CHECK(abs_power_vector(o, neg) == Triple{AlgInt(1), -AlgInt::x(), AlgInt::of(0, 0, 1)});
    CHECK(abs_power_vector(o, pos) == Triple{AlgInt(1), AlgInt::x(), AlgInt::of(0, 0, 1)});
}

TEST_CASE("field ingest") {
    const char* text = R"([
      {"poly": {"p": -1, "q": -2, "r": 1}, "units": [[0, 1, 0], [-2, 3, 3]], "root": 1.802, "note": "seven"},
      {"poly": {"p": 0, "q": "-3", "r": 1}, "root": 0.347}
    ])";
    auto fields = parse_field_ingest(text);
    REQUIRE(fields.size() == 2);
    CHECK(fields[0].poly == std::array<Int, 3>{Int(-1), Int(-2), Int(1)});
    REQUIRE(fields[0].units);
    CHECK(fields[0].units->second == AlgInt::of(-2, 3, 3));
    CHECK(fields[0].note == "seven");
    CHECK_FALSE(fields[1].units);
    CHECK(parse_field_ingest(field_ingest_json(fields)).size() == 2);
    CHECK(field_ingest_json(parse_field_ingest(field_ingest_json(fields))) == field_ingest_json(fields));

    CHECK_THROWS_AS(parse_field_ingest("{}"), Error);
    CHECK_THROWS_AS(parse_field_ingest(R"([{"poly": {"p": 0}}])"), Error);
    CHECK_THROWS_AS(parse_field_ingest(R"([{"poly": {"p":0,"q":-3,"r":1}, "root": 1, "units": [[1,2,3]]}])"), Error);

    CHECK_THROWS_AS(scan_field(fields[1], 10), Error);
    ScanRow row = scan_field(fields[0], 20);
    CHECK(row.discriminant == 49);
    CHECK(row.l0 == 1);
    CHECK(row.l1 == 2);
    CHECK(row.convergents_ok);
    CHECK(row.semiconvergents_ok);
    CHECK(scan_csv({row}) ==
          "discriminant,p,q,r,root,preperiod,period,conv,semiconv,status\n49,-1,-2,1,1.802,1,2,yes,yes,Periodic\n");
}

TEST_CASE("nearest root selection") {
    Order o(Int(0), Int(-3), Int(1));
    CHECK(nearest_root(o, 1.532) == 2);
    CHECK(nearest_root(o, 0.347) == 1);
    CHECK(nearest_root(o, -1.9) == 0);
}

TEST_CASE("report formats") {
    FamilyId f = FamilyId::ennola1(5);
    Order o = construct(f);
    auto j = nlohmann::json::parse(pythagoras_json(o, AlgInt::of(21, -1, 0)));
    CHECK(j["min_squares"] == 6);
    CHECK(j["squares"].size() == 11);
    CHECK(j["forced_decomposition"].size() == 6);
    CHECK(j["gamma"] == nlohmann::json::array({"21", "-1", "0"}));

    auto cat = catalog(f);
    auto cj = nlohmann::json::parse(catalog_json(cat, o));
    CHECK(cj["entries"].size() == cat.entries.size());
    CHECK(cj["entries"][0]["label"] == "1");

    int t = o.root_of_label("rho");
    ClassifyOptions opt{&cat, table_units(f, o, t), "rho", nullptr};
    auto c = classify_semiconvergents(o, jpa_expand(o, abs_power_vector(o, t), t), opt);
    std::string csv = classification_csv(c, "rho", "rho-1");
    CHECK(csv.rfind("k,i,j,v1,v2,v3,norm,indecomposable,label,unit,unit_sign,unit_k,unit_l,witness\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(c.rows.size()) + 1);
    auto jj = nlohmann::json::parse(classification_json(c, "rho", "rho-1"));
    CHECK(jj["rows"].size() == c.rows.size());
    CHECK(jj["semiconvergents_ok"] == false);
}
