// SPDX-License-Identifier: MIT
//
// cubmcf: command-line front end for expansions, semiconvergent tables,
// indecomposable catalogs, sums of squares and batch field scans.
//
// Exit codes: 0 success, 1 usage or input error, 2 expansion bound exhausted,
// 3 unit data missing.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubmcf/classify.hpp"
#include "cubmcf/families.hpp"
#include "cubmcf/io.hpp"
#include "cubmcf/scan.hpp"

using namespace cubmcf;

namespace {

enum Exit { Ok = 0, Usage = 1, Bound = 2, NoUnits = 3 };

struct Output {
    std::string format = "csv";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(Errc::Parse, "cannot write " + path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
};

void add_output(CLI::App* cmd, Output& out, const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", out.path, "Output file (default: stdout)");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Parse, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

AlgInt parse_elem(const std::string& s) {
    std::vector<Int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw Error(Errc::Parse, "bad integer '" + tok + "'");
        }
    }
    if (v.size() != 3) throw Error(Errc::Parse, "expected three coordinates in '" + s + "'");
    return AlgInt(v[0], v[1], v[2]);
}

std::vector<AlgInt> parse_elems(const std::string& s) {
    std::string spaced = s;
    std::replace(spaced.begin(), spaced.end(), ';', ' ');
    std::vector<AlgInt> out;
    std::stringstream ss(spaced);
    std::string tok;
    while (ss >> tok) out.push_back(parse_elem(tok));
    return out;
}

std::string default_root(const FamilyId& f) {
    switch (f.kind) {
        case FamilyKind::EnnolaII: return "psi";
        case FamilyKind::Generic: return "t2";
        default: return "rho";
    }
}

struct Target {
    std::string family;
    std::string root;
    double root_value = 0;
    bool by_value = false;

    FamilyId id() const { return FamilyId::parse(family); }
    int track(const Order& o) const { return by_value ? nearest_root(o, root_value) : o.root_of_label(root); }
};

void add_target(CLI::App* cmd, Target& t) {
    cmd->add_option("--family", t.family, "Family spec, e.g. ennola1:a=5 or generic:p=0,q=-3,r=1")->required();
    auto* label = cmd->add_option("--root", t.root, "Root label (rho, rho', psi'', t0, ...)");
    cmd->add_option("--root-value", t.root_value, "Pick the real root nearest to this value")->excludes(label);
}

std::string expansion_csv(const ExpansionRecord& rec) {
    std::ostringstream os;
    if (rec.algorithm == Algorithm::iJPA) {
        os << "k,a1,a2,theta1_v1,theta1_v2,theta1_v3,theta2_v1,theta2_v2,theta2_v3\n";
        for (std::size_t k = 0; k < rec.istates.size(); ++k) {
            os << k;
            for (int d = 0; d < 2; ++d) os << ',' << (k < rec.digits.size() ? rec.digits[k][d].get_str() : "");
            for (const auto& th : rec.istates[k])
                for (const auto& c : th.c) os << ',' << c;
            os << '\n';
        }
    } else {
        os << "k,d1,d2,d3,beta1_v1,beta1_v2,beta1_v3,beta2_v1,beta2_v2,beta2_v3,beta3_v1,beta3_v2,beta3_v3\n";
        for (std::size_t k = 0; k < rec.states.size(); ++k) {
            os << k;
            for (std::size_t d = 0; d < 3; ++d)
                os << ',' << (k < rec.digits.size() && d < rec.digits[k].size() ? rec.digits[k][d].get_str() : "");
            for (const auto& b : rec.states[k])
                for (const auto& c : b.c) os << ',' << c;
            os << '\n';
        }
    }
    return os.str();
}

void summary(const ExpansionRecord& rec) {
    std::cerr << "status=" << to_string(rec.status) << " l0=" << rec.l0 << " l1=" << rec.l1 << '\n';
}

int cmd_expand(Target t, const std::string& algo, const std::string& vector, long max_iter, const Output& out) {
    FamilyId f = t.id();
    Order o = construct(f);
    if (t.root.empty() && !t.by_value) t.root = default_root(f);
    int track = t.track(o);
    ExpansionRecord rec;
    if (algo == "ijpa") {
        FieldPair theta = abs_power_pair(o, track);
        if (!vector.empty()) {
            auto v = parse_elems(vector);
            if (v.size() != 2) throw Error(Errc::Parse, "ijpa takes two elements");
            theta = {FieldElem(v[0]), FieldElem(v[1])};
        }
        rec = ijpa_expand(o, theta, track, max_iter);
    } else {
        Triple beta = abs_power_vector(o, track);
        if (!vector.empty()) {
            auto v = parse_elems(vector);
            if (v.size() != 3) throw Error(Errc::Parse, "jpa and brun take three elements");
            beta = {v[0], v[1], v[2]};
        }
        rec = algo == "brun" ? brun_expand(o, beta, track, max_iter) : jpa_expand(o, beta, track, max_iter);
    }
    out.write(out.format == "json" ? record_to_json(rec) : expansion_csv(rec));
    summary(rec);
    return rec.status == RunStatus::BoundExhausted ? Bound : Ok;
}

int cmd_classify(Target t, long trace_bound, long max_iter, const Output& out) {
    FamilyId f = t.id();
    Order o = construct(f);
    if (!o.has_units()) throw Error(Errc::MissingUnits, f.str() + " has no unit data; pass u1=..,u2=..");
    if (t.root.empty() && !t.by_value) t.root = default_root(f);
    int track = t.track(o);
    ExpansionRecord rec = jpa_expand(o, abs_power_vector(o, track), track, max_iter);
    summary(rec);
    if (rec.status == RunStatus::BoundExhausted) return Bound;

    ClassifyOptions opt;
    opt.root_label = o.labels()[track];
    std::optional<IndecomposableCatalog> cat;
    std::string u1 = "u1", u2 = "u2";
    if (f.kind == FamilyKind::SimplestCubic || f.kind == FamilyKind::EnnolaI || f.kind == FamilyKind::EnnolaII) {
        cat = catalog(f);
        opt.catalog = &*cat;
        opt.exponent_units = table_units(f, o, track);
        if (f.kind == FamilyKind::SimplestCubic) {
            u1 = "rho", u2 = "rho'";
        } else {
            u1 = f.kind == FamilyKind::EnnolaI ? "rho" : "R";
            u2 = u1 + "-1";
        }
    }
    std::vector<AlgInt> harvest;
    if (trace_bound > 0) {
        harvest = harvest_indecomposables(o, trace_bound);
        opt.harvest = &harvest;
    }
    Classification c = classify_semiconvergents(o, rec, opt);
    out.write(out.format == "json" ? classification_json(c, u1, u2) : classification_csv(c, u1, u2));
    std::cerr << "conv=" << (c.convergents_ok ? "yes" : "no") << " semiconv=" << (c.semiconvergents_ok ? "yes" : "no")
              << '\n';
    return Ok;
}

int cmd_catalog(const std::string& family, const Output& out) {
    FamilyId f = FamilyId::parse(family);
    Order o = construct(f);
    IndecomposableCatalog c = catalog(f);
    out.write(out.format == "json" ? catalog_json(c, o) : catalog_csv(c, o));
    return Ok;
}

int cmd_pythagoras(const std::string& family, const std::string& gamma, int cap, const Output& out) {
    FamilyId f = FamilyId::parse(family);
    Order o = construct(f);
    AlgInt g;
    if (!gamma.empty()) {
        g = parse_elem(gamma);
    } else if (f.kind == FamilyKind::EnnolaI) {
        long a = f.a;
        g = a == 3 ? AlgInt::of(9, -1, 0) : AlgInt::of(a * a - 3 * a + 11, -(a * a - 5 * a + 1), -(a - 5));
    } else {
        throw Error(Errc::Parse, "--gamma is required outside the ennola1 family");
    }
    out.write(pythagoras_json(o, g, cap));
    return Ok;
}

int cmd_scan(const std::string& input, long trace_bound, unsigned jobs, long max_iter, const Output& out) {
    auto fields = parse_field_ingest(read_file(input));
    auto rows = scan_fields(fields, trace_bound, jobs, max_iter);
    out.write(out.format == "json" ? scan_json(rows) : scan_csv(rows));
    for (const auto& r : rows)
        if (r.status == RunStatus::BoundExhausted) return Bound;
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued fractions and indecomposables in cubic orders"};
    app.require_subcommand(1);
    long max_iter = default_max_iter();
    app.add_option("--max-iter", max_iter, "Iteration bound (default 1000 or $MCF_MAX_ITER)")->check(CLI::PositiveNumber);

    Target et;
    std::string algo = "jpa", vector;
    Output eo;
    auto* expand = app.add_subcommand("expand", "Run an expansion and print its record");
    add_target(expand, et);
    expand->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember({"jpa", "ijpa", "brun"}));
    expand->add_option("--vector", vector, "Raw input 'c0,c1,c2;c0,c1,c2;...' (';' or spaces between elements) instead of (1,|t|,t^2)");
    expand->add_option("--max-iter", max_iter, "Iteration bound")->check(CLI::PositiveNumber);
    add_output(expand, eo, "json");

    Target ct;
    long trace_bound = 0;
    Output co;
    auto* classify = app.add_subcommand("classify", "Classify the semiconvergents of the JPA expansion of (1,|t|,t^2)");
    add_target(classify, ct);
    classify->add_option("--trace-bound", trace_bound, "Harvest totally positive indecomposables up to this trace");
    classify->add_option("--max-iter", max_iter, "Iteration bound")->check(CLI::PositiveNumber);
    add_output(classify, co, "csv");

    std::string cat_family;
    Output cato;
    auto* cat = app.add_subcommand("catalog", "List indecomposable representatives of a family");
    cat->add_option("--family", cat_family, "Family spec")->required();
    add_output(cat, cato, "csv");

    std::string py_family, gamma;
    int cap = 8;
    Output pyo;
    auto* py = app.add_subcommand("pythagoras", "Squares below gamma and the minimal number of squares");
    py->add_option("--family", py_family, "Family spec")->required();
    py->add_option("--gamma", gamma, "Element 'c0,c1,c2' (default: the ennola1 test element)");
    py->add_option("--cap", cap, "Search cap")->check(CLI::PositiveNumber);
    add_output(py, pyo, "json");

    std::string input;
    long scan_bound = 60;
    unsigned jobs = 1;
    Output so;
    auto* scan = app.add_subcommand("scan", "Expand and classify every field of an ingest file");
    scan->add_option("--input", input, "Ingest JSON")->required()->check(CLI::ExistingFile);
    scan->add_option("--trace-bound", scan_bound, "Harvest trace bound");
    scan->add_option("--jobs", jobs, "Fields processed in parallel")->check(CLI::PositiveNumber);
    scan->add_option("--max-iter", max_iter, "Iteration bound")->check(CLI::PositiveNumber);
    add_output(scan, so, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        et.by_value = expand->count("--root-value") > 0;
        ct.by_value = classify->count("--root-value") > 0;
        if (*expand) return cmd_expand(et, algo, vector, max_iter, eo);
        if (*classify) return cmd_classify(ct, trace_bound, max_iter, co);
        if (*cat) return cmd_catalog(cat_family, cato);
        if (*py) return cmd_pythagoras(py_family, gamma, cap, pyo);
        if (*scan) return cmd_scan(input, scan_bound, jobs, max_iter, so);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::MissingUnits ? NoUnits : Usage;
    }
    return Usage;
}
