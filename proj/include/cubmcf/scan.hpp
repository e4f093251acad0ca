// SPDX-License-Identifier: MIT
//
// Batch experiment over ingested fields: for each polynomial and chosen root,
// expand (1, |t|, t^2), harvest totally positive indecomposables up to a trace
// bound and decide whether every convergent and semiconvergent is
// indecomposable in its signature.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubmcf/mcf.hpp"

namespace cubmcf {

struct FieldEntry {
    std::array<Int, 3> poly;  // x^3 + p x^2 + q x + r
    std::optional<std::pair<AlgInt, AlgInt>> units;
    /// Approximate value of the root to expand; the nearest real root is used.
    double root = 0;
    std::string note;
};

/// JSON array of {"poly":{"p":..,"q":..,"r":..}, "units":[[..],[..]], "root":.., "note":..}.
/// "units" and "note" are optional. Throws Parse.
std::vector<FieldEntry> parse_field_ingest(const std::string& json);
std::string field_ingest_json(const std::vector<FieldEntry>& fields);

/// Ascending root index closest to `value`.
int nearest_root(const Order& o, double value);

struct ScanRow {
    FieldEntry field;
    Int discriminant;
    int track = 0;
    RunStatus status = RunStatus::BoundExhausted;
    long l0 = -1, l1 = -1;
    bool convergents_ok = false;
    bool semiconvergents_ok = false;
    std::size_t rows = 0;
    std::size_t harvest = 0;
};

/// Throws MissingUnits when the entry has no unit pair.
ScanRow scan_field(const FieldEntry& f, long trace_bound, long max_iter = default_max_iter(), unsigned jobs = 1);
/// Fields are processed `jobs` at a time; output order follows input order.
std::vector<ScanRow> scan_fields(const std::vector<FieldEntry>& fields, long trace_bound, unsigned jobs = 1,
                                 long max_iter = default_max_iter());

/// CSV: discriminant,p,q,r,root,preperiod,period,conv,semiconv,status
std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::vector<ScanRow>& rows);

}  // namespace cubmcf
