// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubmcf/indecomposables.hpp"
#include "cubmcf/mcf.hpp"

namespace cubmcf {

struct SemiconvergentRow {
    Semiconvergent sc;
    bool indecomposable = false;
    /// Catalog entry index and label when the row is associated with one.
    std::optional<std::size_t> entry;
    std::string label;
    /// value = unit * entry, the unit written as sign * u1^k * u2^l.
    std::optional<UnitDecomposition> unit;
    std::optional<DecompositionWitness> witness;
};

struct ClassifyOptions {
    const IndecomposableCatalog* catalog = nullptr;
    /// Units used for the exponent column; defaults to the order's units.
    std::optional<std::pair<AlgInt, AlgInt>> exponent_units;
    /// Root label used to decorate catalog labels (e.g. "rho'").
    std::string root_label = "rho";
    /// Known totally positive indecomposables (a trace-bounded harvest);
    /// association with one of them settles a row without the oracle.
    const std::vector<AlgInt>* harvest = nullptr;
};

struct Classification {
    std::vector<SemiconvergentRow> rows;
    /// Every beta_i^(k) (i = 1..3) over the covered states is indecomposable.
    bool convergents_ok = true;
    /// Every row is indecomposable.
    bool semiconvergents_ok = true;
};

/// Settles one element: catalog association first, then the harvest, then
/// the exhaustive oracle.
SemiconvergentRow classify_element(const Order& o, const AlgInt& x, const ClassifyOptions& opt);

/// Classifies every semiconvergent of a JPA record. Throws MissingUnits when
/// the order carries no unit data.
Classification classify_semiconvergents(const Order& o, const ExpansionRecord& rec, const ClassifyOptions& opt);

/// Totally positive indecomposables of trace at most T, sorted by trace then
/// coordinates. Work is split across `jobs` threads.
std::vector<AlgInt> harvest_indecomposables(const Order& o, long T, unsigned jobs = 1);

/// "rho^-2 rho'^-2"-style rendering of sign * u1^k * u2^l.
std::string unit_str(const UnitDecomposition& d, const std::string& u1, const std::string& u2);

}  // namespace cubmcf
