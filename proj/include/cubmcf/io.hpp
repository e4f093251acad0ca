// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "cubmcf/classify.hpp"
#include "cubmcf/pythagoras.hpp"

namespace cubmcf {

/// Expansion records as JSON. Integers are written as decimal strings and
/// rationals as "n/d", so parsing the output gives back an equal record.
std::string record_to_json(const ExpansionRecord& rec, int indent = 2);
/// Throws Parse.
ExpansionRecord record_from_json(const std::string& text);
bool operator==(const ExpansionRecord& a, const ExpansionRecord& b);

/// CSV: k,i,j,v1,v2,v3,norm,indecomposable,label,unit,unit_sign,unit_k,unit_l,witness
/// `u1` and `u2` name the exponent units in the "unit" column.
std::string classification_csv(const Classification& c, const std::string& u1, const std::string& u2);
std::string classification_json(const Classification& c, const std::string& u1, const std::string& u2);

std::string catalog_json(const IndecomposableCatalog& c, const Order& o);

/// {"gamma":[..], "squares":[..], "min_squares":.., "forced_decomposition":[..]}
/// "forced_decomposition" lists the squares of the unique minimal
/// decomposition, or is empty when the minimum is attained in several ways.
std::string pythagoras_json(const Order& o, const AlgInt& gamma, int cap = 8);

}  // namespace cubmcf
