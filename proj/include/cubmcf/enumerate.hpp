// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <functional>
#include <optional>

#include "cubmcf/order.hpp"

namespace cubmcf {

/// Visits every element v of the order with lo_i <= sigma_i(v) <= hi_i for
/// all i (possibly with a few extra points near the boundary; callers filter
/// exactly). Coordinate ranges come from the inverse Vandermonde matrix in
/// outward-rounded interval arithmetic. Stops early when `visit` returns false.
void enumerate_box(const Order& o, const std::array<Rat, 3>& lo, const std::array<Rat, 3>& hi,
                   const std::function<bool(const AlgInt&)>& visit);

/// Totally positive unit eta making the embeddings of eta * x roughly equal
/// in size; 1 when the order carries no unit data.
AlgInt balancing_unit(const Order& o, const AlgInt& x);

/// Some(n) when x = unit * n for a rational integer n > 0.
std::optional<Int> associated_rational(const Order& o, const AlgInt& x);

}  // namespace cubmcf
