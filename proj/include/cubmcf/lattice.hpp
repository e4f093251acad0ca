// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <vector>

#include "cubmcf/ival.hpp"

namespace cubmcf {

using IntVec3 = std::array<Int, 3>;

/// Row-style Hermite normal form of the lattice spanned by `gens` in Z^3.
/// Pivots are positive and entries above each pivot are reduced into
/// [0, pivot), so two generating sets span the same lattice exactly when
/// their forms coincide.
std::vector<IntVec3> hermite_form(std::vector<IntVec3> gens);

bool lattice_contains(const std::vector<IntVec3>& hnf, IntVec3 v);

}  // namespace cubmcf
