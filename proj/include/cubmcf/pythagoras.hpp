// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "cubmcf/order.hpp"

namespace cubmcf {

/// Every square w^2 with w^2 totally below `target` (w != 0, one of +-w kept).
/// Entries are ordered by descending trace, then by coordinates.
struct SquareSet {
    AlgInt target;
    std::vector<AlgInt> roots;
    std::vector<AlgInt> squares;
};

/// Throws NotTotallyPositive.
SquareSet squares_below(const Order& o, const AlgInt& gamma);

/// True when the squares of `parts` sum to gamma.
bool verify_representation(const Order& o, const AlgInt& gamma, const std::vector<AlgInt>& parts);

enum class SquaresOutcome { Found, MoreThanCap, NoRepresentation };

struct MinSquaresResult {
    SquaresOutcome outcome = SquaresOutcome::NoRepresentation;
    int count = 0;
    std::vector<AlgInt> decomposition;  // the squares used, in search order
};

MinSquaresResult min_squares(const Order& o, const SquareSet& set, int cap = 8);
inline MinSquaresResult min_squares(const Order& o, const AlgInt& gamma, int cap = 8) {
    return min_squares(o, squares_below(o, gamma), cap);
}

/// All multisets of exactly `count` squares from the set that sum to the target.
std::vector<std::vector<AlgInt>> decompositions_of_length(const Order& o, const SquareSet& set, int count);

/// Minimal number of squares needed for gamma, after checking that `witness`
/// squares to gamma. This is a lower bound on the Pythagoras number. Throws
/// DecompositionNotFound when the witness fails, or when the minimum exceeds cap.
int pythagoras_lower_bound(const Order& o, const AlgInt& gamma, const std::vector<AlgInt>& witness, int cap = 8);

}  // namespace cubmcf
