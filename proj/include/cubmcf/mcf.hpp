// SPDX-License-Identifier: MIT
//
// Multidimensional continued fractions over a cubic order: the inhomogeneous
// and homogeneous Jacobi-Perron algorithms and Brun's algorithm, each with
// periodicity detection, plus semiconvergent generation and classification.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubmcf/order.hpp"

namespace cubmcf {

enum class Algorithm { iJPA, JPA, Brun };
enum class RunStatus { Periodic, BoundExhausted, Terminated };

std::string to_string(Algorithm a);
std::string to_string(RunStatus s);

using Triple = std::array<AlgInt, 3>;
using FieldPair = std::array<FieldElem, 2>;

struct ExpansionRecord {
    Algorithm algorithm = Algorithm::JPA;
    int tracking_root = 0;
    std::vector<Triple> states;      // JPA and Brun
    std::vector<FieldPair> istates;  // iJPA
    /// JPA: b^(k) = (b2, b3); iJPA: a^(k) = (a1, a2); Brun: the sort
    /// permutation applied to reach state k, as 0-based source positions.
    std::vector<std::vector<Int>> digits;
    long l0 = -1, l1 = -1;
    /// JPA/Brun: eps with beta^(k + l1) = eps * beta^(k). iJPA: the
    /// Hasse-Bernstein unit.
    std::optional<AlgInt> period_unit;
    RunStatus status = RunStatus::BoundExhausted;

    bool periodic() const { return status == RunStatus::Periodic; }
    std::size_t size() const { return algorithm == Algorithm::iJPA ? istates.size() : states.size(); }
};

/// Default iteration bound: 1000, overridable with the MCF_MAX_ITER environment variable.
long default_max_iter();

ExpansionRecord jpa_expand(const Order& o, const Triple& beta, int track, long max_iter = default_max_iter());
ExpansionRecord ijpa_expand(const Order& o, const FieldPair& theta, int track, long max_iter = default_max_iter());
ExpansionRecord brun_expand(const Order& o, const Triple& beta, int track, long max_iter = default_max_iter());

/// (1, |t|, t^2) for the root t = sigma_track(x), written in the power basis.
Triple abs_power_vector(const Order& o, int track);
/// (|t|, t^2) as a field pair, the input shape of the inhomogeneous algorithm.
FieldPair abs_power_pair(const Order& o, int track);

/// iJPA: the product of alpha_2 over one period. JPA/Brun: the inverse of the
/// period unit. Throws NotPeriodic.
AlgInt hasse_bernstein_unit(const Order& o, const ExpansionRecord& rec);

/// Largest state index that semiconvergent listings cover: l0 + l1 for a
/// periodic run, all recorded states otherwise.
std::size_t semiconvergent_state_count(const ExpansionRecord& rec);

struct Semiconvergent {
    long k;
    int i;  // 2 or 3
    Int j;
    AlgInt value;
    Int norm;
};

/// delta_{i,j}^(k) = beta_i^(k) - j beta_1^(k), 0 <= j <= b_i^(k) - 1, over
/// the preperiod and one period. Rows are ordered by (k, i, j).
std::vector<Semiconvergent> semiconvergents(const Order& o, const ExpansionRecord& rec);

struct GeneralizedSemiconvergent {
    long k;
    int i;       // index of the leading convergent (2 or 3)
    Int shift;   // multiple of beta_1 removed
    Int j;       // multiple of the other convergent removed
    AlgInt value;
};

/// Elements beta_X - i beta_1 - j beta_Y (X, Y the two non-pivot convergents)
/// where 1 <= i <= floor(beta_X / beta_1) - 1, the element keeps the
/// signature of beta_X - i beta_1, and no (l - i) beta_1 - beta_Y with
/// i < l < floor(beta_X / beta_1) shares that signature.
std::vector<GeneralizedSemiconvergent> generalized_semiconvergents(const Order& o, const ExpansionRecord& rec);

enum class CoverVerdict { Covered, NotCovered, HypothesisFails };
std::string to_string(CoverVerdict v);

struct CoverReport {
    bool lattice_matches = false;  // <beta1, beta2> equals eps * (difference lattice of S)
    bool norm_hypothesis = false;  // |N(beta3)| <= bound
    bool covered = false;          // eps * s in beta_c + <beta1, beta_other> for every s in S
    Int beta3_norm;
    /// HypothesisFails when the lattices differ; otherwise Covered or NotCovered.
    /// The norm hypothesis is reported but does not enter the verdict.
    CoverVerdict verdict = CoverVerdict::NotCovered;
};

/// Tests whether the multiples eps * s of a set S fill the coset
/// beta_c^(k) + <beta1^(k), beta_d^(k)>, where c is `coset` (1 or 2, 0-based)
/// and d is the remaining index.
CoverReport lattice_cover_check(const Order& o, const ExpansionRecord& rec, long k, const std::vector<AlgInt>& S,
                                const AlgInt& eps, const Int& norm_bound, int coset = 2);

/// All units +-u1^i u2^j with |i|, |j| <= bound for which eps times the
/// difference lattice of S equals <beta1^(k), beta2^(k)>.
std::vector<AlgInt> cover_units(const Order& o, const ExpansionRecord& rec, long k, const std::vector<AlgInt>& S,
                                long bound = 8);

}  // namespace cubmcf
