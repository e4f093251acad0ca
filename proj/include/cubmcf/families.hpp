// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cubmcf/order.hpp"

namespace cubmcf {

enum class FamilyKind { SimplestCubic, EnnolaI, EnnolaII, AB, Generic };

struct FamilyId {
    FamilyKind kind = FamilyKind::Generic;
    long a = 0, b = 0;
    Int p, q, r;  // used by Generic
    std::optional<std::pair<AlgInt, AlgInt>> units;

    static FamilyId simplest(long a) { return make(FamilyKind::SimplestCubic, a, 0); }
    static FamilyId ennola1(long a) { return make(FamilyKind::EnnolaI, a, 0); }
    static FamilyId ennola2(long a) { return make(FamilyKind::EnnolaII, a, 0); }
    static FamilyId ab(long a, long b) { return make(FamilyKind::AB, a, b); }
    static FamilyId generic(Int p, Int q, Int r) {
        FamilyId f;
        f.p = std::move(p);
        f.q = std::move(q);
        f.r = std::move(r);
        return f;
    }
    static FamilyId make(FamilyKind k, long a, long b) {
        FamilyId f;
        f.kind = k;
        f.a = a;
        f.b = b;
        return f;
    }

    /// Grammar: "simplest:a=4", "ennola1:a=5", "ennola2:a=5", "ab:a=2,b=4",
    /// "generic:p=0,q=-3,r=1[,u1=v1;v2;v3,u2=v1;v2;v3]". Throws Parse.
    static FamilyId parse(const std::string& spec);
    std::string str() const;
    /// Defining polynomial coefficients (p, q, r) of x^3 + p x^2 + q x + r.
    std::array<Int, 3> coeffs() const;
};

/// Builds the order with labelled roots and the family's unit pair.
/// Throws ParameterOutOfRange.
Order construct(const FamilyId& f);

/// Checks each root against the closed-form rational bounds of the family.
/// Throws BoundViolated; a no-op for families without such bounds.
void root_bounds_check(const FamilyId& f, const Order& o);

/// The element g with sigma_track(g) equal to the root `target`, when the
/// field is Galois. Throws NotGalois.
AlgInt express_conjugate(const Order& o, int target, int track);

/// Units (u1, u2) used for unit exponents in classification tables when the
/// variable x is read as the root `track`. For the simplest cubic family these
/// are (rho, rho') expressed through x; for Ennola I (rho, rho - 1); for
/// Ennola II the pair (R, R - 1) with R the image of the Ennola I generator.
std::pair<AlgInt, AlgInt> table_units(const FamilyId& f, const Order& o, int track);

}  // namespace cubmcf
