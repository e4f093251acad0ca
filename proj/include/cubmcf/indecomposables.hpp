// SPDX-License-Identifier: MIT
//
// Closed-form catalogs of indecomposable representatives, an exhaustive
// decomposability oracle, codifferent certificates and the parallelepiped
// candidate generator.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubmcf/families.hpp"

namespace cubmcf {

enum class CatalogKind { One, Exceptional, Theta, Kappa, Lambda, Mu, KappaTilde, LambdaTilde, MuTilde };

struct CatalogEntry {
    CatalogKind kind;
    std::vector<long> index;
    AlgInt value;

    /// e.g. "lambda_{2,3}". With root label "rho'" the symbol is primed
    /// ("lambda'_{2,3}") and the exceptional element reads "1+rho'+rho'^2".
    std::string label(const std::string& root = "rho") const;
};

struct IndecomposableCatalog {
    FamilyId family;
    std::vector<CatalogEntry> entries;
};

/// Representatives of every signed indecomposable up to totally positive
/// units (Ennola families) or up to all units (simplest cubic family, where
/// units of every signature exist). Throws ParameterOutOfRange for AB and
/// Generic families or parameters below the family's range.
IndecomposableCatalog catalog(const FamilyId& f);

/// CSV: family,a,label,v1,v2,v3,norm,trace,signature
std::string catalog_csv(const IndecomposableCatalog& c, const Order& o);

struct DecompositionWitness {
    std::pair<AlgInt, AlgInt> parts;
};

/// Exhaustive search for x = beta + gamma with beta, gamma of signature s.
/// Returns nullopt when x is s-indecomposable. Throws SignatureMismatch or
/// ZeroElement.
std::optional<DecompositionWitness> is_decomposable(const Order& o, const AlgInt& x, const Signature& s);
inline std::optional<DecompositionWitness> is_decomposable(const Order& o, const AlgInt& x) {
    return is_decomposable(o, x, o.signature(x));
}

/// Numerator d of a codifferent element delta = d / f'(x) with signature s and
/// Tr(x delta) = 1, searched over coordinates in [-bound, bound]. A result
/// certifies indecomposability; nullopt proves nothing.
std::optional<AlgInt> certify_by_codifferent(const Order& o, const AlgInt& x, const Signature& s,
                                             const Int& bound);
/// Same search for an arbitrary target trace.
std::optional<AlgInt> codifferent_with_trace(const Order& o, const AlgInt& x, const Signature& s, const Int& bound,
                                             const Int& target);

/// Nonzero order elements in the closed parallelepiped spanned by g1, g2, g3, in
/// lexicographic coordinate order. Throws DegenerateBasis.
std::vector<AlgInt> parallelepiped(const Order& o, const AlgInt& g1, const AlgInt& g2, const AlgInt& g3);

/// Union of D(gamma, gamma e1, gamma e2) and D(gamma, gamma e1, gamma e1 / e2),
/// deduplicated and sorted.
std::vector<AlgInt> parallelepiped_candidates(const Order& o, const AlgInt& gamma, const AlgInt& e1,
                                              const AlgInt& e2);

/// Totally positive unit e with a = e * b, or nullopt.
std::optional<AlgInt> tp_associated(const Order& o, const AlgInt& a, const AlgInt& b);

/// Catalog entry associated with x (any unit), as (entry index, unit e) with x = e * entry.
std::optional<std::pair<std::size_t, AlgInt>> find_in_catalog(const Order& o, const IndecomposableCatalog& c,
                                                              const AlgInt& x);

/// Minimum |N(x)| over nonzero x not associated with a rational integer,
/// taken over the non-unit catalog entries and the sums 1 + eta for totally
/// positive units eta = +-u1^i u2^j, |i|, |j| <= bound. Throws MissingUnits.
Int min_nonassociated_norm(const Order& o, const IndecomposableCatalog& c, long bound = 6);

/// Minimum |N(x)| over coordinate triples with entries in [-box, box] that are
/// not associated with a rational integer.
Int min_norm_box_search(const Order& o, long box);

}  // namespace cubmcf
