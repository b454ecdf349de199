#pragma once

#include <map>
#include <vector>

#include "crystal/root_datum.hpp"

// Representation-theoretic oracles for finite type, independent of any crystal.

namespace crystal {

/// Finite type iff the Cartan matrix is positive definite, decided by the
/// signs of the leading principal minors (fraction-free elimination).
bool finite_type_check(const RootDatum& rd);

/// Leading principal minors det(C[0..i, 0..i]), i = 0..n-1, stopping after
/// the first nonpositive one.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Positive roots in simple-root coordinates, closed under the simple
/// reflections starting from the simple roots. Sorted by height, then
/// lexicographically. Throws std::invalid_argument outside finite type.
std::vector<std::vector<Int>> positive_roots(const RootDatum& rd);

/// dim V(lambda) by the Weyl dimension formula. lambda must be dominant.
Int weyl_dim(const RootDatum& rd, const Weight& lambda);

/// Weight multiplicities of V(lambda) by Freudenthal's recursion; keys have
/// lambda's Lambda-coordinates and the subtracted simple roots as root part.
std::map<Weight, Int> freudenthal_multiplicities(const RootDatum& rd, const Weight& lambda);

}  // namespace crystal
