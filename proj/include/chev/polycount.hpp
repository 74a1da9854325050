#pragma once

#include <cstdint>
#include <vector>

#include "chev/bigint.hpp"
#include "chev/report.hpp"

namespace chev {

/// Number of monic irreducible polynomials of degree d over F_q other than z.
BigInt count_irreducible(std::uint64_t q, int d);

/// Number of nonzero elements of F_{q^(2r)} that are not self-conjugate under
/// the unitary twist, r odd: q^(2r) - q^r - 2.
BigInt count_nonselfconj_unitary(std::uint64_t q, int r);

/// Number of elements of F_{q^(2i)} of exact degree i over F_{q^2} that are
/// self-conjugate (alpha^(q^i + 1) = 1): zero for even i.
BigInt count_selfconj_unitary_elements(std::uint64_t q, int i);

/// Unitary slot counts over F_{q^2}: monic irreducibles phi != z of degree d
/// with phi = phi~ (self_conjugate) and unordered pairs {phi, phi~} with
/// phi != phi~ (pairs).
struct UnitarySlots {
  std::vector<BigInt> self_conjugate;  // index d, entry 0 unused
  std::vector<BigInt> pairs;
};
UnitarySlots unitary_slots(std::uint64_t q, int D);

/// Irreducible-polynomial counts by degree. Index 0 is unused in every
/// vector. Nstar[d] is N*(q;2d): self-conjugate (under phi -> phi*) monic
/// irreducibles of degree 2d; Mstar[d] is M*(q;d): unordered pairs
/// {phi, phi*} with phi != phi* of degree d. z +- 1 are excluded.
struct PolyCounts {
  std::uint64_t q = 0;
  int upto = 0;
  std::vector<BigInt> N;
  std::vector<BigInt> Nstar;
  std::vector<BigInt> Mstar;
};

/// Solves the two reciprocal-polynomial product identities degree by degree.
PolyCounts star_counts(std::uint64_t q, int D);

/// Coefficientwise check of sum_{d|r} d N(q;d) = q^r - 1 and both
/// reciprocal-polynomial product identities up to degree D.
VerifyReport verify_polycount_identities(std::uint64_t q, int D);

}  // namespace chev
