#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/report.hpp"

namespace ivpoly {

// Records how split monic polynomials were perturbed into Q[x]-irreducible
// monic polynomials of the same degrees without changing any subset-product
// fixed divisor. Irreducibility is certified by the Eisenstein criterion at
// aux_q; every other property is re-checkable from the stored raw integers.
struct LiftCertificate {
    Int aux_q;
    Int modulus_m;                          // prod q^{e_q + 1} over profile
    std::map<Int, int> profile;             // prime -> e_q, zero entries kept
    std::vector<ZPoly> originals;
    std::vector<ZPoly> lifted;
    std::vector<std::vector<Int>> offsets;  // offsets[i][k] = coefficient of x^k
};

// For every prime q <= deg(prod fs): e_q = v_q(fixed divisor of prod fs),
// zero entries included. All fs must be monic and the list non-empty.
std::map<Int, int> fixdiv_profile(const std::vector<ZPoly>& fs);

// Smallest prime > total_degree not in excluded.
Int choose_aux_prime(const Int& total_degree, const std::set<Int>& excluded = {});

// Perturbs each monic f_i (degree >= 1) into a monic polynomial of the same
// degree that is Eisenstein at an auxiliary prime, congruent to f_i modulo
// prod q^{e_q + 1}, with pairwise distinct constant terms. extra_profile
// merges in exponents from cofactors multiplied alongside the lifted family
// (pass the profile of the full family product when only part of it is
// lifted). Deterministic: smallest nonnegative CRT offsets, distinctness by
// stepping the constant offset in input order.
std::pair<std::vector<ZPoly>, LiftCertificate> lift(
    const std::vector<ZPoly>& fs, const std::map<Int, int>& extra_profile = {});

// Re-checks every certificate invariant plus, for each subset J of the index
// set and each split J = J1 ⊎ J2, equality of the fixed divisors of the mixed
// product (originals over J1, lifted over J2) and the original product over J.
// Exhaustive (3^|I| combinations) for |I| <= 12, deterministically sampled
// beyond that.
Report verify_lift(const LiftCertificate& cert);

// True when irreducibility over Q is certged by this artifact's rules:
// degree 1, or monic with some prime q dividing every non-leading coefficient
// while q^2 does not divide the constant term. Only primes found by trial
// division (<= 10^6) of the non-leading content are tried.
bool is_certified_irreducible(const ZPoly& f);

}  // namespace ivpoly
