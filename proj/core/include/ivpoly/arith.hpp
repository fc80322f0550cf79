#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <vector>

namespace ivpoly {

// Exact arbitrary-precision integers and rationals. Rat is always in lowest
// terms with positive denominator (cpp_rational maintains that invariant).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd_int(const Int& a, const Int& b);

// a mod m normalized into [0, m); m > 0.
Int mod_floor(const Int& a, const Int& m);

// b^e mod m, e >= 0, m >= 1.
Int mod_pow(Int base, Int exp, const Int& m);

// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<Int> mod_inverse(const Int& a, const Int& m);

// One congruence x ≡ residue (mod modulus); residue normalized into
// [0, modulus), modulus >= 2.
struct Congruence {
    Int residue;
    Int modulus;

    Congruence(Int r, Int m);
};

// Deterministic primality test (Miller-Rabin over the first 13 prime bases).
// Correct for all n < 3'317'044'064'679'887'385'961'981 (about 3.3e24, which
// exceeds 2^64); throws std::domain_error for n at or beyond that bound
// rather than give a probabilistic answer.
bool is_prime(const Int& n);

// The documented validity bound of is_prime.
const Int& is_prime_deterministic_bound();

// Ascending primes q with lo <= q <= hi and q not in excluded.
std::vector<Int> primes_in_range(const Int& lo, const Int& hi,
                                 const std::set<Int>& excluded = {});

// Smallest prime strictly greater than n and not in excluded.
Int smallest_prime_greater(const Int& n, const std::set<Int>& excluded = {});

// Largest e with p^e | a; a != 0, p prime. Throws std::domain_error on a = 0.
Int padic_val(const Int& a, const Int& p);

// Smallest nonnegative x satisfying every congruence; moduli must be pairwise
// coprime. Throws std::invalid_argument on an empty list or non-coprime
// moduli.
Int crt_solve(const std::vector<Congruence>& congruences);

}  // namespace ivpoly
