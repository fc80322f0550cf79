#include "ivpoly/arith.hpp"

#include <cstdint>
#include <stdexcept>

namespace ivpoly {

namespace {

// First 13 primes; as Miller-Rabin bases they decide primality for every
// n < 3'317'044'064'679'887'385'961'981 (Sorenson & Webster).
constexpr uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Int kDeterministicBound = Int("3317044064679887385961981");

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin_u64(uint64_t n) {
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : kBases) {
        if (a % n == 0) continue;
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool miller_rabin_big(const Int& n) {
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : kBases) {
        Int x = mod_pow(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int mod_pow(Int base, Int exp, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
    base = mod_floor(base, m);
    Int r = 1 % m;
    while (exp > 0) {
        if ((exp & 1) != 0) r = (r * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return r;
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
    // Extended Euclid on (a mod m, m).
    Int r0 = m, r1 = mod_floor(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) return std::nullopt;
    return mod_floor(t0, m);
}

Congruence::Congruence(Int r, Int m) : residue(std::move(r)), modulus(std::move(m)) {
    if (modulus < 2) throw std::invalid_argument("Congruence: modulus must be >= 2");
    residue = mod_floor(residue, modulus);
}

bool is_prime(const Int& n) {
    if (n < 0) throw std::invalid_argument("is_prime: negative input");
    if (n < 2) return false;
    for (uint64_t p : kBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 43 * 43) return true;
    if (n >= kDeterministicBound)
        throw std::domain_error("is_prime: input exceeds deterministic validity bound");
    if (n <= Int(UINT64_MAX)) return miller_rabin_u64(n.convert_to<uint64_t>());
    return miller_rabin_big(n);
}

const Int& is_prime_deterministic_bound() { return kDeterministicBound; }

std::vector<Int> primes_in_range(const Int& lo, const Int& hi,
                                 const std::set<Int>& excluded) {
    if (lo > hi) throw std::invalid_argument("primes_in_range: lo > hi");
    std::vector<Int> out;
    for (Int q = lo < 2 ? Int(2) : lo; q <= hi; ++q) {
        if (excluded.count(q)) continue;
        if (is_prime(q)) out.push_back(q);
    }
    return out;
}

Int smallest_prime_greater(const Int& n, const std::set<Int>& excluded) {
    Int q = n < 1 ? Int(2) : Int(n + 1);
    if (q < 2) q = 2;
    while (!is_prime(q) || excluded.count(q)) ++q;
    return q;
}

Int padic_val(const Int& a, const Int& p) {
    if (a == 0) throw std::domain_error("padic_val: valuation of zero is undefined");
    if (p < 2) throw std::invalid_argument("padic_val: p must be a prime >= 2");
    Int v = 0;
    Int r = abs_int(a);
    while (r % p == 0) {
        r /= p;
        ++v;
    }
    return v;
}

Int crt_solve(const std::vector<Congruence>& congruences) {
    if (congruences.empty()) throw std::invalid_argument("crt_solve: empty congruence list");
    Int x = congruences.front().residue;
    Int m = congruences.front().modulus;
    for (size_t i = 1; i < congruences.size(); ++i) {
        const Int& r2 = congruences[i].residue;
        const Int& m2 = congruences[i].modulus;
        auto inv = mod_inverse(m, m2);
        if (!inv) throw std::invalid_argument("CRT moduli not coprime");
        Int t = mod_floor((r2 - x) * *inv, m2);
        x += m * t;
        m *= m2;
    }
    return mod_floor(x, m);
}

}  // namespace ivpoly
