#include "ivpoly/lift.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ivpoly {

std::map<Int, int> fixdiv_profile(const std::vector<ZPoly>& fs) {
    if (fs.empty()) throw std::invalid_argument("fixdiv_profile: empty list");
    for (const ZPoly& f : fs)
        if (!f.is_monic()) throw std::invalid_argument("fixdiv_profile: polynomials must be monic");
    ZPoly prod = poly_product(fs);
    Int d = fixed_divisor(prod);
    std::map<Int, int> profile;
    if (prod.degree() >= 2)
        for (const Int& q : primes_in_range(2, prod.degree()))
            profile[q] = padic_val(d, q).convert_to<int>();
    return profile;
}

Int choose_aux_prime(const Int& total_degree, const std::set<Int>& excluded) {
    return smallest_prime_greater(total_degree, excluded);
}

std::pair<std::vector<ZPoly>, LiftCertificate> lift(const std::vector<ZPoly>& fs,
                                                    const std::map<Int, int>& extra_profile) {
    if (fs.empty()) throw std::invalid_argument("lift: empty family");
    for (const ZPoly& f : fs) {
        if (!f.is_monic()) throw std::invalid_argument("lift: polynomials must be monic");
        if (f.degree() < 1)
            throw std::invalid_argument("lift: constant polynomial cannot be lifted");
    }

    LiftCertificate cert;
    cert.originals = fs;
    cert.profile = fixdiv_profile(fs);
    for (const auto& [q, e] : extra_profile) {
        if (e < 0 || !is_prime(q)) throw std::invalid_argument("lift: bad extra profile");
        auto it = cert.profile.find(q);
        if (it == cert.profile.end())
            cert.profile[q] = e;
        else
            it->second = std::max(it->second, e);
    }

    cert.modulus_m = 1;
    Int max_profile_prime = 0;
    for (const auto& [q, e] : cert.profile) {
        for (int t = 0; t <= e; ++t) cert.modulus_m *= q;
        max_profile_prime = std::max(max_profile_prime, q);
    }

    Int total_degree = 0;
    for (const ZPoly& f : fs) total_degree += f.degree();
    cert.aux_q = choose_aux_prime(std::max(total_degree, max_profile_prime));

    Int aux_sq = cert.aux_q * cert.aux_q;
    Int step = cert.modulus_m * aux_sq;

    std::set<Int> used_constants;
    for (const ZPoly& f : fs) {
        std::vector<Int> row;
        for (int k = 0; k < f.degree(); ++k) {
            std::vector<Congruence> cs;
            if (cert.modulus_m > 1) cs.emplace_back(Int(0), cert.modulus_m);
            if (k == 0) {
                // ≡ -f_0 + aux_q mod aux_q^2: Eisenstein-exact at the constant term.
                cs.emplace_back(cert.aux_q - f.coeff(0), aux_sq);
            } else {
                cs.emplace_back(-f.coeff(k), cert.aux_q);
            }
            row.push_back(crt_solve(cs));
        }
        Int constant = f.coeff(0) + row[0];
        while (used_constants.count(constant)) {
            row[0] += step;
            constant += step;
        }
        used_constants.insert(constant);
        cert.offsets.push_back(std::move(row));
    }

    for (size_t i = 0; i < fs.size(); ++i) {
        std::vector<Int> coeffs = fs[i].coeffs();
        for (size_t k = 0; k < cert.offsets[i].size(); ++k) coeffs[k] += cert.offsets[i][k];
        cert.lifted.emplace_back(std::move(coeffs));
    }
    return {cert.lifted, cert};
}

namespace {

// All (J1, J2) assignments: 0 = excluded, 1 = original, 2 = lifted.
bool subset_products_preserved(const LiftCertificate& cert, size_t& combinations) {
    const size_t n = cert.originals.size();
    combinations = 0;

    auto check_assignment = [&](const std::vector<int>& assign) {
        std::vector<ZPoly> mixed, plain;
        for (size_t i = 0; i < n; ++i) {
            if (assign[i] == 0) continue;
            plain.push_back(cert.originals[i]);
            mixed.push_back(assign[i] == 1 ? cert.originals[i] : cert.lifted[i]);
        }
        ++combinations;
        return fixed_divisor(poly_product(mixed)) == fixed_divisor(poly_product(plain));
    };

    if (n <= 12) {
        std::vector<int> assign(n, 0);
        while (true) {
            if (!check_assignment(assign)) return false;
            size_t pos = 0;
            while (pos < n && assign[pos] == 2) assign[pos++] = 0;
            if (pos == n) break;
            ++assign[pos];
        }
        return true;
    }

    std::mt19937_64 rng(0x1f2e3d4c5b6a7988ULL);
    std::uniform_int_distribution<int> trit(0, 2);
    std::vector<int> assign(n);
    for (int trial = 0; trial < 2000; ++trial) {
        for (size_t i = 0; i < n; ++i) assign[i] = trit(rng);
        if (!check_assignment(assign)) return false;
    }
    return true;
}

}  // namespace

Report verify_lift(const LiftCertificate& cert) {
    Report rep;
    const size_t n = cert.originals.size();

    bool structure = n > 0 && cert.lifted.size() == n && cert.offsets.size() == n;
    for (size_t i = 0; i < n && structure; ++i)
        structure = cert.originals[i].is_monic() && cert.originals[i].degree() >= 1 &&
                    cert.offsets[i].size() == static_cast<size_t>(cert.originals[i].degree());
    rep.add("structure", structure);
    if (!structure) return rep;

    {
        bool ok = true;
        for (size_t i = 0; i < n; ++i) {
            const ZPoly& f = cert.originals[i];
            std::vector<Int> coeffs = f.coeffs();
            for (size_t k = 0; k < cert.offsets[i].size(); ++k) coeffs[k] += cert.offsets[i][k];
            ok = ok && ZPoly(coeffs) == cert.lifted[i];
        }
        rep.add("offsets_consistent", ok);
    }

    {
        bool ok = true;
        for (size_t i = 0; i < n; ++i)
            ok = ok && cert.lifted[i].is_monic() &&
                 cert.lifted[i].degree() == cert.originals[i].degree();
        rep.add("monic_same_degree", ok);
    }

    {
        ZPoly prod = poly_product(cert.originals);
        Int d = fixed_divisor(prod);
        bool ok = cert.aux_q > 1 && is_prime(cert.aux_q) &&
                  gcd_int(cert.aux_q, cert.modulus_m) == 1;
        Int m = 1;
        for (const auto& [q, e] : cert.profile) {
            ok = ok && is_prime(q) && e >= 0 && Int(e) >= padic_val(d, q);
            for (int t = 0; t <= e; ++t) m *= q;
        }
        if (prod.degree() >= 2)
            for (const Int& q : primes_in_range(2, prod.degree()))
                ok = ok && cert.profile.count(q) > 0;
        ok = ok && m == cert.modulus_m;
        rep.add("modulus_profile", ok, "M = " + cert.modulus_m.str());
    }

    {
        bool ok = true;
        std::string witness;
        for (size_t i = 0; i < n && ok; ++i)
            for (const Int& g : cert.offsets[i])
                if (mod_floor(g, cert.modulus_m) != 0) {
                    ok = false;
                    witness = "offset " + g.str() + " not ≡ 0 mod M";
                    break;
                }
        rep.add("offset_congruence", ok, witness);
    }

    {
        Int aux_sq = cert.aux_q * cert.aux_q;
        bool ok = true;
        std::string witness;
        for (size_t i = 0; i < n && ok; ++i) {
            const ZPoly& F = cert.lifted[i];
            for (int k = 0; k < F.degree(); ++k)
                if (mod_floor(F.coeff(k), cert.aux_q) != 0) {
                    ok = false;
                    witness = "coefficient of x^" + std::to_string(k) + " in lifted " +
                              std::to_string(i) + " not ≡ 0 mod " + cert.aux_q.str();
                    break;
                }
            if (ok && mod_floor(F.coeff(0), aux_sq) == 0) {
                ok = false;
                witness = "constant term of lifted " + std::to_string(i) + " divisible by aux_q^2";
            }
        }
        rep.add("eisenstein", ok, witness);
    }

    {
        std::set<Int> constants;
        bool ok = true;
        for (size_t i = 0; i < n; ++i) ok = ok && constants.insert(cert.lifted[i].coeff(0)).second;
        rep.add("distinct_constants", ok);
    }

    {
        size_t combos = 0;
        bool ok = subset_products_preserved(cert, combos);
        rep.add("subset_products", ok, "combinations=" + std::to_string(combos));
    }

    return rep;
}

bool is_certified_irreducible(const ZPoly& f) {
    if (f.degree() == 1 && f.is_monic()) return true;
    if (f.degree() < 1 || !f.is_monic()) return false;

    Int nonleading = 0;
    for (int k = 0; k < f.degree(); ++k) nonleading = gcd_int(nonleading, f.coeff(k));
    if (nonleading == 0) return false;  // constant term 0: divisible by x

    // Eisenstein candidates are the primes dividing every non-leading
    // coefficient; trial division only, per the artifact's scope.
    Int c0 = f.coeff(0);
    auto eisenstein_at = [&](const Int& q) { return mod_floor(c0, q * q) != 0; };

    Int rest = nonleading;
    for (Int q = 2; q * q <= rest && q <= 1'000'000; q += (q == 2 ? 1 : 2))
        if (rest % q == 0) {
            if (eisenstein_at(q)) return true;
            while (rest % q == 0) rest /= q;
        }
    if (rest > 1 && (rest <= 1'000'000 || is_prime(rest)) && eisenstein_at(rest)) return true;
    return false;
}

}  // namespace ivpoly
