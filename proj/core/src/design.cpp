#include "ivpoly/design.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ivpoly {

LengthSpec::LengthSpec(std::vector<int> ms_in) : ms(std::move(ms_in)) {
    if (ms.empty()) throw std::invalid_argument("LengthSpec: empty");
    for (int m : ms)
        if (m < 1) throw std::invalid_argument("LengthSpec: entries must be >= 1");
    std::sort(ms.begin(), ms.end());
}

int LengthSpec::total() const {
    int t = 0;
    for (int m : ms) t += m;
    return t;
}

Int compute_N(const LengthSpec& spec) {
    Int sum = 0, sumsq = 0;
    for (int m : spec.ms) {
        sum += m;
        sumsq += Int(m) * m;
    }
    return sum * sum - sumsq;
}

DesignParams choose_parameters(const LengthSpec& spec, const ChooseOptions& opts) {
    if (spec.n() < 2)
        throw std::invalid_argument("n >= 2 required; n = 1 handled in constructions");
    Int N = compute_N(spec);

    DesignParams params;
    if (opts.prime_override) {
        params.p = *opts.prime_override;
        if (!is_prime(params.p) || params.p == 2 || params.p <= N + 1)
            throw std::invalid_argument("prime override must be an odd prime > N + 1");
    } else {
        params.p = smallest_prime_greater(N + 1, {Int(2)});
    }

    // Merge repeated bases, then validate.
    std::map<Int, int> extra;
    for (const PrimePower& pp : opts.c_extra) {
        if (pp.e < 1) throw std::invalid_argument("c-extra exponent must be >= 1");
        extra[pp.q] += pp.e;
    }
    params.c = params.p;
    Int max_eq = 0;
    for (const auto& [q, e] : extra) {
        if (q == 2) throw std::invalid_argument("c must be odd; factor 2 not allowed");
        if (q == params.p) throw std::invalid_argument("c-extra factor equal to p not allowed");
        if (!is_prime(q)) throw std::invalid_argument("c-extra factor must be prime");
        params.extra_factors.push_back({q, e});
        for (int t = 0; t < e; ++t) params.c *= q;
        max_eq = std::max(max_eq, Int(e) * q);
    }
    params.tau = params.p - N;
    params.sigma = std::max(params.tau, max_eq);
    return params;
}

std::vector<BlockIndex> ResidueDesign::all_indices() const {
    std::vector<BlockIndex> out;
    for (int k = 1; k <= spec.n(); ++k)
        for (int i = 1; i <= spec.ms[k - 1]; ++i) out.push_back({k, i});
    return out;
}

std::vector<Int> ResidueDesign::block_roots(const BlockIndex& idx) const {
    if (idx.k < 1 || idx.k > spec.n() || idx.i < 1 || idx.i > spec.ms[idx.k - 1])
        throw std::invalid_argument("block index out of range");
    std::vector<Int> roots;
    for (int h = 1; h <= spec.n(); ++h) {
        if (h == idx.k) continue;
        for (int j = 1; j <= spec.ms[h - 1]; ++j) {
            roots.push_back(R.at({idx.k, idx.i, h, j}));
            roots.push_back(R.at({h, j, idx.k, idx.i}));
        }
    }
    return roots;
}

namespace {

long to_long_checked(const Int& v, const char* what) {
    if (v < 0 || v > 10'000'000) throw std::invalid_argument(std::string(what) + " too large");
    return v.convert_to<long>();
}

}  // namespace

ResidueDesign build_design(const LengthSpec& spec, const DesignParams& params) {
    if (spec.n() < 2)
        throw std::invalid_argument("n >= 2 required; n = 1 handled in constructions");
    Int N = compute_N(spec);
    if (params.tau != params.p - N || params.tau < 2)
        throw std::invalid_argument("build_design: inconsistent parameters (tau)");
    Int check_c = params.p;
    Int max_eq = 0;
    for (const PrimePower& pp : params.extra_factors) {
        for (int t = 0; t < pp.e; ++t) check_c *= pp.q;
        max_eq = std::max(max_eq, Int(pp.e) * pp.q);
    }
    if (check_c != params.c || params.sigma != std::max(params.tau, max_eq))
        throw std::invalid_argument("build_design: inconsistent parameters (c, sigma)");

    ResidueDesign d{spec, params, N, {}, {}, {}};

    std::set<Int> skip = {params.p};
    for (const PrimePower& pp : params.extra_factors) skip.insert(pp.q);
    d.avoided_primes = primes_in_range(2, N + params.sigma, skip);

    // Global modulus: p, q_i^2 for the extra factors, and every avoided prime.
    Int global = params.p;
    for (const PrimePower& pp : params.extra_factors) global *= pp.q * pp.q;
    for (const Int& q : d.avoided_primes) global *= q;

    long sigma = to_long_checked(params.sigma, "sigma");
    long tau = to_long_checked(params.tau, "tau");

    std::set<Int> used;
    auto place = [&](Int v) {
        while (used.count(v)) v += global;
        used.insert(v);
        return v;
    };

    for (long j = 0; j < sigma; ++j) {
        std::vector<Congruence> cs;
        cs.emplace_back(j < tau ? Int(j) : Int(0), params.p);
        for (const PrimePower& pp : params.extra_factors) {
            Int qq = pp.q * pp.q;
            Int r = (Int(j) < Int(pp.e) * pp.q) ? mod_floor(Int(j), pp.q) : Int(0);
            cs.emplace_back(r, qq);
        }
        for (const Int& q : d.avoided_primes) cs.emplace_back(Int(0), q);
        d.S.push_back(place(crt_solve(cs)));
    }

    long idx = 0;
    for (int k = 1; k <= spec.n(); ++k)
        for (int i = 1; i <= spec.ms[k - 1]; ++i)
            for (int h = 1; h <= spec.n(); ++h) {
                if (h == k) continue;
                for (int j = 1; j <= spec.ms[h - 1]; ++j) {
                    std::vector<Congruence> cs;
                    cs.emplace_back(params.tau + idx, params.p);
                    for (const PrimePower& pp : params.extra_factors)
                        cs.emplace_back(Int(0), pp.q * pp.q);
                    for (const Int& q : d.avoided_primes) cs.emplace_back(Int(0), q);
                    d.R[{k, i, h, j}] = place(crt_solve(cs));
                    ++idx;
                }
            }
    return d;
}

Report verify_design(const ResidueDesign& d) {
    Report rep;
    const DesignParams& P = d.params;
    Int N = compute_N(d.spec);

    // Size sanity before anything converts to machine integers or walks a
    // prime range.
    if (P.tau < 0 || P.tau > 10'000'000 || P.sigma < 0 || P.sigma > 10'000'000 ||
        N > 10'000'000 || Int(d.S.size()) != P.sigma) {
        rep.add("params", false, "N/tau/sigma out of range or |S| != sigma");
        return rep;
    }

    {
        bool keys_ok = Int(d.R.size()) == N;
        for (int k = 1; k <= d.spec.n() && keys_ok; ++k)
            for (int i = 1; i <= d.spec.ms[k - 1] && keys_ok; ++i)
                for (int h = 1; h <= d.spec.n() && keys_ok; ++h) {
                    if (h == k) continue;
                    for (int j = 1; j <= d.spec.ms[h - 1] && keys_ok; ++j)
                        keys_ok = d.R.count({k, i, h, j}) > 0;
                }
        rep.add("sizes", d.N == N && Int(d.S.size()) == P.sigma && keys_ok,
                "N = " + N.str() + ", |S| = " + std::to_string(d.S.size()));
    }

    {
        // tau = p - N pins p into the sane range before the primality test.
        bool ok = P.tau == P.p - N && P.tau >= 2 && P.p != 2 && P.p > N + 1 && is_prime(P.p);
        Int c = P.p, max_eq = 0;
        for (const PrimePower& pp : P.extra_factors) {
            ok = ok && pp.q != 2 && pp.q != P.p && pp.e >= 1 && pp.e <= 64 &&
                 Int(pp.e) * pp.q <= P.sigma && is_prime(pp.q);
            if (!ok) break;
            for (int t = 0; t < pp.e; ++t) c *= pp.q;
            max_eq = std::max(max_eq, Int(pp.e) * pp.q);
        }
        ok = ok && c == P.c && P.sigma == std::max(P.tau, max_eq);
        rep.add("params", ok, "p = " + P.p.str() + ", c = " + P.c.str());
    }

    {
        std::set<Int> seen;
        bool distinct = true;
        for (const Int& s : d.S) distinct = distinct && seen.insert(s).second;
        for (const auto& [key, r] : d.R) distinct = distinct && seen.insert(r).second;
        rep.add("distinct", distinct);
    }

    long tau = P.tau.convert_to<long>();

    // (1) s_0 ≡ 0 mod p and {s_0..s_{tau-1}} ∪ R is a complete residue system mod p.
    {
        bool ok = !d.S.empty() && mod_floor(d.S[0], P.p) == 0;
        std::set<Int> residues;
        std::string witness;
        for (long j = 0; j < std::min<long>(tau, static_cast<long>(d.S.size())); ++j)
            if (!residues.insert(mod_floor(d.S[j], P.p)).second) {
                ok = false;
                witness = "repeated residue from S";
            }
        for (const auto& [key, r] : d.R)
            if (!residues.insert(mod_floor(r, P.p)).second) {
                ok = false;
                witness = "repeated residue from R";
            }
        if (Int(residues.size()) != P.p) {
            ok = false;
            if (witness.empty()) witness = "residues mod p not complete";
        }
        rep.add("condition1", ok, witness);
    }

    // (2) s_i ≡ 0 mod p for all i >= tau.
    {
        bool ok = true;
        std::string witness;
        for (long j = tau; j < static_cast<long>(d.S.size()); ++j)
            if (mod_floor(d.S[j], P.p) != 0) {
                ok = false;
                witness = "s_" + std::to_string(j) + " = " + d.S[j].str() + " not ≡ 0 mod p";
                break;
            }
        rep.add("condition2", ok, witness);
    }

    // (3) For each q_i: S holds e_i disjoint complete residue systems mod q_i,
    // classwise coherent mod q_i^2.
    {
        bool ok = true;
        std::string witness;
        for (const PrimePower& pp : P.extra_factors) {
            Int qq = pp.q * pp.q;
            for (Int u = 0; u < pp.q && ok; ++u) {
                std::map<Int, int> groups;  // residue mod q^2 -> count
                for (const Int& s : d.S)
                    if (mod_floor(s, pp.q) == u) ++groups[mod_floor(s, qq)];
                int best = 0;
                for (const auto& [r2, cnt] : groups) best = std::max(best, cnt);
                if (best < pp.e) {
                    ok = false;
                    witness = "class " + u.str() + " mod " + pp.q.str() +
                              " lacks " + std::to_string(pp.e) + " coherent elements";
                }
            }
        }
        rep.add("condition3", ok,
                ok && P.extra_factors.empty() ? "vacuous: c = p" : witness);
    }

    // (4) For each q_i: no more than e_i elements of S are ≡ 1 mod q_i.
    {
        bool ok = true;
        std::string witness;
        for (const PrimePower& pp : P.extra_factors) {
            int cnt = 0;
            for (const Int& s : d.S)
                if (mod_floor(s, pp.q) == 1) ++cnt;
            if (cnt > pp.e) {
                ok = false;
                witness = std::to_string(cnt) + " elements ≡ 1 mod " + pp.q.str();
            }
        }
        rep.add("condition4", ok,
                ok && P.extra_factors.empty() ? "vacuous: c = p" : witness);
    }

    // (5) Every r in R is ≡ 0 mod every q_i.
    {
        bool ok = true;
        std::string witness;
        for (const PrimePower& pp : P.extra_factors)
            for (const auto& [key, r] : d.R)
                if (mod_floor(r, pp.q) != 0) {
                    ok = false;
                    witness = r.str() + " not ≡ 0 mod " + pp.q.str();
                }
        rep.add("condition5", ok,
                ok && P.extra_factors.empty() ? "vacuous: c = p" : witness);
    }

    // (6) R ∪ S misses a residue class mod q for every other prime
    // q <= |R| + |S|; larger primes cannot be covered by pigeonhole.
    {
        std::set<Int> skip = {P.p};
        for (const PrimePower& pp : P.extra_factors) skip.insert(pp.q);
        std::vector<Int> expected = primes_in_range(2, N + P.sigma, skip);
        bool recorded = d.avoided_primes == expected;

        bool ok = recorded;
        std::string witness = recorded ? "" : "avoided prime list mismatch; ";
        for (const Int& q : expected) {
            std::set<Int> classes;
            for (const Int& s : d.S) classes.insert(mod_floor(s, q));
            for (const auto& [key, r] : d.R) classes.insert(mod_floor(r, q));
            if (Int(classes.size()) == q) {
                ok = false;
                witness += "complete residue system mod " + q.str() + "; ";
                continue;
            }
            Int missing = 0;
            while (classes.count(missing)) ++missing;
            witness += q.str() + " misses class " + missing.str() + "; ";
        }
        if (!witness.empty()) witness.erase(witness.size() - 2);
        rep.add("condition6", ok, witness);
    }

    return rep;
}

ZPoly block_poly(const ResidueDesign& d, const BlockIndex& idx) {
    return ZPoly::from_roots(d.block_roots(idx));
}

ZPoly s_poly(const ResidueDesign& d) { return ZPoly::from_roots(d.S); }

Int split_fixdiv_valuation(const std::vector<Int>& T, const Int& q) {
    if (T.empty()) throw std::invalid_argument("split_fixdiv_valuation: empty multiset");
    if (!is_prime(q)) throw std::invalid_argument("split_fixdiv_valuation: q must be prime");
    return padic_val(fixed_divisor(ZPoly::from_roots(T)), q);
}

bool certify_split_valuation(const std::vector<Int>& T, const Int& q,
                             const SplitCertificate& cert) {
    if (!is_prime(q) || cert.q != q || cert.e < 0 ||
        cert.e != Int(cert.systems.size()))
        throw std::invalid_argument("malformed split certificate");

    // Structural consistency: systems ⊎ rest must equal T as a multiset.
    std::vector<Int> combined = cert.rest;
    for (const auto& sys : cert.systems) combined.insert(combined.end(), sys.begin(), sys.end());
    std::vector<Int> t_sorted = T;
    std::sort(combined.begin(), combined.end());
    std::sort(t_sorted.begin(), t_sorted.end());
    if (combined != t_sorted)
        throw std::invalid_argument("split certificate inconsistent with multiset");

    Int qq = q * q;

    // (1) Each system is a complete residue system mod q; representatives of
    // the same class agree mod q^2 across systems.
    std::map<Int, Int> class_rep;  // class mod q -> representative mod q^2
    for (const auto& sys : cert.systems) {
        if (Int(sys.size()) != q) return false;
        std::set<Int> classes;
        for (const Int& t : sys) {
            Int u = mod_floor(t, q);
            if (!classes.insert(u).second) return false;
            Int r2 = mod_floor(t, qq);
            auto it = class_rep.find(u);
            if (it == class_rep.end())
                class_rep[u] = r2;
            else if (it->second != r2)
                return false;
        }
    }

    // (2) No element of the rest lies in the class of z mod q.
    Int zc = mod_floor(cert.z, q);
    for (const Int& t : cert.rest)
        if (mod_floor(t, q) == zc) return false;

    return split_fixdiv_valuation(T, q) == cert.e;
}

std::vector<Int> design_value_multiset(const ResidueDesign& d) {
    std::vector<Int> T;
    for (const auto& [key, r] : d.R) {
        T.push_back(r);
        T.push_back(r);
    }
    T.insert(T.end(), d.S.begin(), d.S.end());
    return T;
}

SplitCertificate design_split_certificate(const ResidueDesign& d, const Int& q) {
    const DesignParams& P = d.params;
    if (P.tau < 2 || P.tau > Int(d.S.size()))
        throw std::invalid_argument("design_split_certificate: tau out of range");
    long tau = P.tau.convert_to<long>();
    if (q == P.p) {
        SplitCertificate cert;
        cert.q = q;
        cert.e = 1;
        std::vector<Int> sys(d.S.begin(), d.S.begin() + tau);
        for (const auto& [key, r] : d.R) sys.push_back(r);
        cert.systems.push_back(std::move(sys));
        for (const auto& [key, r] : d.R) cert.rest.push_back(r);
        cert.rest.insert(cert.rest.end(), d.S.begin() + tau, d.S.end());
        cert.z = d.S.at(1);
        return cert;
    }
    for (const PrimePower& pp : P.extra_factors) {
        if (pp.q != q) continue;
        if (pp.e < 1 || Int(pp.e) * pp.q > Int(d.S.size()))
            throw std::invalid_argument("design_split_certificate: e*q exceeds |S|");
        SplitCertificate cert;
        cert.q = q;
        cert.e = pp.e;
        long ql = pp.q.convert_to<long>();
        for (int w = 0; w < pp.e; ++w)
            cert.systems.emplace_back(d.S.begin() + w * ql, d.S.begin() + (w + 1) * ql);
        for (const auto& [key, r] : d.R) {
            cert.rest.push_back(r);
            cert.rest.push_back(r);
        }
        cert.rest.insert(cert.rest.end(), d.S.begin() + pp.e * ql, d.S.end());
        cert.z = 1;
        return cert;
    }
    throw std::invalid_argument("design_split_certificate: q is not p or one of the q_i");
}

}  // namespace ivpoly
