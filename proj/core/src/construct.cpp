#include "ivpoly/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ivpoly {

namespace {

std::vector<PrimePower> c_factors(const DesignParams& params) {
    std::vector<PrimePower> factors = {{params.p, 1}};
    factors.insert(factors.end(), params.extra_factors.begin(), params.extra_factors.end());
    return factors;
}

std::vector<int> sorted_lengths(const std::vector<Factorization>& facts) {
    std::vector<int> lengths;
    for (const Factorization& f : facts) lengths.push_back(f.length());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

ZPoly power_of_x(int e) {
    std::vector<Int> coeffs(e + 1, Int(0));
    coeffs[e] = 1;
    return ZPoly(std::move(coeffs));
}

}  // namespace

PrescribedLengthsArtifact construct_prescribed(const LengthSpec& spec,
                                               const PrescribedOptions& opts) {
    PrescribedLengthsArtifact art{spec, std::nullopt, std::nullopt, RationalPoly(), {}, {}};

    if (spec.n() == 1) {
        int m = spec.ms[0];
        art.H = RationalPoly(power_of_x(m + 1), 1);
        Factorization f;
        for (int i = 0; i <= m; ++i) f.blocks.push_back({Int(1), {i}});
        art.factorizations.push_back(std::move(f));
        art.lengths = {m + 1};
        return art;
    }

    DesignParams params = choose_parameters(spec, {opts.prime_override, opts.c_extra});
    art.design = build_design(spec, params);

    std::vector<ZPoly> originals = {s_poly(*art.design)};
    for (const BlockIndex& idx : art.design->all_indices())
        originals.push_back(block_poly(*art.design, idx));

    auto [lifted, cert] = lift(originals);
    art.lift = std::move(cert);

    ZPoly numerator = poly_product(lifted);
    if (fixed_divisor(numerator) != params.c)
        throw std::logic_error("construct_prescribed: numerator fixed divisor is not c");
    art.H = RationalPoly(numerator, params.c);

    FactoredInput input{lifted, params.c, c_factors(params)};
    for (const ZPoly& part : input.parts)
        if (!is_certified_irreducible(part))
            throw std::logic_error("construct_prescribed: part without irreducibility certificate");

    art.factorizations = enumerate_factorizations(input, &*art.design).factorizations;
    art.lengths = sorted_lengths(art.factorizations);

    std::vector<int> expected;
    for (int m : spec.ms) expected.push_back(m + 1);
    std::sort(expected.begin(), expected.end());
    if (static_cast<int>(art.factorizations.size()) != spec.n() || art.lengths != expected)
        throw std::logic_error("construct_prescribed: factorization structure mismatch");
    if (!is_image_primitive(art.H))
        throw std::logic_error("construct_prescribed: H is not image primitive");
    return art;
}

Report verify_prescribed(const PrescribedLengthsArtifact& art) {
    Report rep;
    const int n = art.spec.n();
    rep.add("spec_valid", n >= 1 && std::is_sorted(art.spec.ms.begin(), art.spec.ms.end()) &&
                              art.spec.ms.front() >= 1);

    std::vector<int> expected_lengths;
    for (int m : art.spec.ms) expected_lengths.push_back(m + 1);
    std::sort(expected_lengths.begin(), expected_lengths.end());

    if (n == 1) {
        int m = art.spec.ms[0];
        rep.add("h_form", art.H == RationalPoly(power_of_x(m + 1), 1));
        bool structure = art.factorizations.size() == 1 &&
                         art.factorizations[0].length() == m + 1;
        if (structure) {
            std::set<int> covered;
            for (const auto& b : art.factorizations[0].blocks) {
                structure = structure && b.den == 1 && b.indices.size() == 1;
                if (!b.indices.empty()) covered.insert(b.indices[0]);
            }
            structure = structure && static_cast<int>(covered.size()) == m + 1;
        }
        rep.add("factorization_trivial", structure);
        rep.add("lengths_multiset", art.lengths == expected_lengths);
        return rep;
    }

    if (!art.design || !art.lift) {
        rep.add("artifact_complete", false, "design or lift missing");
        return rep;
    }
    rep.add("artifact_complete", true);

    try {
        rep.merge(verify_design(*art.design), "design.");
    } catch (const std::exception& e) {
        rep.add("design.exception", false, e.what());
    }
    rep.add("design_spec_match", art.design->spec == art.spec);
    try {
        rep.merge(verify_lift(*art.lift), "lift.");
    } catch (const std::exception& e) {
        rep.add("lift.exception", false, e.what());
    }

    {
        bool ok = false;
        try {
            std::vector<ZPoly> originals = {s_poly(*art.design)};
            for (const BlockIndex& idx : art.design->all_indices())
                originals.push_back(block_poly(*art.design, idx));
            ok = art.lift->originals == originals;
        } catch (const std::exception&) {
        }
        rep.add("lift_matches_design", ok);
    }

    {
        bool ok = true;
        for (const ZPoly& part : art.lift->lifted) ok = ok && is_certified_irreducible(part);
        rep.add("parts_irreducible", ok);
    }

    const Int& c = art.design->params.c;

    {
        bool ok = false;
        std::string detail;
        try {
            ok = fixed_divisor(poly_product(art.lift->lifted)) == c;
            if (!ok)
                detail = "fixed divisor of numerator differs from c = " + c.str();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("numerator_fixdiv_gcd", ok, detail);
    }

    {
        // Split-valuation route on the root multiset R ⊎ R ⊎ S; the lift's
        // subset_products check transfers the result to the lifted numerator.
        bool ok = false;
        std::string detail;
        try {
            std::vector<Int> T = design_value_multiset(*art.design);
            ok = certify_split_valuation(T, art.design->params.p,
                                         design_split_certificate(*art.design, art.design->params.p));
            for (const PrimePower& pp : art.design->params.extra_factors)
                ok = ok && certify_split_valuation(
                               T, pp.q, design_split_certificate(*art.design, pp.q));
            ok = ok && fixed_divisor(ZPoly::from_roots(T)) == c;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("fixdiv_cert_route", ok, detail);
    }

    {
        bool count_ok = false, match_ok = false;
        std::string detail;
        try {
            FactoredInput input{art.lift->lifted, c, c_factors(art.design->params)};
            input.validate();
            std::vector<Factorization> reference;
            if (input.parts.size() <= 12) {
                reference = enumerate_factorizations_bruteforce(input);
            } else {
                reference = enumerate_factorizations(input, &*art.design).factorizations;
                detail =
                    "oracle skipped (more than 12 parts); lemma route with the verified "
                    "design's covering prune used";
            }
            std::set<FactorizationKey> ref_keys, art_keys;
            for (const Factorization& f : reference) ref_keys.insert(canonical_key(f, input));
            for (const Factorization& f : art.factorizations)
                art_keys.insert(canonical_key(f, input));
            match_ok = ref_keys == art_keys && art_keys.size() == art.factorizations.size();
            count_ok = static_cast<int>(art.factorizations.size()) == n;
            if (!match_ok && detail.empty())
                detail = "artifact lists " + std::to_string(art.factorizations.size()) +
                         " classes, oracle found " + std::to_string(reference.size());
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("factorizations_match_oracle", match_ok, detail);
        rep.add("factorization_count", count_ok);
    }

    {
        bool ok = art.lengths == expected_lengths;
        std::vector<int> actual = sorted_lengths(art.factorizations);
        ok = ok && actual == expected_lengths;
        rep.add("lengths_multiset", ok);
    }

    {
        bool ok = false;
        try {
            ok = art.H == RationalPoly(poly_product(art.lift->lifted), c) &&
                 is_image_primitive(art.H);
        } catch (const std::exception&) {
        }
        rep.add("h_consistent", ok);
    }

    return rep;
}

namespace {

std::vector<Int> first_odd_primes(int n) {
    std::vector<Int> out;
    Int q = 2;
    while (static_cast<int>(out.size()) < n) {
        q = smallest_prime_greater(q);
        out.push_back(q);
    }
    return out;
}

std::vector<PrimePower> transfer_c_factors(const TransferArtifact& art) {
    std::vector<PrimePower> factors;
    for (const Int& p : art.primes) factors.push_back({p, 1});
    factors.insert(factors.end(), art.extra_factors.begin(), art.extra_factors.end());
    return factors;
}

}  // namespace

TransferArtifact construct_transfer(int n, const TransferOptions& opts) {
    if (n < 1) throw std::invalid_argument("construct_transfer: n must be >= 1");

    TransferArtifact art;
    art.n = n;
    if (opts.primes_override) {
        art.primes = *opts.primes_override;
        if (static_cast<int>(art.primes.size()) != n)
            throw std::invalid_argument("construct_transfer: need exactly n primes");
        std::set<Int> seen;
        for (const Int& p : art.primes) {
            if (p == 2) throw std::invalid_argument("none of them of index 2: p_i = 2 not allowed");
            if (!is_prime(p) || !seen.insert(p).second)
                throw std::invalid_argument("construct_transfer: primes must be distinct odd primes");
        }
    } else {
        art.primes = first_odd_primes(n);
    }

    std::map<Int, int> extra;
    for (const PrimePower& pp : opts.c_extra) {
        if (pp.e < 1) throw std::invalid_argument("c-extra exponent must be >= 1");
        extra[pp.q] += pp.e;
    }
    art.c = 1;
    Int N = 0;
    for (const Int& p : art.primes) {
        art.c *= p;
        N = std::max(N, p);
    }
    for (const auto& [q, e] : extra) {
        if (q == 2) throw std::invalid_argument("c must be odd; factor 2 not allowed");
        if (!is_prime(q)) throw std::invalid_argument("c-extra factor must be prime");
        if (std::find(art.primes.begin(), art.primes.end(), q) != art.primes.end())
            throw std::invalid_argument("c-extra factor collides with p_i");
        art.extra_factors.push_back({q, e});
        for (int t = 0; t < e; ++t) art.c *= q;
        N = std::max(N, Int(e) * q);
    }
    art.N = N;

    std::set<Int> skip(art.primes.begin(), art.primes.end());
    for (const PrimePower& pp : art.extra_factors) skip.insert(pp.q);
    art.p2 = primes_in_range(2, N + n, skip);

    Int global = 1;
    for (const Int& p : art.primes) global *= p;
    for (const PrimePower& pp : art.extra_factors) global *= pp.q * pp.q;
    for (const Int& q : art.p2) global *= q;

    if (N > 10'000'000) throw std::invalid_argument("construct_transfer: N too large");
    long n_long = N.convert_to<long>();

    std::set<Int> used;
    for (long j = 0; j < n_long; ++j) {
        std::vector<Congruence> cs;
        for (const Int& p : art.primes) {
            Int r = j == 0 ? Int(0) : (Int(j) <= p - 1 ? Int(j) : Int(1));
            cs.emplace_back(r, p);
        }
        for (const PrimePower& pp : art.extra_factors) {
            Int r = j == 0 ? Int(0)
                           : (Int(j) < Int(pp.e) * pp.q ? mod_floor(Int(j), pp.q) : Int(1));
            cs.emplace_back(r, pp.q * pp.q);
        }
        for (const Int& q : art.p2) cs.emplace_back(Int(0), q);
        Int v = crt_solve(cs);
        while (used.count(v)) v += global;
        used.insert(v);
        art.R.push_back(v);
    }

    for (int i = 1; i <= n; ++i) {
        std::vector<Congruence> cs;
        for (int j = 1; j <= n; ++j) cs.emplace_back(i == j ? Int(0) : Int(1), art.primes[j - 1]);
        for (const PrimePower& pp : art.extra_factors) {
            if (i == n)
                cs.emplace_back(Int(0), pp.q * pp.q);
            else
                cs.emplace_back(Int(1), pp.q);
        }
        for (const Int& q : art.p2) cs.emplace_back(Int(0), q);
        art.a.push_back(crt_solve(cs));
    }

    std::vector<Int> B(art.R.begin() + 1, art.R.end());
    ZPoly f = ZPoly::from_roots(B);

    std::vector<ZPoly> family = {ZPoly::x(), f};
    for (const Int& ai : art.a) family.push_back(ZPoly::linear_root(ai));
    std::map<Int, int> full_profile = fixdiv_profile(family);

    auto [lifted, cert] = lift({f}, full_profile);
    art.lift = std::move(cert);
    const ZPoly& F = lifted[0];

    ZPoly a_prod = ZPoly::constant(1);
    for (const Int& ai : art.a) a_prod = a_prod * ZPoly::linear_root(ai);

    if (fixed_divisor(ZPoly::x() * F) != art.c)
        throw std::logic_error("construct_transfer: d(xF) is not c");
    if (fixed_divisor(F * a_prod) != art.c)
        throw std::logic_error("construct_transfer: d(F * prod(x - a_i)) is not c");

    art.H = RationalPoly(F * a_prod, art.c);
    art.G = RationalPoly(ZPoly::x() * F, art.c);

    // Irreducibility and lengths through the engine.
    FactoredInput g_input{{ZPoly::x(), F}, art.c, transfer_c_factors(art)};
    if (enumerate_factorizations(g_input).factorizations.size() != 1)
        throw std::logic_error("construct_transfer: G not irreducible");
    std::vector<ZPoly> h_parts = {F};
    for (const Int& ai : art.a) h_parts.push_back(ZPoly::linear_root(ai));
    FactoredInput h_input{h_parts, art.c, transfer_c_factors(art)};
    if (enumerate_factorizations(h_input).factorizations.size() != 1)
        throw std::logic_error("construct_transfer: H not irreducible");

    std::vector<int> expected = {2};
    if (n + 1 != 2) expected.push_back(n + 1);
    if (lengths_set(enumerate_factorizations(transfer_xh_input(art)).factorizations) != expected)
        throw std::logic_error("construct_transfer: unexpected lengths for x*H");
    return art;
}

FactoredInput transfer_xh_input(const TransferArtifact& art) {
    std::vector<ZPoly> parts = {ZPoly::x()};
    parts.push_back(art.lift.lifted.at(0));
    for (const Int& ai : art.a) parts.push_back(ZPoly::linear_root(ai));
    return {parts, art.c, transfer_c_factors(art)};
}

Report verify_transfer(const TransferArtifact& art) {
    Report rep;

    // Size sanity before primality tests and prime ranges run on raw input.
    if (art.n < 1 || art.N < 0 || art.N > 10'000'000 ||
        Int(art.primes.size()) > art.N + 1) {
        rep.add("params", false, "n or N out of range");
        return rep;
    }

    {
        bool ok = static_cast<int>(art.primes.size()) == art.n;
        std::set<Int> seen;
        Int c = 1, N = 0;
        for (const Int& p : art.primes) {
            ok = ok && p != 2 && p <= art.N && is_prime(p) && seen.insert(p).second;
            c *= p;
            N = std::max(N, p);
        }
        for (const PrimePower& pp : art.extra_factors) {
            ok = ok && pp.q != 2 && pp.e >= 1 && pp.q <= art.N && Int(pp.e) * pp.q <= art.N &&
                 is_prime(pp.q) && !seen.count(pp.q) && pp.e <= 64;
            if (!ok) break;
            for (int t = 0; t < pp.e; ++t) c *= pp.q;
            N = std::max(N, Int(pp.e) * pp.q);
        }
        ok = ok && c == art.c && N == art.N;
        std::set<Int> skip(art.primes.begin(), art.primes.end());
        for (const PrimePower& pp : art.extra_factors) skip.insert(pp.q);
        ok = ok && art.p2 == primes_in_range(2, art.N + art.n, skip);
        rep.add("params", ok);
    }

    {
        std::set<Int> distinct(art.R.begin(), art.R.end());
        rep.add("r_distinct", Int(art.R.size()) == art.N && Int(distinct.size()) == art.N);
    }

    if (art.R.empty()) return rep;
    const Int& r0 = art.R[0];

    {
        bool ok = true;
        for (const Int& p : art.primes) ok = ok && mod_floor(r0, p) == 0;
        for (const PrimePower& pp : art.extra_factors) ok = ok && mod_floor(r0, pp.q * pp.q) == 0;
        rep.add("r_condition1", ok);
    }
    {
        bool ok = true;
        for (size_t j = 1; j < art.R.size(); ++j)
            for (const Int& p : art.primes) ok = ok && mod_floor(art.R[j], p) != 0;
        rep.add("r_condition2", ok);
    }
    {
        bool ok = true;
        for (const Int& p : art.primes) {
            std::set<Int> classes;
            for (const Int& r : art.R) classes.insert(mod_floor(r, p));
            ok = ok && Int(classes.size()) == p;
        }
        rep.add("r_condition3", ok);
    }
    {
        bool ok = true;
        for (const PrimePower& pp : art.extra_factors) {
            Int qq = pp.q * pp.q;
            for (Int u = 0; u < pp.q && ok; ++u) {
                std::map<Int, int> groups;
                for (const Int& r : art.R)
                    if (mod_floor(r, pp.q) == u) ++groups[mod_floor(r, qq)];
                int best = 0;
                for (const auto& [r2, cnt] : groups) best = std::max(best, cnt);
                ok = ok && best >= pp.e;
            }
        }
        rep.add("r_condition4", ok, art.extra_factors.empty() ? "vacuous: no Q_i" : "");
    }
    {
        bool ok = true;
        for (const PrimePower& pp : art.extra_factors) {
            int cnt = 0;
            for (const Int& r : art.R)
                if (mod_floor(r, pp.q) == 0) ++cnt;
            ok = ok && cnt <= pp.e;
        }
        rep.add("r_condition5", ok, art.extra_factors.empty() ? "vacuous: no Q_i" : "");
    }
    {
        bool ok = true;
        for (const Int& q : art.p2)
            for (const Int& r : art.R) ok = ok && mod_floor(r, q) == 0;
        rep.add("r_condition6", ok);
    }

    {
        bool ok = static_cast<int>(art.a.size()) == art.n;
        for (int i = 1; ok && i <= art.n; ++i) ok = mod_floor(art.a[i - 1], art.primes[i - 1]) == 0;
        rep.add("a_condition1", ok);
    }
    {
        bool ok = true;
        for (int i = 1; i <= art.n && ok; ++i)
            for (int j = 1; j <= art.n && ok; ++j)
                if (i != j) ok = mod_floor(art.a[i - 1], art.primes[j - 1]) == 1;
        rep.add("a_condition2", ok);
    }
    {
        bool ok = true;
        for (const PrimePower& pp : art.extra_factors) {
            ok = ok && mod_floor(art.a[art.n - 1], pp.q * pp.q) == 0;
            for (int i = 1; i < art.n; ++i) ok = ok && mod_floor(art.a[i - 1], pp.q) == 1;
        }
        rep.add("a_condition3", ok, art.extra_factors.empty() ? "vacuous: no Q_i" : "");
    }
    {
        bool ok = true;
        for (const Int& q : art.p2)
            for (const Int& ai : art.a) ok = ok && mod_floor(ai, q) == 0;
        rep.add("a_condition4", ok);
    }

    try {
        rep.merge(verify_lift(art.lift), "lift.");
    } catch (const std::exception& e) {
        rep.add("lift.exception", false, e.what());
    }

    {
        bool ok = false;
        try {
            std::vector<Int> B(art.R.begin() + 1, art.R.end());
            ok = art.lift.originals.size() == 1 && art.lift.lifted.size() == 1 &&
                 art.lift.originals[0] == ZPoly::from_roots(B);
        } catch (const std::exception&) {
        }
        rep.add("lift_matches", ok);
    }

    const ZPoly F = art.lift.lifted.empty() ? ZPoly() : art.lift.lifted[0];
    ZPoly a_prod = ZPoly::constant(1);
    for (const Int& ai : art.a) a_prod = a_prod * ZPoly::linear_root(ai);

    {
        bool ok = false;
        std::string detail;
        try {
            ok = fixed_divisor(ZPoly::x() * F) == art.c;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("fixdiv_xF", ok, detail);
    }
    {
        bool ok = false;
        std::string detail;
        try {
            ok = fixed_divisor(F * a_prod) == art.c;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("fixdiv_F_prod_a", ok, detail);
    }

    {
        bool ok = false;
        try {
            ok = art.H == RationalPoly(F * a_prod, art.c) &&
                 art.G == RationalPoly(ZPoly::x() * F, art.c) && is_image_primitive(art.H) &&
                 is_image_primitive(art.G);
        } catch (const std::exception&) {
        }
        rep.add("h_g_forms", ok);
    }

    {
        // x * H = G * prod (x - a_i), exactly, over Q.
        bool ok = false;
        try {
            RationalPoly left(ZPoly::x() * art.H.num(), art.H.den());
            RationalPoly right(art.G.num() * a_prod, art.G.den());
            ok = left == right;
        } catch (const std::exception&) {
        }
        rep.add("identity", ok);
    }

    {
        bool ok = false;
        std::string detail;
        try {
            FactoredInput xh = transfer_xh_input(art);
            IndispensableMap imap = indispensable_map(xh);
            ok = true;
            // F (index 1) indispensable for every p_i and every Q_i.
            for (const Int& p : art.primes) ok = ok && imap.by_prime.at(p).count(1) > 0;
            for (const PrimePower& pp : art.extra_factors)
                ok = ok && imap.by_prime.at(pp.q).count(1) > 0;

            FactoredInput g_input{{ZPoly::x(), F}, art.c, transfer_c_factors(art)};
            IndispensableMap gmap = indispensable_map(g_input);
            for (const Int& p : art.primes)
                ok = ok && gmap.by_prime.at(p).count(0) > 0 && gmap.by_prime.at(p).count(1) > 0;
            for (const PrimePower& pp : art.extra_factors)
                ok = ok && gmap.by_prime.at(pp.q).count(1) > 0;

            std::vector<ZPoly> h_parts = {F};
            for (const Int& ai : art.a) h_parts.push_back(ZPoly::linear_root(ai));
            FactoredInput h_input{h_parts, art.c, transfer_c_factors(art)};
            IndispensableMap hmap = indispensable_map(h_input);
            for (int i = 1; i <= art.n; ++i) {
                ok = ok && hmap.by_prime.at(art.primes[i - 1]).count(0) > 0;
                ok = ok && hmap.by_prime.at(art.primes[i - 1]).count(i) > 0;
            }
            for (const PrimePower& pp : art.extra_factors)
                ok = ok && hmap.by_prime.at(pp.q).count(0) > 0;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        rep.add("indispensable_structure", ok, detail);
    }

    {
        bool ok = false;
        std::string detail;
        try {
            FactoredInput g_input{{ZPoly::x(), F}, art.c, transfer_c_factors(art)};
            auto facts = enumerate_factorizations(g_input).factorizations;
            ok = facts.size() == 1 && facts[0].length() == 1;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("g_irreducible", ok, detail);
    }
    {
        bool ok = false;
        std::string detail;
        try {
            std::vector<ZPoly> h_parts = {F};
            for (const Int& ai : art.a) h_parts.push_back(ZPoly::linear_root(ai));
            FactoredInput h_input{h_parts, art.c, transfer_c_factors(art)};
            auto facts = enumerate_factorizations(h_input).factorizations;
            ok = facts.size() == 1 && facts[0].length() == 1;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("h_irreducible", ok, detail);
    }
    {
        bool ok = false;
        std::string detail;
        try {
            FactoredInput xh = transfer_xh_input(art);
            std::vector<int> expected = {2};
            if (art.n + 1 != 2) expected.push_back(art.n + 1);
            ok = lengths_set(enumerate_factorizations(xh).factorizations) == expected;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        rep.add("xh_lengths", ok, detail);
    }

    return rep;
}

}  // namespace ivpoly
