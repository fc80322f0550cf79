#include "ivpoly/factor.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ivpoly {

void FactoredInput::validate() const {
    if (parts.empty()) throw std::invalid_argument("FactoredInput: no parts");
    if (parts.size() > 31) throw std::invalid_argument("FactoredInput: too many parts");
    if (c < 2) throw std::invalid_argument("FactoredInput: c must be >= 2");
    for (const ZPoly& f : parts)
        if (!f.is_monic() || f.degree() < 1)
            throw std::invalid_argument("FactoredInput: parts must be monic of degree >= 1");
    Int check = 1;
    std::set<Int> seen;
    for (const PrimePower& pp : c_factorization) {
        if (pp.e < 1 || !is_prime(pp.q) || !seen.insert(pp.q).second)
            throw std::invalid_argument("FactoredInput: bad factorization of c");
        for (int t = 0; t < pp.e; ++t) check *= pp.q;
    }
    if (check != c) throw std::invalid_argument("FactoredInput: factorization does not match c");
    if (fixed_divisor(poly_product(parts)) != c)
        throw std::invalid_argument("FactoredInput: fixed divisor of product is not c");
}

FactorizationKey canonical_key(const Factorization& f, const FactoredInput& input) {
    FactorizationKey key;
    for (const Factorization::Block& b : f.blocks) {
        std::vector<std::vector<Int>> polys;
        for (int i : b.indices) polys.push_back(input.parts[i].coeffs());
        std::sort(polys.begin(), polys.end());
        key.emplace_back(b.den, std::move(polys));
    }
    std::sort(key.begin(), key.end());
    return key;
}

bool essentially_same(const Factorization& a, const Factorization& b,
                      const FactoredInput& input) {
    return canonical_key(a, input) == canonical_key(b, input);
}

const Int& SubsetDivisorCache::divisor(uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(mask, fixed_divisor(product(mask))).first->second;
}

ZPoly SubsetDivisorCache::product(uint32_t mask) const {
    ZPoly prod = ZPoly::constant(1);
    for (size_t i = 0; i < parts_.size(); ++i)
        if (mask & (1u << i)) prod = prod * parts_[i];
    return prod;
}

std::optional<Int> find_indispensable_witness(const FactoredInput& input, int part_index,
                                              const Int& P) {
    if (part_index < 0 || part_index >= static_cast<int>(input.parts.size()))
        throw std::invalid_argument("find_indispensable_witness: index out of range");
    if (!is_prime(P) || input.c % P != 0)
        throw std::invalid_argument("find_indispensable_witness: P must be a prime divisor of c");

    int total_degree = 0;
    for (const ZPoly& f : input.parts) total_degree += f.degree();

    for (Int r = 0; r < P; ++r) {
        bool pattern = mod_floor(input.parts[part_index](r), P) == 0;
        for (size_t j = 0; j < input.parts.size() && pattern; ++j) {
            if (static_cast<int>(j) == part_index) continue;
            pattern = mod_floor(input.parts[j](r), P) != 0;
        }
        if (!pattern) continue;

        // Step past exact zeros so every valuation is defined.
        Int z = r;
        for (int attempt = 0; attempt <= total_degree + 1; ++attempt, z += P) {
            bool all_nonzero = true;
            for (const ZPoly& f : input.parts)
                if (f(z) == 0) {
                    all_nonzero = false;
                    break;
                }
            if (all_nonzero) return z;
        }
    }
    return std::nullopt;
}

IndispensableMap indispensable_map(const FactoredInput& input) {
    IndispensableMap out;
    for (const PrimePower& pp : input.c_factorization) {
        auto& entry = out.by_prime[pp.q];
        for (int i = 0; i < static_cast<int>(input.parts.size()); ++i)
            if (auto z = find_indispensable_witness(input, i, pp.q)) entry.emplace(i, *z);
    }
    return out;
}

namespace {

bool hypothesis_holds(const FactoredInput& input, const IndispensableMap& imap,
                      bool& via_graph) {
    via_graph = false;
    std::vector<Int> primes;
    for (const PrimePower& pp : input.c_factorization) primes.push_back(pp.q);

    // Intersection of the Lambda_P.
    std::set<int> inter;
    bool first = true;
    for (const Int& q : primes) {
        const auto& lam = imap.by_prime.at(q);
        std::set<int> cur;
        for (const auto& [i, z] : lam) cur.insert(i);
        if (first) {
            inter = cur;
            first = false;
        } else {
            std::set<int> tmp;
            std::set_intersection(inter.begin(), inter.end(), cur.begin(), cur.end(),
                                  std::inserter(tmp, tmp.begin()));
            inter = std::move(tmp);
        }
    }
    if (!inter.empty()) return true;
    if (primes.size() < 2) return false;

    // Connected-graph fallback: vertices are the primes, an edge when some
    // part is indispensable for both endpoints.
    size_t n = primes.size();
    std::vector<int> comp(n);
    for (size_t i = 0; i < n; ++i) comp[i] = static_cast<int>(i);
    auto root = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            const auto& la = imap.by_prime.at(primes[a]);
            const auto& lb = imap.by_prime.at(primes[b]);
            bool shared = false;
            for (const auto& [i, z] : la)
                if (lb.count(i)) {
                    shared = true;
                    break;
                }
            if (shared) comp[root(static_cast<int>(a))] = root(static_cast<int>(b));
        }
    int r0 = root(0);
    for (size_t i = 1; i < n; ++i)
        if (root(static_cast<int>(i)) != r0) return false;
    via_graph = true;
    return true;
}

std::vector<Factorization> dedup(std::vector<Factorization> facts, const FactoredInput& input) {
    std::vector<Factorization> out;
    std::set<FactorizationKey> keys;
    for (auto& f : facts)
        if (keys.insert(canonical_key(f, input)).second) out.push_back(std::move(f));
    return out;
}

void sort_blocks(Factorization& f) {
    for (auto& b : f.blocks) std::sort(b.indices.begin(), b.indices.end());
    std::sort(f.blocks.begin(), f.blocks.end(), [](const auto& a, const auto& b) {
        if (a.den != b.den) return a.den > b.den;
        return a.indices < b.indices;
    });
}

}  // namespace

EnumerationResult enumerate_factorizations(const FactoredInput& input,
                                           const ResidueDesign* design_hint) {
    input.validate();
    IndispensableMap imap = indispensable_map(input);

    EnumerationResult result;
    if (!hypothesis_holds(input, imap, result.via_connected_graph))
        throw std::runtime_error(
            "indispensability hypothesis not satisfied; use brute-force oracle");

    const int n = static_cast<int>(input.parts.size());
    uint32_t lambda = 0;
    for (const auto& [q, lam] : imap.by_prime)
        for (const auto& [i, z] : lam) lambda |= (1u << i);

    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (!(lambda & (1u << i))) rest.push_back(i);

    // With design metadata, a subset can only reach fixed divisor c if its
    // blocks jointly cover R; compute per-part coverage bitmasks once and use
    // them as a cheap necessary condition.
    std::vector<std::vector<uint64_t>> coverage;
    size_t cover_words = 0;
    if (design_hint) {
        std::vector<BlockIndex> indices = design_hint->all_indices();
        if (input.parts.size() != indices.size() + 1)
            throw std::invalid_argument(
                "enumerate_factorizations: design hint does not match the part list");
        std::map<Int, size_t> r_id;
        for (const auto& [key, value] : design_hint->R) r_id.emplace(value, r_id.size());
        cover_words = r_id.size() / 64 + 1;
        coverage.assign(input.parts.size(), std::vector<uint64_t>(cover_words, 0));
        for (size_t t = 0; t < indices.size(); ++t)
            for (const Int& r : design_hint->block_roots(indices[t])) {
                size_t id = r_id.at(r);
                coverage[t + 1][id / 64] |= uint64_t(1) << (id % 64);
            }
    }
    auto covers_R = [&](uint32_t mask) {
        if (!design_hint) return true;
        std::vector<uint64_t> acc(cover_words, 0);
        for (int i = 1; i < n; ++i)
            if (mask & (1u << i))
                for (size_t w = 0; w < cover_words; ++w) acc[w] |= coverage[i][w];
        size_t covered = 0;
        for (uint64_t w : acc) covered += __builtin_popcountll(w);
        return covered == design_hint->R.size();
    };

    SubsetDivisorCache cache(input.parts);
    std::vector<uint32_t> minimal;

    // Subsets of rest by increasing cardinality (Gosper's hack per size);
    // a hit is minimal iff no previously kept hit is contained in it.
    const int rn = static_cast<int>(rest.size());
    if (rn > 26)
        throw std::invalid_argument("enumerate_factorizations: minimal-J1 search too large");
    auto consider = [&](uint32_t sub) {
        uint32_t mask = 0;
        for (int b = 0; b < rn; ++b)
            if (sub & (1u << b)) mask |= (1u << rest[b]);
        for (uint32_t m : minimal)
            if ((m & mask) == m) return;  // dominated
        if (!covers_R(lambda | mask)) return;
        if (cache.divisor(lambda | mask) == input.c) minimal.push_back(mask);
    };
    consider(0);
    for (int card = 1; card <= rn; ++card) {
        uint32_t sub = (1u << card) - 1;
        while (sub < (1u << rn)) {
            consider(sub);
            uint32_t low = sub & (~sub + 1);
            uint32_t ripple = sub + low;
            sub = (((ripple ^ sub) >> 2) / low) | ripple;
        }
    }

    std::vector<Factorization> facts;
    for (uint32_t j1 : minimal) {
        Factorization f;
        Factorization::Block big;
        big.den = input.c;
        for (int i = 0; i < n; ++i)
            if ((lambda | j1) & (1u << i)) big.indices.push_back(i);
        f.blocks.push_back(std::move(big));
        for (int i = 0; i < n; ++i)
            if (!((lambda | j1) & (1u << i))) f.blocks.push_back({Int(1), {i}});
        sort_blocks(f);
        facts.push_back(std::move(f));
    }
    result.factorizations = dedup(std::move(facts), input);

    // The characterization guarantees these; check anyway, cheaply.
    for (const Factorization& f : result.factorizations) {
        Int prod_d = 1;
        for (const auto& b : f.blocks) {
            prod_d *= b.den;
            uint32_t m = 0;
            for (int i : b.indices) m |= (1u << i);
            if (cache.divisor(m) % b.den != 0)
                throw std::logic_error("enumerate_factorizations: non-integer-valued block");
        }
        if (prod_d != input.c)
            throw std::logic_error("enumerate_factorizations: denominators do not multiply to c");
    }
    return result;
}

namespace {

std::vector<Int> divisors_of(const Int& d) {
    std::vector<Int> divisors = {Int(1)};
    Int rest = d;
    for (Int q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        size_t old = divisors.size();
        Int qe = 1;
        for (int t = 1; t <= e; ++t) {
            qe *= q;
            for (size_t i = 0; i < old; ++i) divisors.push_back(divisors[i] * qe);
        }
    }
    if (rest > 1) {
        size_t old = divisors.size();
        for (size_t i = 0; i < old; ++i) divisors.push_back(divisors[i] * rest);
    }
    return divisors;
}

bool irreducible_block_impl(const Int& d, uint32_t mask, int nparts, SubsetDivisorCache& cache) {
    // A denominator smaller than the fixed divisor means an integer constant
    // >= 2 splits off.
    if (d != cache.divisor(mask)) return false;

    std::vector<Int> divisors = divisors_of(d);
    std::vector<int> idx;
    for (int i = 0; i < nparts; ++i)
        if (mask & (1u << i)) idx.push_back(i);

    // All splits (d', J') x (d'', J''), both non-units, both integer-valued.
    int m = static_cast<int>(idx.size());
    for (uint32_t sub = 0; sub < (1u << m); ++sub) {
        uint32_t m1 = 0, m2 = 0;
        for (int b = 0; b < m; ++b)
            (sub & (1u << b) ? m1 : m2) |= (1u << idx[b]);
        for (const Int& d1 : divisors) {
            Int d2 = d / d1;
            bool unit1 = (d1 == 1 && m1 == 0);
            bool unit2 = (d2 == 1 && m2 == 0);
            if (unit1 || unit2) continue;
            if (cache.divisor(m1) % d1 == 0 && cache.divisor(m2) % d2 == 0) return false;
        }
    }
    return true;
}

// Denominator assignments: distribute each prime power of c over the blocks.
void assign_denominators(const std::vector<PrimePower>& factors, size_t fi, int blocks,
                         std::vector<Int>& dens, const std::function<void()>& emit) {
    if (fi == factors.size()) {
        emit();
        return;
    }
    const Int& q = factors[fi].q;
    int e = factors[fi].e;
    std::vector<int> alloc(blocks, 0);
    std::function<void(int, int)> rec = [&](int block, int remaining) {
        if (block == blocks - 1) {
            alloc[block] = remaining;
            for (int b = 0; b < blocks; ++b)
                for (int t = 0; t < alloc[b]; ++t) dens[b] *= q;
            assign_denominators(factors, fi + 1, blocks, dens, emit);
            for (int b = 0; b < blocks; ++b)
                for (int t = 0; t < alloc[b]; ++t) dens[b] /= q;
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            alloc[block] = take;
            rec(block + 1, remaining - take);
        }
        alloc[block] = 0;
    };
    rec(0, e);
}

}  // namespace

std::vector<Factorization> enumerate_factorizations_bruteforce(const FactoredInput& input) {
    const int n = static_cast<int>(input.parts.size());
    if (n > 12)
        throw std::invalid_argument("enumerate_factorizations_bruteforce: more than 12 parts");
    input.validate();

    SubsetDivisorCache cache(input.parts);
    std::vector<Factorization> found;
    size_t candidates = 0;
    constexpr size_t kCandidateBound = 10'000'000;

    // Set partitions via restricted growth strings.
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> walk = [&](int pos, int max_block) {
        if (pos == n) {
            int blocks = max_block + 1;
            std::vector<uint32_t> masks(blocks, 0);
            for (int i = 0; i < n; ++i) masks[rgs[i]] |= (1u << i);

            std::vector<Int> dens(blocks, Int(1));
            assign_denominators(input.c_factorization, 0, blocks, dens, [&] {
                if (++candidates > kCandidateBound)
                    throw std::invalid_argument(
                        "enumerate_factorizations_bruteforce: search space exceeds bound");
                for (int b = 0; b < blocks; ++b) {
                    if (cache.divisor(masks[b]) % dens[b] != 0) return;  // not integer-valued
                }
                Factorization f;
                for (int b = 0; b < blocks; ++b) {
                    if (!irreducible_block_impl(dens[b], masks[b], n, cache)) return;
                    Factorization::Block blk;
                    blk.den = dens[b];
                    for (int i = 0; i < n; ++i)
                        if (masks[b] & (1u << i)) blk.indices.push_back(i);
                    f.blocks.push_back(std::move(blk));
                }
                sort_blocks(f);
                found.push_back(std::move(f));
            });
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            rgs[pos] = b;
            walk(pos + 1, std::max(max_block, b));
        }
    };
    walk(0, -1);

    auto out = dedup(std::move(found), input);
    std::sort(out.begin(), out.end(), [&](const Factorization& a, const Factorization& b) {
        return canonical_key(a, input) < canonical_key(b, input);
    });
    return out;
}

bool is_irreducible_block(const Int& d, const std::vector<int>& J, const FactoredInput& input) {
    if (J.empty()) throw std::invalid_argument("is_irreducible_block: empty index set");
    if (d < 1) throw std::invalid_argument("is_irreducible_block: d must be >= 1");

    SubsetDivisorCache cache(input.parts);
    uint32_t mask = 0;
    for (int i : J) mask |= (1u << i);
    if (cache.divisor(mask) % d != 0)
        throw std::invalid_argument("is_irreducible_block: d does not divide d(prod)");
    return irreducible_block_impl(d, mask, static_cast<int>(input.parts.size()), cache);
}

std::vector<int> lengths_set(const std::vector<Factorization>& factorizations) {
    std::set<int> lengths;
    for (const Factorization& f : factorizations) lengths.insert(f.length());
    return {lengths.begin(), lengths.end()};
}

}  // namespace ivpoly
