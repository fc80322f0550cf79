#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/report.hpp"

namespace ivpoly {

// The multiset 1 <= m_1 <= m_2 <= ... <= m_n; entries are kept sorted.
struct LengthSpec {
    std::vector<int> ms;

    explicit LengthSpec(std::vector<int> ms_in);

    int n() const { return static_cast<int>(ms.size()); }
    int total() const;

    friend bool operator==(const LengthSpec& a, const LengthSpec& b) { return a.ms == b.ms; }
};

// N = (sum m_i)^2 - (sum m_i^2), the number of off-diagonal matrix positions.
Int compute_N(const LengthSpec& spec);

struct PrimePower {
    Int q;
    int e = 1;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.q == b.q && a.e == b.e;
    }
};

struct DesignParams {
    Int p;                                  // main prime, odd, > N + 1
    Int c;                                  // p * prod q_i^{e_i}
    std::vector<PrimePower> extra_factors;  // the q_i^{e_i}; empty when c = p
    Int tau;                                // p - N
    Int sigma;                              // max(tau, max e_i * q_i)
};

struct ChooseOptions {
    std::optional<Int> prime_override;
    std::vector<PrimePower> c_extra;
};

// Picks (p, c, tau, sigma) for a length spec with n >= 2. Defaults: p the
// smallest odd prime > N + 1, c = p. Extra odd prime-power factors of c may
// be requested to exercise the composite-c machinery.
DesignParams choose_parameters(const LengthSpec& spec, const ChooseOptions& opts = {});

// Row/column index (k, i): the i-th slot of the k-th block; 1-based.
struct BlockIndex {
    int k = 0;
    int i = 0;

    friend bool operator==(const BlockIndex& a, const BlockIndex& b) {
        return a.k == b.k && a.i == b.i;
    }
    friend bool operator<(const BlockIndex& a, const BlockIndex& b) {
        return a.k != b.k ? a.k < b.k : a.i < b.i;
    }
};

// Key of an off-diagonal matrix entry: row (k, i), column (h, j), k != h.
struct RKey {
    int k = 0, i = 0, h = 0, j = 0;

    friend bool operator==(const RKey& a, const RKey& b) {
        return a.k == b.k && a.i == b.i && a.h == b.h && a.j == b.j;
    }
    friend bool operator<(const RKey& a, const RKey& b) {
        if (a.k != b.k) return a.k < b.k;
        if (a.i != b.i) return a.i < b.i;
        if (a.h != b.h) return a.h < b.h;
        return a.j < b.j;
    }
};

// The residue system underlying one prescribed-lengths construction: the set
// S = {s_0, ..., s_{sigma-1}} and the indexed set R of N values, chosen by CRT
// so that the six residue conditions hold.
struct ResidueDesign {
    LengthSpec spec;
    DesignParams params;
    Int N;
    std::vector<Int> S;
    std::map<RKey, Int> R;
    std::vector<Int> avoided_primes;  // primes q <= N + sigma other than p, q_i

    std::vector<BlockIndex> all_indices() const;          // I, lexicographic
    std::vector<Int> block_roots(const BlockIndex&) const;  // B[k,i] values
};

// Builds the concrete design; deterministic (smallest nonnegative CRT
// solutions, distinctness by adding the global modulus in index order).
// n = 1 is rejected; that case never needs a design.
ResidueDesign build_design(const LengthSpec& spec, const DesignParams& params);

// Itemized re-check of the design conditions (1)-(6) from raw integers.
Report verify_design(const ResidueDesign& d);

// Split monic polynomial over B[k,i]; degree 2(m - m_k).
ZPoly block_poly(const ResidueDesign& d, const BlockIndex& idx);
// s(x) = prod (x - s_i); degree sigma.
ZPoly s_poly(const ResidueDesign& d);

// Witness that v_q(d(prod (x - t))) = e: e disjoint complete residue systems
// mod q, coherent mod q^2 classwise, plus a residue z avoided by the rest.
struct SplitCertificate {
    Int q;
    Int e;
    std::vector<std::vector<Int>> systems;
    std::vector<Int> rest;  // T_0
    Int z;
};

// v_q of the fixed divisor of prod_{t in T} (x - t); T non-empty.
Int split_fixdiv_valuation(const std::vector<Int>& T, const Int& q);

// True iff the certificate's two conditions hold for T and the certified
// valuation e equals split_fixdiv_valuation(T, q). Throws when the
// certificate is not structurally consistent with T.
bool certify_split_valuation(const std::vector<Int>& T, const Int& q,
                             const SplitCertificate& cert);

// R ⊎ R ⊎ S as a value multiset.
std::vector<Int> design_value_multiset(const ResidueDesign& d);

// The certificate the construction promises: e = 1, z = s_1 at q = p;
// e = e_i, z = 1 at q = q_i. Throws for any other q.
SplitCertificate design_split_certificate(const ResidueDesign& d, const Int& q);

}  // namespace ivpoly
