#pragma once

#include <optional>
#include <vector>

#include "ivpoly/design.hpp"
#include "ivpoly/factor.hpp"
#include "ivpoly/lift.hpp"
#include "ivpoly/report.hpp"

namespace ivpoly {

// Full reproducible record of one prescribed-lengths construction. For n >= 2
// the parts of H are lift.lifted with parts[0] = S and parts[1..] the lifted
// block polynomials in lexicographic (k, i) order; for n = 1 the artifact is
// the degenerate H = x^{m_1 + 1} with design and lift absent.
struct PrescribedLengthsArtifact {
    LengthSpec spec;
    std::optional<ResidueDesign> design;
    std::optional<LiftCertificate> lift;
    RationalPoly H;
    std::vector<Factorization> factorizations;
    std::vector<int> lengths;  // sorted multiset, one entry per factorization
};

struct PrescribedOptions {
    std::optional<Int> prime_override;
    std::vector<PrimePower> c_extra;
};

// Runs choose_parameters -> build_design -> block/s polynomials -> joint lift
// -> H = (S * prod F)/c -> enumerate_factorizations, asserting the artifact
// invariants. Every m_i must be >= 1.
PrescribedLengthsArtifact construct_prescribed(const LengthSpec& spec,
                                               const PrescribedOptions& opts = {});

// Independent re-verification from raw data: design conditions, lift
// certificate, fixed divisor of the numerator both by the gcd formula and by
// the split-valuation certificate route, factorization completeness against
// the brute-force oracle, and the lengths multiset.
Report verify_prescribed(const PrescribedLengthsArtifact& artifact);

// Record of one x*H = G * prod(x - a_i) witness. R[0] is r_0 and
// B = R \ {r_0}; lift.originals = [prod(x - b)], lift.lifted = [F].
struct TransferArtifact {
    int n = 0;
    std::vector<Int> primes;                // p_1..p_n, odd, distinct
    std::vector<PrimePower> extra_factors;  // the Q_i^{e_i} (often empty)
    std::vector<Int> p2;                    // primes <= N + n outside the others
    Int c;
    Int N;
    std::vector<Int> R;
    std::vector<Int> a;
    LiftCertificate lift;
    RationalPoly H;
    RationalPoly G;
};

struct TransferOptions {
    std::optional<std::vector<Int>> primes_override;
    std::vector<PrimePower> c_extra;
};

// Builds the witness family member for a given n >= 1; defaults to the first
// n odd primes and c their product.
TransferArtifact construct_transfer(int n, const TransferOptions& opts = {});

// Re-checks the residue and congruence conditions, the lift, the exact
// polynomial identity x*H = G * prod(x - a_i), both fixed divisors by the gcd
// formula, irreducibility of H and G through the factorization engine with
// the stated indispensability structure, and the lengths of x*H.
Report verify_transfer(const TransferArtifact& artifact);

// The factorization-engine input for x*H: parts [x, F, x-a_1, ..., x-a_n].
FactoredInput transfer_xh_input(const TransferArtifact& artifact);

}  // namespace ivpoly
