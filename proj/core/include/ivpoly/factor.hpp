#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ivpoly/design.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

// Element f = (prod parts)/c of Int(Z) in the engine's normal form: monic
// parts, each irreducible over Q (caller-certified; degree 1 or Eisenstein),
// with fixed_divisor(prod parts) = c and c >= 2 of known factorization.
// Repeated parts are allowed; blocks are index sets and essential sameness
// compares the induced (denominator, polynomial-multiset) pairs.
struct FactoredInput {
    std::vector<ZPoly> parts;
    Int c;
    std::vector<PrimePower> c_factorization;

    // Throws std::invalid_argument when the normal form is violated.
    void validate() const;
};

// One essentially-different factorization class: blocks (d, J) with
// disjoint-union of the J equal to the whole index set and prod d = c.
// The polynomial of a block is (prod_{i in J} parts[i]) / d.
struct Factorization {
    struct Block {
        Int den;
        std::vector<int> indices;  // sorted
    };
    std::vector<Block> blocks;

    int length() const { return static_cast<int>(blocks.size()); }
};

// Canonical form for essential sameness: sorted multiset of
// (denominator, sorted multiset of part coefficient vectors).
using FactorizationKey = std::vector<std::pair<Int, std::vector<std::vector<Int>>>>;
FactorizationKey canonical_key(const Factorization& f, const FactoredInput& input);
bool essentially_same(const Factorization& a, const Factorization& b,
                      const FactoredInput& input);

// Memoized fixed divisors of subset products; per-call, not shared.
class SubsetDivisorCache {
public:
    explicit SubsetDivisorCache(const std::vector<ZPoly>& parts) : parts_(parts) {}

    const Int& divisor(uint32_t mask);
    ZPoly product(uint32_t mask) const;

private:
    const std::vector<ZPoly>& parts_;
    std::map<uint32_t, Int> memo_;
};

// Some z (all part values nonzero) with v_P(parts[i](z)) > 0 and
// v_P(parts[j](z)) = 0 for j != i, or nullopt. The scan covers residues mod P;
// an exact zero value is dodged by stepping z by P.
std::optional<Int> find_indispensable_witness(const FactoredInput& input, int part_index,
                                              const Int& P);

// For each prime P | c: all indices admitting a witness, with the witnesses.
struct IndispensableMap {
    std::map<Int, std::map<int, Int>> by_prime;
};
IndispensableMap indispensable_map(const FactoredInput& input);

struct EnumerationResult {
    std::vector<Factorization> factorizations;
    // Set when the intersection hypothesis failed but the prime graph
    // (edges = shared indispensable parts) was connected; such results rest
    // on the connected-graph generalization rather than the base lemma.
    bool via_connected_graph = false;
};

// All essentially different factorizations into irreducibles, via the
// indispensability characterization: one block (c, Lambda ∪ J1) with J1
// minimal such that the subset product has fixed divisor exactly c, plus
// singleton blocks. Throws std::runtime_error when neither the intersection
// hypothesis nor the connected-graph condition holds.
//
// When the input came from a residue design (parts[0] the lifted s-polynomial
// and parts[1..] the lifted block polynomials in lexicographic index order),
// passing the design prunes the minimal-J1 search: a subset whose blocks do
// not jointly cover R cannot reach fixed divisor c, so only covering subsets
// are tested. Survivors are still confirmed by the fixed-divisor computation.
EnumerationResult enumerate_factorizations(const FactoredInput& input,
                                           const ResidueDesign* design_hint = nullptr);

// Independent oracle: all set partitions of the index set crossed with all
// denominator assignments d_j | c, prod d_j = c, filtered to blocks that are
// integer-valued and irreducible, deduplicated by essential sameness.
// Requires |parts| <= 12 and a bounded search space.
std::vector<Factorization> enumerate_factorizations_bruteforce(const FactoredInput& input);

// True iff the block (d, J) cannot be written as a product of two non-units
// of Int(Z): no split d = d'·d'', J = J' ⊎ J'' with both sides integer-valued
// non-units, and no integer constant can be pulled out (d equals the fixed
// divisor of the block's numerator exactly).
bool is_irreducible_block(const Int& d, const std::vector<int>& J, const FactoredInput& input);

// Sorted distinct factorization lengths.
std::vector<int> lengths_set(const std::vector<Factorization>& factorizations);

}  // namespace ivpoly
