#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringrep/report.hpp"
#include "ringrep/ring.hpp"

namespace ringrep {

// Orbits of the unit group of Z/m acting on Z/m by multiplication.
// For prime p this is the dual action of F_p^x on the character group.
struct OrbitDecomposition {
    std::uint32_t modulus = 0;
    bool prime = false;
    std::vector<std::vector<std::uint32_t>> orbits; // sorted lists, ordered by min element
    std::vector<std::uint32_t> fixed_points;        // singleton orbits

    bool transitive_on_nonzero() const;
    Report to_report() const;
};

OrbitDecomposition multiplicative_orbits(std::uint32_t m); // any m >= 1
OrbitDecomposition dual_action_orbits(std::uint32_t p);    // errors unless p is prime

struct UnitGroupInfo {
    bool finite = false;
    std::vector<RingElement> elements; // deterministic order, finite case only
    std::string note;                  // "infinite-not-supported" otherwise
};

UnitGroupInfo unit_group(const Ring& ring);

// A canonical associate that is not a product of the candidate generators,
// with the exhaustive-search transcript backing it up.
struct GenerationWitness {
    Ring ring;
    std::vector<RingElement> gens;
    RingElement witness;
    std::optional<RingElement> proof_candidate; // 1 + prod(gens) when it works
    std::vector<std::string> transcript;

    Report to_report() const;
};

// Monoids: positive integers under multiplication for Z, monic polynomials
// for F_p[x]. bound caps magnitude / degree of the search. Throws
// SearchExhaustedError when no witness exists within the bound.
GenerationWitness monoid_generation_witness(const Ring& ring, std::vector<RingElement> gens,
                                            const Int& bound);

// Block structure of the group algebra of the affine group {q -> rq + n} of
// F_p, read off from the spectrum of a random Hermitian commutant element of
// the left regular representation (seeded, deterministic).
struct BlockDecomposition {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> dims; // ascending; sum of squares = p(p-1)
    double max_residual = 0;         // largest within-cluster eigenvalue spread
    double min_split_gap = 0;        // smallest gap between adjacent clusters
    std::uint64_t seed = 0;
    bool ambiguous = false;
    std::string note;

    Report to_report() const;
};

BlockDecomposition affine_group_algebra_decomposition(std::uint32_t p, std::uint64_t seed = 42);

} // namespace ringrep
