#pragma once

#include <cstdint>

#include "f1arr/arrangement.hpp"
#include "f1arr/numbers.hpp"

namespace f1arr {

// A prime together with its certification: every subset of the defining
// system keeps its rank after reduction mod p, which pins the intersection
// poset of A over F_p to the one over Q.
struct FieldSpec {
    std::uint64_t p = 0;
    bool certified = false;
};

struct CountResult {
    Int points;              // exact count of points off every hyperplane
    Int predicted;           // chi(A, p)
    bool match = false;      // points == predicted
    Int enumerated;          // p^dim, the domain size
    std::uint64_t p = 0;
};

// Subset-rank certification. Checks every hyperplane subset of size up to
// dim+1 (dim+2 for affine arrangements, where the augmented system also
// decides feasibility). Throws Error(Budget) when the arrangement has more
// than max_subset_n hyperplanes, and Error(Input) if p is not prime.
bool certifies(const Arrangement& a, std::uint64_t p, std::size_t max_subset_n = 14);

// The smallest certified prime >= start.
FieldSpec good_prime(const Arrangement& a, std::uint64_t start = 2,
                     std::size_t max_subset_n = 14);

// Brute-force point count of the complement in F_p^dim, with the lattice
// prediction chi(A, p) alongside. Throws Error(Budget) when p^dim exceeds
// the budget and Error(Input) when the prime is not certified.
CountResult count_complement(const Arrangement& a, const FieldSpec& f,
                             const Int& budget = Int(100000000));

// Checks |M(A')| = |M(A)| + |M(A'')| over F_p for the deletion A' and
// restriction A'' at `index`, with each count enumerated independently.
// The prime must certify the restriction as well (verified here).
bool verify_delres_partition(const Arrangement& a, std::size_t index, const FieldSpec& f,
                             const Int& budget = Int(100000000));

}  // namespace f1arr
