#pragma once

#include <cstddef>
#include <vector>

#include "f1arr/arrangement.hpp"
#include "f1arr/matrix.hpp"
#include "f1arr/polynomial.hpp"

namespace f1arr {

// One element of the intersection poset: a nonempty intersection of
// hyperplanes, keyed by the canonical rref of its defining system
// [normal | offset]. The offset column is identically zero for central
// arrangements.
struct Flat {
    RatMatrix eqs;
    std::size_t dim = 0;
    std::vector<std::size_t> contains;  // indices of hyperplanes containing the flat
    Int mobius = 0;                     // valid once IntersectionPoset::mobius_filled
};

// L(A), ordered by reverse inclusion; the ambient space V is the unique
// bottom element (flat id 0). Flats are stored layer by layer (codimension
// 0, 1, 2, ...) and key-sorted within a layer, so the whole structure is
// deterministic.
struct IntersectionPoset {
    std::size_t ambient_dim = 0;
    bool central = true;
    std::vector<Flat> flats;
    std::vector<std::vector<std::size_t>> layers;  // flat ids grouped by codimension
    std::vector<std::vector<std::size_t>> covers;  // per flat: adjacent flats one layer down
    bool mobius_filled = false;

    const Flat& bottom() const { return flats[0]; }
};

// Poset order: x <= y iff flat y is contained in flat x as a subspace.
bool flat_leq(const IntersectionPoset& p, std::size_t x, std::size_t y);

// Builds L(A) layer by layer: codim-(k+1) flats arise by intersecting
// codim-k flats with single hyperplanes, deduplicated by canonical rref key.
// Affine inputs are allowed; empty intersections are dropped.
IntersectionPoset build_lattice(const Arrangement& a);

// Fills the Mobius values bottom-up: mu(V) = 1 and
// mu(X) = -sum of mu(Y) over V <= Y < X.
IntersectionPoset mobius(IntersectionPoset p);

// chi(A, t) = sum over flats of mu(X) t^(dim X). Requires Mobius values.
IntPolynomial charpoly_mobius(const IntersectionPoset& p);

// chi(A, t) by the deletion-restriction recursion chi(A) = chi(A') - chi(A''),
// pivoting on the last hyperplane in canonical order and memoizing by the
// canonical serialized arrangement. Central arrangements only.
// Throws Error(Budget) past `subproblem_budget` distinct subproblems.
IntPolynomial charpoly_delres(const Arrangement& a, std::size_t subproblem_budget = 100000);

// Convenience: build_lattice + mobius + charpoly_mobius.
IntPolynomial charpoly(const Arrangement& a);

// [M(A)] = chi(A, L) in the Grothendieck ring of varieties: the same
// coefficient data with the variable read as the affine-line class.
// Render with IntPolynomial::to_string("L").
IntPolynomial grothendieck_class(const IntPolynomial& chi);

}  // namespace f1arr
