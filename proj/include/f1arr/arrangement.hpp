#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "f1arr/matrix.hpp"
#include "f1arr/numbers.hpp"

namespace f1arr {

// A hyperplane {x : normal . x = offset} in canonical form: the normal is a
// primitive integer vector (gcd 1) whose first nonzero entry is positive, the
// offset is scaled along with it. Canonical form makes equality of
// hyperplanes plain value equality, so dedup needs no tolerances.
struct Hyperplane {
    std::vector<Int> normal;
    Rational offset = 0;

    // Canonicalizes; throws Error(Input) on a zero normal.
    static Hyperplane make(const std::vector<Rational>& normal, const Rational& offset = 0);

    bool linear() const { return offset == 0; }
    bool operator==(const Hyperplane&) const = default;
};

bool operator<(const Hyperplane& a, const Hyperplane& b);

enum class ArrangementKind { Central, Affine };

// A reduced arrangement: canonically ordered, duplicate-free hyperplanes in
// Q^ambient_dim. Central means every offset is zero. ambient_dim = 0 and an
// empty hyperplane list are both legal.
struct Arrangement {
    std::size_t ambient_dim = 0;
    std::vector<Hyperplane> hyperplanes;
    ArrangementKind kind = ArrangementKind::Central;

    std::size_t size() const { return hyperplanes.size(); }
    bool central() const { return kind == ArrangementKind::Central; }

    RatMatrix normal_matrix() const;                        // n x dim
    std::vector<Rational> augmented_row(std::size_t i) const;  // [normal | offset]

    bool operator==(const Arrangement&) const = default;
};

struct Normalized {
    Arrangement arrangement;
    std::size_t merged_duplicates = 0;
};

// Canonical, duplicate-free, sorted arrangement from raw hyperplanes.
// Multiplicities are forgotten; the merge count is reported for warnings.
Normalized normalize(const std::vector<Hyperplane>& raw, std::size_t ambient_dim);

// True iff the normals span the ambient space. Central arrangements only.
bool is_essential(const Arrangement& a);

// True iff the normals are linearly independent (so the intersection poset is
// the lattice of subsets). Central arrangements only.
bool is_boolean(const Arrangement& a);

// Central arrangement in dimension ambient_dim + 1: {n.x = c} lifts to
// {n.x - c x0 = 0} with the extra hyperplane {x0 = 0} (x0 is coordinate 0).
Arrangement cone(const Arrangement& a);

Arrangement delete_hyperplane(const Arrangement& a, std::size_t index);

// The arrangement induced inside hyperplane `index`, in coordinates given by
// the canonical kernel basis of its normal. Central arrangements only.
Arrangement restrict_to(const Arrangement& a, std::size_t index);

// Canonical text form; doubles as the memo key for deletion-restriction.
std::string serialize(const Arrangement& a);

struct ParsedArrangement {
    Arrangement arrangement;
    std::size_t merged_duplicates = 0;
    std::vector<std::string> warnings;
};

ParsedArrangement parse_arrangement(const std::string& text);

}  // namespace f1arr
