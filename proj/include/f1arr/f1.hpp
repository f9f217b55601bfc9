#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "f1arr/arrangement.hpp"
#include "f1arr/polynomial.hpp"

namespace f1arr {

// Coefficients of chi in the basis (t-1)^i: chi(t) = sum_i coeffs[i] (t-1)^i.
// Nonnegativity of these is the combinatorial obstruction to a torification.
struct TaylorAtOne {
    std::vector<Int> coeffs;
};

// Exact basis change via c_i = sum_j a_j binomial(j, i).
TaylorAtOne taylor_at_one(const IntPolynomial& chi);

// Inverse basis change; round-trips with taylor_at_one.
IntPolynomial expand_taylor(const TaylorAtOne& t);

bool taylor_nonnegative(const TaylorAtOne& t);

// Nonnegative Taylor data forces n <= dim. Returns whether the implication
// holds for this instance; false would mean an implementation bug, so this
// doubles as a fuzzing oracle.
bool size_bound_holds(const Arrangement& a, const TaylorAtOne& t);

enum class Verdict { Torifiable, NotTorifiable };

std::string to_string(Verdict v);

// One stratum of a torus decomposition: `multiplicity` copies of a split
// torus of dimension `dim`.
struct TorusStratum {
    std::size_t dim = 0;
    Int multiplicity;
};

// The decomposition behind a Boolean complement:
// (L-1)^n L^(dim-n) = sum_k binomial(dim-n, k) (L-1)^(n+k).
std::vector<TorusStratum> boolean_torus_decomposition(std::size_t n, std::size_t dim);

struct TorificationReport {
    bool boolean_arrangement = false;  // the decisive condition
    bool taylor_nonnegative = false;
    bool essential = false;
    Verdict verdict = Verdict::NotTorifiable;
    IntPolynomial charpoly;
    TaylorAtOne taylor;

    // exactly one witness is set:
    // torifiable: pivot columns certifying independence of the normals
    std::optional<std::vector<std::size_t>> independence_pivots;
    // a negative Taylor coefficient
    std::optional<std::size_t> first_negative_taylor_index;
    // a minimal dependent set of normals (a circuit)
    std::optional<std::vector<std::size_t>> dependent_subset;

    std::optional<std::string> note;
    std::optional<std::vector<TorusStratum>> torus_decomposition;
};

// Decides torifiability of the complement. The Boolean condition is the
// decision procedure; the Taylor and essentiality data are computed
// independently and cross-checked against it (a mismatch on an essential
// arrangement throws Error(Invariant)).
TorificationReport torification_verdict(const Arrangement& a);

}  // namespace f1arr
