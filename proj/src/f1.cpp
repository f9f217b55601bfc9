#include "f1arr/f1.hpp"

#include "f1arr/errors.hpp"
#include "f1arr/lattice.hpp"

namespace f1arr {

TaylorAtOne taylor_at_one(const IntPolynomial& chi) {
    TaylorAtOne t;
    if (chi.is_zero()) return t;
    std::size_t d = static_cast<std::size_t>(chi.degree());
    t.coeffs.assign(d + 1, Int(0));
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = i; j <= d; ++j) {
            t.coeffs[i] += chi.coeff(j) * binomial(j, i);
        }
    }
    return t;
}

IntPolynomial expand_taylor(const TaylorAtOne& t) {
    IntPolynomial shift({Int(-1), Int(1)});  // t - 1
    IntPolynomial out;
    IntPolynomial power = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
        out = out + IntPolynomial::constant(t.coeffs[i]) * power;
        power = power * shift;
    }
    return out;
}

bool taylor_nonnegative(const TaylorAtOne& t) {
    for (const Int& c : t.coeffs) {
        if (c < 0) return false;
    }
    return true;
}

bool size_bound_holds(const Arrangement& a, const TaylorAtOne& t) {
    return !taylor_nonnegative(t) || a.size() <= a.ambient_dim;
}

std::string to_string(Verdict v) {
    return v == Verdict::Torifiable ? "torifiable" : "not_torifiable";
}

std::vector<TorusStratum> boolean_torus_decomposition(std::size_t n, std::size_t dim) {
    std::vector<TorusStratum> strata;
    for (std::size_t k = 0; k + n <= dim; ++k) {
        strata.push_back({n + k, binomial(dim - n, k)});
    }
    return strata;
}

namespace {

// Greedy circuit extraction: one ascending pass over a dependent index set,
// dropping every element whose removal keeps the set dependent, ends on a
// minimal dependent set.
std::vector<std::size_t> minimal_dependent_subset(const Arrangement& a) {
    auto dependent = [&](const std::vector<std::size_t>& idx) {
        RatMatrix m(idx.size(), a.ambient_dim);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < a.ambient_dim; ++c) {
                m.at(r, c) = Rational(a.hyperplanes[idx[r]].normal[c]);
            }
        }
        return rank(m) < idx.size();
    };
    std::vector<std::size_t> s(a.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::vector<std::size_t> t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(pos));
        if (dependent(t)) {
            s = std::move(t);
        } else {
            ++pos;
        }
    }
    return s;
}

}  // namespace

TorificationReport torification_verdict(const Arrangement& a) {
    if (!a.central()) {
        throw Error::input("torification analysis requires a central arrangement; cone first");
    }
    TorificationReport r;
    r.charpoly = charpoly(a);
    r.taylor = taylor_at_one(r.charpoly);
    r.boolean_arrangement = is_boolean(a);
    r.taylor_nonnegative = taylor_nonnegative(r.taylor);
    r.essential = is_essential(a);

    // cross-checks; a failure here falsifies the theory or the implementation
    if (r.boolean_arrangement && !r.taylor_nonnegative) {
        throw Error::invariant(
            "self-check failed: Boolean arrangement with a negative Taylor coefficient");
    }
    if (r.essential && r.boolean_arrangement != r.taylor_nonnegative) {
        throw Error::invariant(
            "self-check failed: essential arrangement where the Boolean and Taylor conditions "
            "disagree");
    }
    if (r.taylor_nonnegative && a.size() > a.ambient_dim) {
        throw Error::invariant(
            "self-check failed: nonnegative Taylor data with more hyperplanes than dimensions");
    }

    if (r.boolean_arrangement) {
        r.verdict = Verdict::Torifiable;
        r.independence_pivots = rref(a.normal_matrix()).pivots;
        r.torus_decomposition = boolean_torus_decomposition(a.size(), a.ambient_dim);
    } else {
        r.verdict = Verdict::NotTorifiable;
        if (!r.taylor_nonnegative) {
            for (std::size_t i = 0; i < r.taylor.coeffs.size(); ++i) {
                if (r.taylor.coeffs[i] < 0) {
                    r.first_negative_taylor_index = i;
                    break;
                }
            }
        } else {
            r.dependent_subset = minimal_dependent_subset(a);
            if (!r.essential) {
                r.note =
                    "all Taylor coefficients at t=1 are nonnegative, but the arrangement is not "
                    "essential; nonnegativity is necessary, not sufficient, for a torification";
            }
        }
    }
    return r;
}

}  // namespace f1arr
