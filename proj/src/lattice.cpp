#include "f1arr/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "f1arr/errors.hpp"

namespace f1arr {

namespace {

RatMatrix single_row(const std::vector<Rational>& row) {
    RatMatrix m(1, row.size());
    for (std::size_t j = 0; j < row.size(); ++j) m.at(0, j) = row[j];
    return m;
}

std::vector<std::size_t> pivot_columns(const RatMatrix& reduced) {
    std::vector<std::size_t> pivots(reduced.rows());
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        std::size_t c = 0;
        while (c < reduced.cols() && reduced.at(i, c) == 0) ++c;
        pivots[i] = c;
    }
    return pivots;
}

// Extends an rref system by one row: reduce the row, normalize it, eliminate
// its pivot column from the other rows and insert it in pivot order. Returns
// the new pivot column, or cols() if the row was already in the row space.
// One extension costs O(rows * cols) instead of a full re-reduction.
std::size_t rref_extend(RatMatrix& reduced, std::vector<Rational> row) {
    std::vector<std::size_t> pivots = pivot_columns(reduced);
    for (std::size_t j = 0; j < reduced.rows(); ++j) {
        if (row[pivots[j]] == 0) continue;
        Rational f = row[pivots[j]];
        for (std::size_t c = pivots[j]; c < reduced.cols(); ++c) {
            row[c] -= f * reduced.at(j, c);
        }
    }
    std::size_t pc = 0;
    while (pc < reduced.cols() && row[pc] == 0) ++pc;
    if (pc == reduced.cols()) return pc;

    Rational inv = row[pc];
    for (std::size_t c = pc; c < row.size(); ++c) row[c] /= inv;
    for (std::size_t j = 0; j < reduced.rows(); ++j) {
        if (reduced.at(j, pc) == 0) continue;
        Rational f = reduced.at(j, pc);
        for (std::size_t c = pc; c < reduced.cols(); ++c) {
            reduced.at(j, c) -= f * row[c];
        }
    }
    std::size_t insert_at = 0;
    while (insert_at < pivots.size() && pivots[insert_at] < pc) ++insert_at;
    RatMatrix out(reduced.rows() + 1, reduced.cols());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            if (i < insert_at) {
                out.at(i, c) = reduced.at(i, c);
            } else if (i == insert_at) {
                out.at(i, c) = row[c];
            } else {
                out.at(i, c) = reduced.at(i - 1, c);
            }
        }
    }
    reduced = std::move(out);
    return pc;
}

std::vector<std::size_t> hyperplanes_containing(const Arrangement& a, const RatMatrix& eqs) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (row_space_contains(eqs, single_row(a.augmented_row(j)))) out.push_back(j);
    }
    return out;
}

}  // namespace

bool flat_leq(const IntersectionPoset& p, std::size_t x, std::size_t y) {
    return row_space_contains(p.flats[y].eqs, p.flats[x].eqs);
}

IntersectionPoset build_lattice(const Arrangement& a) {
    const std::size_t dim = a.ambient_dim;
    const std::size_t aug = dim + 1;

    IntersectionPoset poset;
    poset.ambient_dim = dim;
    poset.central = a.central();

    Flat ambient;
    ambient.eqs = RatMatrix(0, aug);
    ambient.dim = dim;
    ambient.contains = {};
    poset.flats.push_back(std::move(ambient));
    poset.layers.push_back({0});
    poset.covers.push_back({});

    std::vector<std::size_t> current = {0};
    while (!current.empty()) {
        // key -> (flat, parents); std::map keeps the layer order deterministic
        std::map<std::string, std::pair<Flat, std::set<std::size_t>>> next;
        for (std::size_t id : current) {
            const Flat& flat = poset.flats[id];
            std::set<std::size_t> in(flat.contains.begin(), flat.contains.end());
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (in.count(i)) continue;
                RatMatrix eqs = flat.eqs;
                std::size_t new_pivot = rref_extend(eqs, a.augmented_row(i));
                if (new_pivot == aug) {
                    throw Error::invariant(
                        "self-check failed: hyperplane both contains and misses a flat");
                }
                if (new_pivot == dim) {  // pivot in the offset column: empty intersection
                    if (a.central()) {
                        throw Error::invariant(
                            "self-check failed: empty intersection in a central arrangement");
                    }
                    continue;
                }
                std::string key = matrix_key(eqs);
                auto it = next.find(key);
                if (it == next.end()) {
                    Flat f;
                    f.dim = dim - eqs.rows();
                    f.contains = hyperplanes_containing(a, eqs);
                    f.eqs = std::move(eqs);
                    it = next.emplace(std::move(key),
                                      std::make_pair(std::move(f), std::set<std::size_t>{}))
                             .first;
                }
                it->second.second.insert(id);
            }
        }
        if (next.empty()) break;
        std::vector<std::size_t> layer;
        for (auto& [key, entry] : next) {
            std::size_t new_id = poset.flats.size();
            poset.flats.push_back(std::move(entry.first));
            poset.covers.push_back({});
            layer.push_back(new_id);
            for (std::size_t parent : entry.second) poset.covers[parent].push_back(new_id);
        }
        poset.layers.push_back(layer);
        current = std::move(layer);
    }
    return poset;
}

IntersectionPoset mobius(IntersectionPoset p) {
    // Fast interval test: a flat is the intersection of the hyperplanes
    // containing it, so Y >= X as subspaces iff contains(Y) is a subset of
    // contains(X). Equivalent to the row-space test in flat_leq, a fraction
    // of the cost on big lattices.
    for (std::size_t k = 0; k < p.layers.size(); ++k) {
        for (std::size_t id : p.layers[k]) {
            if (k == 0) {
                p.flats[id].mobius = 1;
                continue;
            }
            const std::vector<std::size_t>& cx = p.flats[id].contains;
            Int sum = 0;
            for (std::size_t lower = 0; lower < k; ++lower) {
                for (std::size_t y : p.layers[lower]) {
                    const std::vector<std::size_t>& cy = p.flats[y].contains;
                    if (std::includes(cx.begin(), cx.end(), cy.begin(), cy.end())) {
                        sum += p.flats[y].mobius;
                    }
                }
            }
            p.flats[id].mobius = -sum;
        }
    }
    p.mobius_filled = true;
    return p;
}

IntPolynomial charpoly_mobius(const IntersectionPoset& p) {
    if (!p.mobius_filled) {
        throw std::logic_error("charpoly_mobius called before mobius()");
    }
    std::vector<Int> coeffs(p.ambient_dim + 1);
    for (const Flat& f : p.flats) coeffs[f.dim] += f.mobius;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial charpoly_delres(const Arrangement& a, std::size_t subproblem_budget) {
    if (!a.central()) {
        throw Error::input("deletion-restriction requires a central arrangement; cone first");
    }
    std::unordered_map<std::string, IntPolynomial> memo;
    std::function<IntPolynomial(const Arrangement&)> go = [&](const Arrangement& arr) {
        if (arr.size() == 0) {
            return IntPolynomial::monomial(1, arr.ambient_dim);
        }
        std::string key = serialize(arr);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::size_t pivot = arr.size() - 1;  // last hyperplane in canonical order
        IntPolynomial chi = go(delete_hyperplane(arr, pivot)) - go(restrict_to(arr, pivot));
        if (memo.size() >= subproblem_budget) {
            throw Error::budget("deletion-restriction exceeded the budget of " +
                                std::to_string(subproblem_budget) + " distinct subproblems");
        }
        memo.emplace(std::move(key), chi);
        return chi;
    };
    return go(a);
}

IntPolynomial charpoly(const Arrangement& a) {
    return charpoly_mobius(mobius(build_lattice(a)));
}

IntPolynomial grothendieck_class(const IntPolynomial& chi) { return chi; }

}  // namespace f1arr
