#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "f1arr/arrangement.hpp"
#include "f1arr/errors.hpp"
#include "f1arr/graph.hpp"
#include "f1arr/matrix.hpp"

namespace testutil {

inline f1arr::RatMatrix mat(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    f1arr::RatMatrix m(0, cols);
    for (const auto& r : rows) {
        std::vector<f1arr::Rational> row(r.begin(), r.end());
        m.append_row(row);
    }
    return m;
}

inline f1arr::Hyperplane hp(const std::vector<long>& normal, long num = 0, long den = 1) {
    std::vector<f1arr::Rational> v(normal.begin(), normal.end());
    return f1arr::Hyperplane::make(v, f1arr::Rational(f1arr::Int(num), f1arr::Int(den)));
}

inline f1arr::Arrangement central(const std::vector<std::vector<long>>& normals,
                                  std::size_t dim) {
    std::vector<f1arr::Hyperplane> hs;
    for (const auto& n : normals) hs.push_back(hp(n));
    return f1arr::normalize(hs, dim).arrangement;
}

template <typename F>
f1arr::ErrorKind thrown_kind(F&& fn) {
    try {
        fn();
    } catch (const f1arr::Error& e) {
        return e.kind();
    }
    throw std::runtime_error("expected an f1arr::Error to be thrown");
}

// ---- random instances (fixed seeds at the call sites keep runs stable) ----

inline f1arr::Arrangement random_central(std::mt19937& rng, std::size_t max_dim = 4,
                                         std::size_t max_n = 8, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<std::size_t> dim_dist(0, max_dim);
    std::size_t dim = dim_dist(rng);
    std::size_t n = 0;
    if (dim > 0) {
        std::uniform_int_distribution<std::size_t> n_dist(0, max_n);
        n = n_dist(rng);
    }
    std::uniform_int_distribution<int> entry(lo, hi);
    std::vector<f1arr::Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<f1arr::Rational> v(dim);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& e : v) {
                int x = entry(rng);
                e = x;
                nonzero = nonzero || x != 0;
            }
        }
        hs.push_back(f1arr::Hyperplane::make(v));
    }
    return f1arr::normalize(hs, dim).arrangement;
}

inline f1arr::Arrangement random_essential(std::mt19937& rng, std::size_t max_dim = 4,
                                           std::size_t max_n = 8) {
    while (true) {
        f1arr::Arrangement a = random_central(rng, max_dim, max_n);
        if (a.ambient_dim > 0 && f1arr::is_essential(a)) return a;
    }
}

inline f1arr::Graph random_graph(std::mt19937& rng, std::size_t max_v = 8,
                                 std::size_t max_e = 12) {
    std::uniform_int_distribution<std::size_t> vd(1, max_v);
    std::size_t v = vd(rng);
    std::uniform_int_distribution<std::size_t> ed(0, max_e);
    std::size_t e = ed(rng);
    std::uniform_int_distribution<std::size_t> vv(0, v - 1);
    f1arr::Graph g{v, {}};
    for (std::size_t i = 0; i < e; ++i) g.edges.emplace_back(vv(rng), vv(rng));
    return g;
}

// Independent ground truth for the lattice: enumerate all 2^n hyperplane
// subsets, keep the consistent systems, and dedup by canonical rref key.
// Returns key -> flat dimension.
inline std::map<std::string, std::size_t> brute_force_flats(const f1arr::Arrangement& a) {
    std::map<std::string, std::size_t> flats;
    const std::size_t n = a.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        f1arr::RatMatrix m(0, a.ambient_dim + 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint32_t(1) << i)) m.append_row(a.augmented_row(i));
        }
        f1arr::RrefResult rr = f1arr::rref(m);
        bool consistent = rr.pivots.empty() || rr.pivots.back() != a.ambient_dim;
        if (!consistent) continue;
        flats.emplace(f1arr::matrix_key(rr.matrix), a.ambient_dim - rr.matrix.rows());
    }
    return flats;
}

}  // namespace testutil
