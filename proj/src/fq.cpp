#include "f1arr/fq.hpp"

#include <vector>

#include "f1arr/errors.hpp"
#include "f1arr/lattice.hpp"
#include "f1arr/matrix.hpp"

namespace f1arr {

namespace {

std::uint64_t reduce_mod(const Int& v, std::uint64_t p) {
    Int r = v % Int(p);
    if (r < 0) r += Int(p);
    return r.convert_to<std::uint64_t>();
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = (r * a) % p;
        a = (a * a) % p;
        e >>= 1;
    }
    return r;
}

RatMatrix subset_matrix(const Arrangement& a, std::uint32_t mask, bool augmented) {
    std::size_t cols = a.ambient_dim + (augmented ? 1 : 0);
    RatMatrix m(0, cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(mask & (std::uint32_t(1) << i))) continue;
        std::vector<Rational> row = a.augmented_row(i);
        if (!augmented) row.pop_back();
        m.append_row(row);
    }
    return m;
}

void validate_prime(std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 31) || !is_prime(p)) {
        throw Error::input("p must be a prime below 2^31, got " + std::to_string(p));
    }
}

}  // namespace

bool certifies(const Arrangement& a, std::uint64_t p, std::size_t max_subset_n) {
    validate_prime(p);
    const std::size_t n = a.size();
    if (n > max_subset_n) {
        throw Error::budget("subset certification covers at most " +
                            std::to_string(max_subset_n) + " hyperplanes, got " +
                            std::to_string(n));
    }
    for (const Hyperplane& h : a.hyperplanes) {
        if (reduce_mod(denominator(h.offset), p) == 0) return false;
    }
    const bool affine = !a.central();
    // rank patterns of subsets up to size dim+1 determine the poset; the
    // augmented system needs one more row to see every dependency
    const std::size_t max_size = a.ambient_dim + (affine ? 2 : 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) continue;
        RatMatrix m = subset_matrix(a, mask, false);
        if (rank(m) != rank_mod_p(m, p)) return false;
        if (affine) {
            RatMatrix aug = subset_matrix(a, mask, true);
            if (rank(aug) != rank_mod_p(aug, p)) return false;
        }
    }
    return true;
}

FieldSpec good_prime(const Arrangement& a, std::uint64_t start, std::size_t max_subset_n) {
    std::uint64_t p = next_prime(start < 2 ? 2 : start);
    while (p < 1000000) {
        if (certifies(a, p, max_subset_n)) return FieldSpec{p, true};
        p = next_prime(p + 1);
    }
    // unreachable for genuine inputs: only finitely many primes divide a minor
    throw Error::budget("no certified prime below 10^6");
}

CountResult count_complement(const Arrangement& a, const FieldSpec& f, const Int& budget) {
    if (!f.certified) {
        throw Error::input("count_complement requires a certified prime");
    }
    validate_prime(f.p);
    const std::uint64_t p = f.p;
    const std::size_t dim = a.ambient_dim;
    const std::size_t n = a.size();

    CountResult result;
    result.p = p;
    result.enumerated = int_pow(Int(p), dim);
    if (result.enumerated > budget) {
        throw Error::budget("enumeration of p^dim = " + to_decimal(result.enumerated) +
                            " points exceeds the budget of " + to_decimal(budget));
    }

    // forms as columns for odometer locality: cols[k][i] = normal_i[k] mod p
    std::vector<std::vector<std::uint64_t>> cols(dim, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            cols[k][i] = reduce_mod(a.hyperplanes[i].normal[k], p);
        }
    }
    // track w_i = normal_i . x - offset_i (mod p); the point lies on
    // hyperplane i exactly when w_i = 0
    std::vector<std::uint64_t> w(n);
    std::size_t zero_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& c = a.hyperplanes[i].offset;
        std::uint64_t den = reduce_mod(denominator(c), p);
        if (den == 0) {
            throw Error::input("offset denominator divisible by p=" + std::to_string(p));
        }
        std::uint64_t cm = (reduce_mod(numerator(c), p) * pow_mod(den, p - 2, p)) % p;
        w[i] = (p - cm) % p;
        if (w[i] == 0) ++zero_count;
    }

    const std::uint64_t total = result.enumerated.convert_to<std::uint64_t>();
    std::vector<std::uint64_t> x(dim, 0);
    std::uint64_t count = 0;

    // odometer over F_p^dim; every coordinate change (increment or wrap,
    // both +1 mod p) adds that coordinate's column to w
    auto bump = [&](std::size_t k) {
        const std::vector<std::uint64_t>& col = cols[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (col[i] == 0) continue;
            std::uint64_t next = w[i] + col[i];
            if (next >= p) next -= p;
            if (w[i] == 0) --zero_count;
            if (next == 0) ++zero_count;
            w[i] = next;
        }
    };

    for (std::uint64_t t = 0; t < total; ++t) {
        if (zero_count == 0) ++count;
        if (t + 1 == total) break;
        std::size_t k = dim;
        while (k-- > 0) {
            bump(k);
            if (++x[k] == p) {
                x[k] = 0;
            } else {
                break;
            }
        }
    }

    result.points = Int(count);
    result.predicted = charpoly(a)(Int(p));
    result.match = result.points == result.predicted;
    return result;
}

bool verify_delres_partition(const Arrangement& a, std::size_t index, const FieldSpec& f,
                             const Int& budget) {
    if (!f.certified) {
        throw Error::input("verify_delres_partition requires a certified prime");
    }
    Arrangement deleted = delete_hyperplane(a, index);
    Arrangement restricted = restrict_to(a, index);
    if (!certifies(restricted, f.p)) {
        throw Error::input("p=" + std::to_string(f.p) +
                           " does not certify the restriction; choose a larger prime");
    }
    CountResult whole = count_complement(a, f, budget);
    CountResult del = count_complement(deleted, FieldSpec{f.p, true}, budget);
    CountResult res = count_complement(restricted, FieldSpec{f.p, true}, budget);
    return del.points == whole.points + res.points;
}

}  // namespace f1arr
