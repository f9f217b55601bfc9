#include "f1arr/matrix.hpp"

#include <sstream>
#include <utility>

#include "f1arr/errors.hpp"

namespace f1arr {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error::input("matrix entry count does not match the given shape");
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            throw Error::input("rows of differing lengths");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> RatMatrix::row(std::size_t r) const {
    return std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RatMatrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error::input("appended row has wrong length");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

void swap_rows(RatMatrix& a, std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(s, j));
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        swap_rows(a, r, p);
        Rational pivot = a.at(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) /= pivot;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RatMatrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    }
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        swap_rows(a, r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a.at(i, c) == 0) continue;
            Rational f = a.at(i, c) / a.at(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

RatMatrix kernel_basis(const RatMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n);
        v[f] = 1;
        for (std::size_t j = 0; j < rr.pivots.size(); ++j) {
            v[rr.pivots[j]] = -rr.matrix.at(j, f);
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return RatMatrix(0, n);
    // re-reduce so the returned basis is the canonical rref of the kernel
    return rref(RatMatrix::from_rows(basis)).matrix;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint64_t reduce_mod(const Int& v, std::uint64_t p) {
    Int r = v % Int(p);
    if (r < 0) r += Int(p);
    return r.convert_to<std::uint64_t>();
}

}  // namespace

std::size_t rank_mod_p(const RatMatrix& m, std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 31) || !is_prime(p)) {
        throw Error::input("rank_mod_p requires a prime p below 2^31");
    }
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = m.at(i, j);
            std::uint64_t den = reduce_mod(denominator(e), p);
            if (den == 0) {
                throw Error::input("denominator divisible by p=" + std::to_string(p));
            }
            a[i][j] = mul_mod(reduce_mod(numerator(e), p), inv_mod(den, p), p);
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[r]);
        std::uint64_t inv = inv_mod(a[r][c], p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            std::uint64_t f = mul_mod(a[i][c], inv, p);
            for (std::size_t j = c; j < m.cols(); ++j) {
                a[i][j] = (a[i][j] + p - mul_mod(f, a[r][j], p)) % p;
            }
        }
        ++r;
    }
    return r;
}

bool row_space_contains(const RatMatrix& reduced, const RatMatrix& rows) {
    // pivot columns of the reduced matrix: first nonzero entry of each row
    std::vector<std::size_t> pivots(reduced.rows());
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        std::size_t c = 0;
        while (c < reduced.cols() && reduced.at(i, c) == 0) ++c;
        pivots[i] = c;
    }
    for (std::size_t k = 0; k < rows.rows(); ++k) {
        std::vector<Rational> v = rows.row(k);
        for (std::size_t i = 0; i < reduced.rows(); ++i) {
            if (pivots[i] == reduced.cols()) continue;  // zero row, nothing to reduce by
            if (v[pivots[i]] == 0) continue;
            Rational factor = v[pivots[i]];  // pivot entries are 1
            for (std::size_t j = pivots[i]; j < reduced.cols(); ++j) {
                v[j] -= factor * reduced.at(i, j);
            }
        }
        for (const Rational& e : v) {
            if (e != 0) return false;
        }
    }
    return true;
}

RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw Error::input("stacking matrices of differing widths");
    RatMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
    }
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
    }
    return out;
}

std::string matrix_key(const RatMatrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols() << ":";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) os << ";";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ",";
            os << to_decimal(m.at(i, j));
        }
    }
    return os.str();
}

}  // namespace f1arr
