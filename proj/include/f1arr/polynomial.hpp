#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "f1arr/numbers.hpp"

namespace f1arr {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored by ascending degree with no trailing zeros. The characteristic
// polynomial chi(A, t) lives here; read the variable as the affine-line
// class L to get the Grothendieck class of the complement.
class IntPolynomial {
public:
    IntPolynomial() = default;  // the zero polynomial
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(const Int& c);
    static IntPolynomial monomial(const Int& coeff, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    Int coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Int(0); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int operator()(const Int& x) const;  // exact evaluation

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial pow(std::size_t e) const;

    // "t^4 - 4t^3 + 6t^2 - 3t" style rendering; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

}  // namespace f1arr
