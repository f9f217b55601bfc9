#include "f1arr/numbers.hpp"

#include <cctype>

#include "f1arr/errors.hpp"

namespace f1arr {

namespace {

Int parse_integer(const std::string& s, const std::string& full_token) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) {
        throw Error::input("malformed number '" + full_token + "'");
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw Error::input("malformed number '" + full_token + "'");
        }
    }
    return Int(s);
}

}  // namespace

Rational parse_rational(const std::string& token) {
    if (token.empty()) {
        throw Error::input("empty number token");
    }
    std::size_t slash = token.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(token, token));
    }
    Int num = parse_integer(token.substr(0, slash), token);
    Int den = parse_integer(token.substr(slash + 1), token);
    if (den == 0) {
        throw Error::input("zero denominator in '" + token + "'");
    }
    return Rational(num, den);
}

std::string to_decimal(const Int& value) { return value.str(); }

std::string to_decimal(const Rational& value) {
    Int den = denominator(value);
    if (den == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + den.str();
}

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (std::size_t i = 0; i < k; ++i) {
        result *= Int(n - i);
        result /= Int(i + 1);  // exact at every step
    }
    return result;
}

Int int_pow(Int base, std::size_t exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n <= 2) return 2;
    std::uint64_t p = n | 1;
    while (!is_prime(p)) p += 2;
    return p;
}

}  // namespace f1arr
