#include "f1arr/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "f1arr/errors.hpp"

namespace f1arr {

Hyperplane Hyperplane::make(const std::vector<Rational>& normal, const Rational& offset) {
    bool nonzero = false;
    for (const Rational& e : normal) {
        if (e != 0) {
            nonzero = true;
            break;
        }
    }
    if (!nonzero) {
        throw Error::input("zero normal vector is not a hyperplane");
    }

    // scale so entries are integers with gcd 1
    Int den_lcm = 1;
    for (const Rational& e : normal) den_lcm = lcm(den_lcm, denominator(e));
    std::vector<Int> w(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) {
        w[i] = numerator(normal[i]) * (den_lcm / denominator(normal[i]));
    }
    Int g = 0;
    for (const Int& v : w) g = gcd(g, v);
    g = abs(g);
    for (Int& v : w) v /= g;
    Rational scaled_offset = offset * Rational(den_lcm, g);

    // first nonzero entry positive
    for (const Int& v : w) {
        if (v == 0) continue;
        if (v < 0) {
            for (Int& u : w) u = -u;
            scaled_offset = -scaled_offset;
        }
        break;
    }
    return Hyperplane{std::move(w), std::move(scaled_offset)};
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.normal != b.normal) {
        return std::lexicographical_compare(a.normal.begin(), a.normal.end(),
                                            b.normal.begin(), b.normal.end());
    }
    return a.offset < b.offset;
}

RatMatrix Arrangement::normal_matrix() const {
    RatMatrix m(size(), ambient_dim);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            m.at(i, j) = Rational(hyperplanes[i].normal[j]);
        }
    }
    return m;
}

std::vector<Rational> Arrangement::augmented_row(std::size_t i) const {
    std::vector<Rational> row(ambient_dim + 1);
    for (std::size_t j = 0; j < ambient_dim; ++j) row[j] = Rational(hyperplanes[i].normal[j]);
    row[ambient_dim] = hyperplanes[i].offset;
    return row;
}

Normalized normalize(const std::vector<Hyperplane>& raw, std::size_t ambient_dim) {
    std::vector<Hyperplane> hs;
    hs.reserve(raw.size());
    for (const Hyperplane& h : raw) {
        if (h.normal.size() != ambient_dim) {
            throw Error::input("hyperplane has " + std::to_string(h.normal.size()) +
                               " coefficients, expected " + std::to_string(ambient_dim));
        }
        std::vector<Rational> nr(h.normal.begin(), h.normal.end());
        hs.push_back(Hyperplane::make(nr, h.offset));  // re-canonicalize: validates and dedups reliably
    }
    std::sort(hs.begin(), hs.end());
    auto last = std::unique(hs.begin(), hs.end());
    std::size_t merged = static_cast<std::size_t>(hs.end() - last);
    hs.erase(last, hs.end());

    bool central = true;
    for (const Hyperplane& h : hs) {
        if (!h.linear()) {
            central = false;
            break;
        }
    }
    Arrangement a{ambient_dim, std::move(hs),
                  central ? ArrangementKind::Central : ArrangementKind::Affine};
    return {std::move(a), merged};
}

bool is_essential(const Arrangement& a) {
    if (!a.central()) {
        throw Error::input("essentiality is defined for central arrangements; cone first");
    }
    return rank(a.normal_matrix()) == a.ambient_dim;
}

bool is_boolean(const Arrangement& a) {
    if (!a.central()) {
        throw Error::input("the Boolean test requires a central arrangement; cone first");
    }
    return rank(a.normal_matrix()) == a.size();
}

Arrangement cone(const Arrangement& a) {
    std::vector<Hyperplane> hs;
    hs.reserve(a.size() + 1);
    for (const Hyperplane& h : a.hyperplanes) {
        std::vector<Rational> v(a.ambient_dim + 1);
        v[0] = -h.offset;
        for (std::size_t j = 0; j < a.ambient_dim; ++j) v[j + 1] = Rational(h.normal[j]);
        hs.push_back(Hyperplane::make(v));
    }
    std::vector<Rational> x0(a.ambient_dim + 1);
    x0[0] = 1;
    hs.push_back(Hyperplane::make(x0));
    return normalize(hs, a.ambient_dim + 1).arrangement;
}

Arrangement delete_hyperplane(const Arrangement& a, std::size_t index) {
    if (index >= a.size()) {
        throw Error::input("hyperplane index " + std::to_string(index) + " out of range");
    }
    Arrangement out = a;
    out.hyperplanes.erase(out.hyperplanes.begin() + static_cast<std::ptrdiff_t>(index));
    bool central = true;
    for (const Hyperplane& h : out.hyperplanes) central = central && h.linear();
    out.kind = central ? ArrangementKind::Central : ArrangementKind::Affine;
    return out;
}

Arrangement restrict_to(const Arrangement& a, std::size_t index) {
    if (index >= a.size()) {
        throw Error::input("hyperplane index " + std::to_string(index) + " out of range");
    }
    if (!a.central()) {
        throw Error::input("restriction requires a central arrangement; cone first");
    }
    RatMatrix nh(1, a.ambient_dim);
    for (std::size_t j = 0; j < a.ambient_dim; ++j) {
        nh.at(0, j) = Rational(a.hyperplanes[index].normal[j]);
    }
    RatMatrix K = kernel_basis(nh);  // (dim-1) x dim, the coordinates of the restriction

    std::vector<Hyperplane> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == index) continue;
        std::vector<Rational> w(K.rows());
        bool nonzero = false;
        for (std::size_t r = 0; r < K.rows(); ++r) {
            Rational s = 0;
            for (std::size_t c = 0; c < K.cols(); ++c) {
                s += K.at(r, c) * Rational(a.hyperplanes[i].normal[c]);
            }
            w[r] = s;
            nonzero = nonzero || s != 0;
        }
        if (!nonzero) continue;  // hyperplane contains the restriction target entirely
        out.push_back(Hyperplane::make(w));
    }
    return normalize(out, a.ambient_dim - 1).arrangement;
}

std::string serialize(const Arrangement& a) {
    std::ostringstream os;
    os << "arrangement " << (a.central() ? "central" : "affine") << " dim=" << a.ambient_dim
       << "\n";
    for (const Hyperplane& h : a.hyperplanes) {
        os << "H";
        for (const Int& c : h.normal) os << " " << c.str();
        if (!a.central()) os << " = " << to_decimal(h.offset);
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string t;
    while (is >> t) tokens.push_back(t);
    return tokens;
}

// strips '#' comments and surrounding whitespace; empty result means skip
std::string strip_line(const std::string& raw) {
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = line.find_last_not_of(" \t\r\n");
    return line.substr(b, e - b + 1);
}

}  // namespace

ParsedArrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    bool header_seen = false;
    bool declared_central = true;
    std::size_t dim = 0;
    std::vector<Hyperplane> hs;

    while (std::getline(in, raw)) {
        std::string line = strip_line(raw);
        if (line.empty()) continue;
        std::vector<std::string> tok = tokenize(line);

        if (!header_seen) {
            if (tok.size() != 3 || tok[0] != "arrangement" ||
                (tok[1] != "central" && tok[1] != "affine") || tok[2].rfind("dim=", 0) != 0) {
                throw Error::input("expected header 'arrangement <central|affine> dim=<n>', got '" +
                                   line + "'");
            }
            declared_central = tok[1] == "central";
            Int d = 0;
            try {
                std::string ds = tok[2].substr(4);
                Rational r = parse_rational(ds);
                if (denominator(r) != 1 || numerator(r) < 0) throw Error::input("bad dimension");
                d = numerator(r);
            } catch (const Error&) {
                throw Error::input("bad dimension in header '" + line + "'");
            }
            dim = d.convert_to<std::size_t>();
            header_seen = true;
            continue;
        }

        if (tok[0] != "H") {
            throw Error::input("unexpected line '" + line + "' (want 'H <coeffs...> [= <offset>]')");
        }
        std::vector<Rational> coeffs;
        Rational offset = 0;
        std::size_t i = 1;
        for (; i < tok.size() && tok[i] != "="; ++i) coeffs.push_back(parse_rational(tok[i]));
        if (i < tok.size()) {  // "= offset"
            if (i + 2 != tok.size()) {
                throw Error::input("malformed offset clause in '" + line + "'");
            }
            offset = parse_rational(tok[i + 1]);
            if (declared_central && offset != 0) {
                throw Error::input("nonzero offset in an arrangement declared central: '" + line +
                                   "'");
            }
        }
        if (coeffs.size() != dim) {
            throw Error::input("hyperplane has " + std::to_string(coeffs.size()) +
                               " coefficients, expected " + std::to_string(dim));
        }
        hs.push_back(Hyperplane::make(coeffs, offset));
    }
    if (!header_seen) {
        throw Error::input("missing 'arrangement' header line");
    }

    Normalized norm = normalize(hs, dim);
    ParsedArrangement out{std::move(norm.arrangement), norm.merged_duplicates, {}};
    if (out.merged_duplicates > 0) {
        out.warnings.push_back("merged " + std::to_string(out.merged_duplicates) +
                               " duplicate hyperplane(s)");
    }
    if (!declared_central && out.arrangement.central()) {
        out.warnings.push_back("declared affine but all offsets are zero; treating as central");
    }
    return out;
}

}  // namespace f1arr
