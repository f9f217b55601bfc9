#include "f1arr/report.hpp"

#include <sstream>

#include "f1arr/arrangement.hpp"
#include "f1arr/f1.hpp"
#include "f1arr/fq.hpp"
#include "f1arr/graph.hpp"
#include "f1arr/lattice.hpp"

namespace f1arr {

namespace {

Json int_strings(const std::vector<Int>& values) {
    Json out = Json::array();
    for (const Int& v : values) out.push_back(to_decimal(v));
    return out;
}

Json poly_json(const IntPolynomial& p, const std::string& var) {
    Json j;
    j["coeffs"] = int_strings(p.coeffs());
    j["pretty"] = p.to_string(var);
    return j;
}

Json input_json(const ParsedArrangement& parsed) {
    Json j;
    j["kind"] = parsed.arrangement.central() ? "central" : "affine";
    j["dim"] = parsed.arrangement.ambient_dim;
    j["hyperplanes"] = parsed.arrangement.size();
    return j;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string taylor_human(const TaylorAtOne& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
        if (i > 0) os << ", ";
        os << to_decimal(t.coeffs[i]);
    }
    os << "]";
    return os.str();
}

Json witness_json(const TorificationReport& r) {
    Json w;
    if (r.independence_pivots) {
        w["kind"] = "independent_normals";
        w["pivot_columns"] = *r.independence_pivots;
    } else if (r.first_negative_taylor_index) {
        w["kind"] = "negative_taylor_coefficient";
        w["index"] = *r.first_negative_taylor_index;
        w["value"] = to_decimal(r.taylor.coeffs[*r.first_negative_taylor_index]);
    } else if (r.dependent_subset) {
        w["kind"] = "dependent_subset";
        w["hyperplanes"] = *r.dependent_subset;
    }
    return w;
}

Json torification_json(const TorificationReport& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["boolean"] = r.boolean_arrangement;
    j["taylor_nonnegative"] = r.taylor_nonnegative;
    j["essential"] = r.essential;
    j["charpoly"] = poly_json(r.charpoly, "t");
    j["grothendieck_class"] = poly_json(grothendieck_class(r.charpoly), "L");
    j["taylor_at_one"] = int_strings(r.taylor.coeffs);
    j["witness"] = witness_json(r);
    if (r.torus_decomposition) {
        Json strata = Json::array();
        for (const TorusStratum& s : *r.torus_decomposition) {
            Json stratum;
            stratum["dim"] = s.dim;
            stratum["multiplicity"] = to_decimal(s.multiplicity);
            strata.push_back(stratum);
        }
        j["torus_decomposition"] = strata;
    } else {
        j["torus_decomposition"] = nullptr;
    }
    j["note"] = r.note ? Json(*r.note) : Json(nullptr);
    return j;
}

void torification_human(std::ostringstream& os, const TorificationReport& r) {
    os << "charpoly: " << r.charpoly.to_string("t") << "\n";
    os << "grothendieck class: " << grothendieck_class(r.charpoly).to_string("L") << "\n";
    os << "taylor at t=1: " << taylor_human(r.taylor) << "\n";
    os << "boolean: " << yesno(r.boolean_arrangement)
       << " | taylor nonnegative: " << yesno(r.taylor_nonnegative)
       << " | essential: " << yesno(r.essential) << "\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    if (r.independence_pivots) {
        os << "witness: independent normals, pivot columns";
        for (std::size_t c : *r.independence_pivots) os << " " << c;
        os << "\n";
    } else if (r.first_negative_taylor_index) {
        os << "witness: taylor coefficient c_" << *r.first_negative_taylor_index << " = "
           << to_decimal(r.taylor.coeffs[*r.first_negative_taylor_index]) << " < 0\n";
    } else if (r.dependent_subset) {
        os << "witness: dependent normals {";
        for (std::size_t i = 0; i < r.dependent_subset->size(); ++i) {
            if (i > 0) os << ", ";
            os << (*r.dependent_subset)[i];
        }
        os << "}\n";
    }
    if (r.torus_decomposition) {
        os << "torus decomposition:";
        for (const TorusStratum& s : *r.torus_decomposition) {
            os << " " << to_decimal(s.multiplicity) << " x T^" << s.dim;
        }
        os << "\n";
    }
    if (r.note) os << "note: " << *r.note << "\n";
}

Json count_json(const CountResult& c) {
    Json j;
    j["p"] = c.p;
    j["points"] = to_decimal(c.points);
    j["predicted"] = to_decimal(c.predicted);
    j["match"] = c.match;
    j["enumerated"] = to_decimal(c.enumerated);
    return j;
}

// Runs the point-count oracle against the lattice prediction and, when a
// torus decomposition is present, against its point count as well. Any
// mismatch is a mathematical invariant violation.
Json run_oracle(const Arrangement& a, const OracleOptions& opts,
                const std::optional<std::vector<TorusStratum>>& tori) {
    FieldSpec f;
    if (opts.q) {
        f = FieldSpec{*opts.q, certifies(a, *opts.q)};
        if (!f.certified) {
            throw Error::input("q=" + std::to_string(*opts.q) +
                               " is not certified for this arrangement (subset ranks change "
                               "mod q); smallest certified prime is " +
                               std::to_string(good_prime(a).p));
        }
    } else {
        f = good_prime(a);
    }
    CountResult c = count_complement(a, f, opts.budget);
    if (!c.match) {
        throw Error::invariant("oracle mismatch over F_" + std::to_string(f.p) + ": enumerated " +
                               to_decimal(c.points) + " points but chi(p) = " +
                               to_decimal(c.predicted));
    }
    Json jc = count_json(c);
    if (tori) {
        Int torus_points = 0;
        for (const TorusStratum& s : *tori) {
            torus_points += s.multiplicity * int_pow(Int(f.p) - 1, s.dim);
        }
        jc["torus_points"] = to_decimal(torus_points);
        if (torus_points != c.points) {
            throw Error::invariant("torus decomposition predicts " + to_decimal(torus_points) +
                                   " points over F_" + std::to_string(f.p) + " but enumeration "
                                   "found " + to_decimal(c.points));
        }
    }
    return Json::array({jc});
}

void oracle_human(std::ostringstream& os, const Json& oracle) {
    for (const Json& jc : oracle) {
        os << "oracle: p=" << jc["p"].get<std::uint64_t>() << ", points "
           << jc["points"].get<std::string>() << " of " << jc["enumerated"].get<std::string>()
           << ", chi(p) = " << jc["predicted"].get<std::string>() << ", match\n";
    }
}

Json cycle_json(const CycleBasis& basis) {
    Json cycles = Json::array();
    for (std::size_t j = 0; j < basis.cycles.size(); ++j) {
        Json c;
        if (j < basis.labels.size()) c["chord"] = basis.labels[j];
        Json edges = Json::array();
        for (std::size_t e = 0; e < basis.cycles[j].size(); ++e) {
            if (basis.cycles[j][e] != 0) edges.push_back({e, basis.cycles[j][e]});
        }
        c["edges"] = edges;
        cycles.push_back(c);
    }
    return cycles;
}

}  // namespace

CharpolyMethod parse_method(const std::string& name) {
    if (name == "mobius") return CharpolyMethod::Mobius;
    if (name == "delres") return CharpolyMethod::Delres;
    if (name == "both") return CharpolyMethod::Both;
    throw Error::input("unknown method '" + name + "' (want mobius, delres or both)");
}

Report run_charpoly(const std::string& file_text, CharpolyMethod method) {
    ParsedArrangement parsed = parse_arrangement(file_text);
    const Arrangement& a = parsed.arrangement;

    if (!a.central() && method != CharpolyMethod::Mobius) {
        throw Error::input("deletion-restriction needs a central arrangement; cone first or use "
                           "--method mobius");
    }

    std::optional<IntPolynomial> via_mobius, via_delres;
    if (method == CharpolyMethod::Mobius || method == CharpolyMethod::Both) {
        via_mobius = charpoly(a);
    }
    if (method == CharpolyMethod::Delres || method == CharpolyMethod::Both) {
        via_delres = charpoly_delres(a);
    }
    if (method == CharpolyMethod::Both && *via_mobius != *via_delres) {
        throw Error::invariant("charpoly methods disagree: mobius gives " +
                               via_mobius->to_string() + ", deletion-restriction gives " +
                               via_delres->to_string());
    }
    const IntPolynomial& chi = via_mobius ? *via_mobius : *via_delres;

    Json j;
    j["command"] = "charpoly";
    j["input"] = input_json(parsed);
    j["method"] = method == CharpolyMethod::Mobius   ? "mobius"
                  : method == CharpolyMethod::Delres ? "delres"
                                                     : "both";
    j["charpoly"] = poly_json(chi, "t");
    if (method == CharpolyMethod::Both) j["methods_agree"] = true;
    j["warnings"] = parsed.warnings;

    std::ostringstream os;
    os << "input: " << (a.central() ? "central" : "affine") << " arrangement, dim="
       << a.ambient_dim << ", n=" << a.size() << "\n";
    os << "charpoly: " << chi.to_string("t") << "\n";
    if (method == CharpolyMethod::Both) os << "methods agree (mobius = deletion-restriction)\n";
    for (const std::string& w : parsed.warnings) os << "warning: " << w << "\n";
    return Report{std::move(j), os.str()};
}

Report run_f1(const std::string& file_text, const OracleOptions& oracle) {
    ParsedArrangement parsed = parse_arrangement(file_text);
    Arrangement a = parsed.arrangement;
    bool coned = false;
    if (!a.central()) {
        a = cone(a);
        coned = true;
        parsed.warnings.push_back(
            "affine input: the verdict applies to the cone, a central arrangement in dimension " +
            std::to_string(a.ambient_dim) +
            "; equivalence with the affine input itself is not claimed");
    }
    TorificationReport tr = torification_verdict(a);

    Json j;
    j["command"] = "f1";
    j["input"] = input_json(parsed);
    j["coned"] = coned;
    Json analysis = torification_json(tr);
    j["verdict"] = analysis["verdict"];
    j["boolean"] = analysis["boolean"];
    j["taylor_nonnegative"] = analysis["taylor_nonnegative"];
    j["essential"] = analysis["essential"];
    j["charpoly"] = analysis["charpoly"];
    j["grothendieck_class"] = analysis["grothendieck_class"];
    j["taylor_at_one"] = analysis["taylor_at_one"];
    j["witness"] = analysis["witness"];
    j["torus_decomposition"] = analysis["torus_decomposition"];
    j["note"] = analysis["note"];
    if (oracle.enabled) j["oracle"] = run_oracle(a, oracle, tr.torus_decomposition);
    j["warnings"] = parsed.warnings;

    std::ostringstream os;
    os << "input: " << (parsed.arrangement.central() ? "central" : "affine")
       << " arrangement, dim=" << parsed.arrangement.ambient_dim
       << ", n=" << parsed.arrangement.size() << "\n";
    if (coned) {
        os << "analyzing the cone: central arrangement, dim=" << a.ambient_dim
           << ", n=" << a.size() << "\n";
    }
    torification_human(os, tr);
    if (oracle.enabled) oracle_human(os, j["oracle"]);
    for (const std::string& w : parsed.warnings) os << "warning: " << w << "\n";
    return Report{std::move(j), os.str()};
}

GraphRunResult run_graph(const std::string& file_text, const OracleOptions& oracle) {
    Graph g = parse_graph(file_text);
    GraphTorificationReport rep = graph_torification_report(g);

    Json j;
    j["command"] = "graph";
    Json input;
    input["vertices"] = g.vertex_count;
    input["edges"] = g.edge_count();
    j["input"] = input;
    j["b1"] = rep.b1;
    Json arr;
    arr["dim"] = rep.arrangement.ambient_dim;
    arr["hyperplanes"] = rep.arrangement_size;
    j["arrangement"] = arr;

    Json eq;
    eq["torifiable"] = rep.torifiable;
    eq["boolean"] = rep.boolean_arrangement;
    eq["size_equals_b1"] = rep.size_equals_b1;
    eq["all_fundamental_bases_separated"] = rep.all_fundamental_bases_separated;
    eq["some_fundamental_basis_separated"] = rep.some_fundamental_basis_separated;
    eq["separated_basis_exists"] = rep.separated_basis_exists;
    eq["cactus"] = rep.cactus;
    Json forest_check;
    forest_check["exhaustive"] = rep.forest_check_exhaustive;
    forest_check["forests_checked"] = rep.forests_checked;
    forest_check["forest_count"] = to_decimal(rep.forest_count);
    eq["forest_check"] = forest_check;
    j["equivalence"] = eq;

    j["verdict"] = rep.verdict ? "torifiable" : "not_torifiable";
    Json w;
    if (rep.separated_basis) {
        w["kind"] = "separated_basis";
        w["cycles"] = cycle_json(*rep.separated_basis);
    } else if (rep.shared_edge) {
        w["kind"] = "shared_edge";
        w["edge"] = rep.shared_edge->edge;
        w["cycles_through_it"] = rep.shared_edge->cycle_labels;
    }
    j["witness"] = w;
    j["f1"] = torification_json(rep.f1);
    if (oracle.enabled) j["oracle"] = run_oracle(rep.arrangement, oracle, rep.f1.torus_decomposition);
    j["warnings"] = Json::array();

    std::ostringstream os;
    os << "input: graph with " << g.vertex_count << " vertices, " << g.edge_count()
       << " edges\n";
    os << "b1: " << rep.b1 << ", cycle arrangement: " << rep.arrangement_size
       << " hyperplanes in dim " << rep.arrangement.ambient_dim << "\n";
    os << "conditions: torifiable=" << yesno(rep.torifiable)
       << " boolean=" << yesno(rep.boolean_arrangement)
       << " |A|=b1:" << yesno(rep.size_equals_b1)
       << " all-forests:" << yesno(rep.all_fundamental_bases_separated)
       << " some-forest:" << yesno(rep.some_fundamental_basis_separated)
       << " separated-basis:" << yesno(rep.separated_basis_exists)
       << " cactus:" << yesno(rep.cactus) << "\n";
    os << "forests checked: " << rep.forests_checked
       << (rep.forest_check_exhaustive ? " (exhaustive, of " : " (sampled, of ")
       << to_decimal(rep.forest_count) << ")\n";
    os << "verdict: " << (rep.verdict ? "torifiable" : "not_torifiable") << "\n";
    if (rep.separated_basis) {
        os << "separated basis:\n";
        for (std::size_t c = 0; c < rep.separated_basis->cycles.size(); ++c) {
            os << "  cycle (chord e" << rep.separated_basis->labels[c] << "):";
            const auto& cyc = rep.separated_basis->cycles[c];
            for (std::size_t e = 0; e < cyc.size(); ++e) {
                if (cyc[e] != 0) os << " " << (cyc[e] > 0 ? "+" : "-") << "e" << e;
            }
            os << "\n";
        }
    } else if (rep.shared_edge) {
        os << "witness: edge e" << rep.shared_edge->edge << " lies on the cycles of chords";
        for (std::size_t c : rep.shared_edge->cycle_labels) os << " e" << c;
        os << "\n";
    }
    if (oracle.enabled) oracle_human(os, j["oracle"]);
    return GraphRunResult{Report{std::move(j), os.str()}, serialize(rep.arrangement)};
}

Report run_count(const std::string& file_text, std::uint64_t q, const Int& budget) {
    ParsedArrangement parsed = parse_arrangement(file_text);
    const Arrangement& a = parsed.arrangement;
    FieldSpec f{q, certifies(a, q)};
    if (!f.certified) {
        throw Error::input("q=" + std::to_string(q) +
                           " is not certified for this arrangement (subset ranks change mod q); "
                           "smallest certified prime is " +
                           std::to_string(good_prime(a).p));
    }
    CountResult c = count_complement(a, f, budget);

    Json j;
    j["command"] = "count";
    j["input"] = input_json(parsed);
    j["certified"] = true;
    Json jc = count_json(c);
    for (auto& [key, value] : jc.items()) j[key] = value;
    j["warnings"] = parsed.warnings;

    std::ostringstream os;
    os << "input: " << (a.central() ? "central" : "affine") << " arrangement, dim="
       << a.ambient_dim << ", n=" << a.size() << "\n";
    os << "p: " << c.p << " (certified)\n";
    os << "points: " << to_decimal(c.points) << " of " << to_decimal(c.enumerated) << "\n";
    os << "predicted chi(p): " << to_decimal(c.predicted) << "\n";
    os << "match: " << yesno(c.match) << "\n";
    for (const std::string& w : parsed.warnings) os << "warning: " << w << "\n";

    if (!c.match) {
        throw Error::invariant("oracle mismatch over F_" + std::to_string(c.p) + ": enumerated " +
                               to_decimal(c.points) + " points but chi(p) = " +
                               to_decimal(c.predicted));
    }
    return Report{std::move(j), os.str()};
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Invariant: return 1;
        case ErrorKind::Input: return 2;
        case ErrorKind::Budget: return 3;
    }
    return 1;
}

}  // namespace f1arr
