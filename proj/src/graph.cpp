#include "f1arr/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "f1arr/errors.hpp"

namespace f1arr {

namespace {

struct Dsu {
    std::vector<std::size_t> parent;

    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::string strip_line(const std::string& raw) {
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = line.find_last_not_of(" \t\r\n");
    return line.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& token, const std::string& context) {
    if (token.empty()) throw Error::input("missing number in " + context);
    for (char ch : token) {
        if (ch < '0' || ch > '9') throw Error::input("bad number '" + token + "' in " + context);
    }
    return static_cast<std::size_t>(std::stoull(token));
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    Graph g;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        std::string line = strip_line(raw);
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string word;
        is >> word;
        if (!header_seen) {
            std::string spec;
            is >> spec;
            std::string extra;
            if (word != "graph" || spec.rfind("vertices=", 0) != 0 || (is >> extra)) {
                throw Error::input("expected header 'graph vertices=<n>', got '" + line + "'");
            }
            g.vertex_count = parse_count(spec.substr(9), "graph header");
            header_seen = true;
            continue;
        }
        if (word != "edge") {
            throw Error::input("unexpected line '" + line + "' (want 'edge <u> <v>')");
        }
        std::string us, vs, extra;
        if (!(is >> us >> vs) || (is >> extra)) {
            throw Error::input("malformed edge line '" + line + "'");
        }
        std::size_t u = parse_count(us, "edge line");
        std::size_t v = parse_count(vs, "edge line");
        if (u >= g.vertex_count || v >= g.vertex_count) {
            throw Error::input("edge endpoint out of range in '" + line + "'");
        }
        g.edges.emplace_back(u, v);
    }
    if (!header_seen) throw Error::input("missing 'graph' header line");
    return g;
}

std::size_t component_count(const Graph& g) {
    Dsu dsu(g.vertex_count);
    for (const auto& [u, v] : g.edges) dsu.unite(u, v);
    std::size_t roots = 0;
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (dsu.find(v) == v) ++roots;
    }
    return roots;
}

std::size_t betti_number(const Graph& g) {
    return g.edge_count() - (g.vertex_count - component_count(g));
}

SpanningForest spanning_forest(const Graph& g) {
    Dsu dsu(g.vertex_count);
    SpanningForest f;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (dsu.unite(g.edges[i].first, g.edges[i].second)) f.edge_indices.push_back(i);
    }
    return f;
}

CycleBasis fundamental_basis(const Graph& g, const SpanningForest& f) {
    std::vector<bool> in_forest(g.edge_count(), false);
    for (std::size_t i : f.edge_indices) in_forest[i] = true;

    // forest adjacency for path lookups
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count);
    for (std::size_t i : f.edge_indices) {
        adj[g.edges[i].first].emplace_back(g.edges[i].second, i);
        adj[g.edges[i].second].emplace_back(g.edges[i].first, i);
    }

    CycleBasis basis;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (in_forest[e]) continue;
        auto [tail, head] = g.edges[e];
        std::vector<int> cycle(g.edge_count(), 0);
        cycle[e] = 1;
        if (tail != head) {
            // walk the unique forest path head -> tail; a step a -> b along
            // edge f stored as (a, b) contributes +1, reversed -1
            std::vector<std::size_t> prev_vertex(g.vertex_count, g.vertex_count);
            std::vector<std::size_t> prev_edge(g.vertex_count, g.edge_count());
            std::queue<std::size_t> queue;
            queue.push(head);
            prev_vertex[head] = head;
            while (!queue.empty() && prev_vertex[tail] == g.vertex_count) {
                std::size_t u = queue.front();
                queue.pop();
                for (const auto& [w, fid] : adj[u]) {
                    if (prev_vertex[w] != g.vertex_count) continue;
                    prev_vertex[w] = u;
                    prev_edge[w] = fid;
                    queue.push(w);
                }
            }
            if (prev_vertex[tail] == g.vertex_count) {
                throw Error::input("spanning forest does not connect the endpoints of edge " +
                                   std::to_string(e));
            }
            std::size_t at = tail;
            while (at != head) {
                std::size_t fid = prev_edge[at];
                std::size_t from = prev_vertex[at];
                // traversal direction is from -> at
                cycle[fid] += (g.edges[fid] == std::make_pair(from, at)) ? 1 : -1;
                at = from;
            }
        }
        basis.cycles.push_back(std::move(cycle));
        basis.labels.push_back(e);
    }
    return basis;
}

CocycleTable cocycle_table(const Graph& g, const CycleBasis& b) {
    CocycleTable table;
    table.rows.assign(g.edge_count(), std::vector<int>(b.cycles.size(), 0));
    for (std::size_t j = 0; j < b.cycles.size(); ++j) {
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            table.rows[e][j] = b.cycles[j][e];
        }
    }
    return table;
}

Arrangement build_cycle_arrangement(const Graph& g) {
    CycleBasis basis = fundamental_basis(g, spanning_forest(g));
    std::size_t b1 = basis.cycles.size();
    CocycleTable table = cocycle_table(g, basis);
    std::vector<Hyperplane> hs;
    for (const std::vector<int>& row : table.rows) {
        bool nonzero = false;
        for (int c : row) nonzero = nonzero || c != 0;
        if (!nonzero) continue;  // bridge
        std::vector<Rational> v(row.begin(), row.end());
        hs.push_back(Hyperplane::make(v));
    }
    return normalize(hs, b1).arrangement;
}

bool is_separated(const CycleBasis& b) {
    if (b.cycles.empty()) return true;
    std::size_t edges = b.cycles[0].size();
    for (const auto& cycle : b.cycles) {
        for (int c : cycle) {
            if (c < -1 || c > 1) {
                throw Error::input("separatedness is defined for simple cycles only "
                                   "(entry outside {-1,0,1})");
            }
        }
    }
    for (std::size_t e = 0; e < edges; ++e) {
        std::size_t used = 0;
        for (const auto& cycle : b.cycles) {
            if (cycle[e] != 0 && ++used > 1) return false;
        }
    }
    return true;
}

namespace {

// Biconnected blocks of the loopless part via the classic lowlink DFS with an
// edge stack; block b1 values come out as |E_block| - |V_block| + 1.
// Every loop is its own block with b1 = 1.
std::vector<std::size_t> block_cycle_ranks(const Graph& g) {
    std::vector<std::size_t> ranks;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        if (u == v) {
            ranks.push_back(1);
            continue;
        }
        adj[u].emplace_back(v, i);
        adj[v].emplace_back(u, i);
    }

    std::vector<std::size_t> disc(g.vertex_count, 0), low(g.vertex_count, 0);
    std::vector<bool> edge_seen(g.edge_count(), false);
    std::vector<std::size_t> edge_stack;
    std::size_t timer = 0;

    auto emit_block = [&](std::size_t first_edge) {
        std::set<std::size_t> vertices;
        std::size_t edge_total = 0;
        while (true) {
            std::size_t eid = edge_stack.back();
            edge_stack.pop_back();
            ++edge_total;
            vertices.insert(g.edges[eid].first);
            vertices.insert(g.edges[eid].second);
            if (eid == first_edge) break;
        }
        ranks.push_back(edge_total - vertices.size() + 1);
    };

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u,
                                                            std::size_t parent_edge) {
        disc[u] = low[u] = ++timer;
        for (const auto& [v, eid] : adj[u]) {
            if (eid == parent_edge) continue;  // parallel edges to the parent count as back edges
            if (!edge_seen[eid]) {
                edge_seen[eid] = true;
                edge_stack.push_back(eid);
                if (disc[v] == 0) {
                    dfs(v, eid);
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) emit_block(eid);
                } else {
                    low[u] = std::min(low[u], disc[v]);
                }
            }
        }
    };

    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (disc[v] == 0) dfs(v, g.edge_count());
    }
    return ranks;
}

}  // namespace

bool is_cactus(const Graph& g) {
    for (std::size_t r : block_cycle_ranks(g)) {
        if (r > 1) return false;
    }
    return true;
}

namespace {

// Fraction-free determinant (Bareiss); exact over the integers.
Int bareiss_det(std::vector<std::vector<Int>> a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

Int spanning_forest_count(const Graph& g) {
    Dsu dsu(g.vertex_count);
    for (const auto& [u, v] : g.edges) dsu.unite(u, v);

    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> comp_index(g.vertex_count);
    std::vector<std::size_t> root_to_comp(g.vertex_count, g.vertex_count);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        std::size_t r = dsu.find(v);
        if (root_to_comp[r] == g.vertex_count) {
            root_to_comp[r] = comps.size();
            comps.push_back({});
        }
        comp_index[v] = comps[root_to_comp[r]].size();
        comps[root_to_comp[r]].push_back(v);
    }

    Int total = 1;
    for (const auto& comp : comps) {
        std::size_t k = comp.size();
        if (k <= 1) continue;
        // reduced Laplacian: drop the last vertex of the component
        std::vector<std::vector<Int>> lap(k - 1, std::vector<Int>(k - 1, Int(0)));
        for (const auto& [u, v] : g.edges) {
            if (u == v) continue;
            if (dsu.find(u) != dsu.find(comp[0])) continue;
            std::size_t iu = comp_index[u], iv = comp_index[v];
            if (iu < k - 1) lap[iu][iu] += 1;
            if (iv < k - 1) lap[iv][iv] += 1;
            if (iu < k - 1 && iv < k - 1) {
                lap[iu][iv] -= 1;
                lap[iv][iu] -= 1;
            }
        }
        total *= bareiss_det(std::move(lap));
    }
    return total;
}

std::vector<SpanningForest> enumerate_spanning_forests(const Graph& g, std::size_t cap) {
    std::size_t target = g.vertex_count - component_count(g);
    std::vector<SpanningForest> out;
    std::vector<std::size_t> chosen;

    std::function<bool(std::size_t, Dsu&)> rec = [&](std::size_t start, Dsu& dsu) {
        if (chosen.size() == target) {
            out.push_back(SpanningForest{chosen});
            return out.size() < cap;
        }
        for (std::size_t i = start; i < g.edge_count(); ++i) {
            if (g.edge_count() - i < target - chosen.size()) break;  // not enough edges left
            auto [u, v] = g.edges[i];
            if (u == v) continue;
            Dsu next = dsu;
            if (!next.unite(u, v)) continue;
            chosen.push_back(i);
            bool keep_going = rec(i + 1, next);
            chosen.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };

    Dsu dsu(g.vertex_count);
    rec(0, dsu);
    return out;
}

namespace {

SpanningForest random_forest(const Graph& g, std::mt19937_64& rng) {
    std::vector<std::size_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Dsu dsu(g.vertex_count);
    SpanningForest f;
    for (std::size_t i : order) {
        if (dsu.unite(g.edges[i].first, g.edges[i].second)) f.edge_indices.push_back(i);
    }
    std::sort(f.edge_indices.begin(), f.edge_indices.end());
    return f;
}

}  // namespace

GraphTorificationReport graph_torification_report(const Graph& g,
                                                  const GraphTorificationOptions& opts) {
    GraphTorificationReport r;
    r.b1 = betti_number(g);
    r.arrangement = build_cycle_arrangement(g);
    r.arrangement_size = r.arrangement.size();
    r.f1 = torification_verdict(r.arrangement);
    r.torifiable = r.f1.verdict == Verdict::Torifiable;
    r.boolean_arrangement = is_boolean(r.arrangement);
    r.size_equals_b1 = r.arrangement_size == r.b1;
    r.cactus = is_cactus(g);

    // the cycle arrangement is always essential and at least b1 large
    if (!is_essential(r.arrangement) || r.arrangement_size < r.b1) {
        throw Error::invariant(
            "self-check failed: cycle arrangement not essential or smaller than the cycle rank");
    }

    r.forest_count = spanning_forest_count(g);
    std::vector<SpanningForest> forests;
    if (r.forest_count <= Int(opts.forest_enumeration_cap)) {
        forests = enumerate_spanning_forests(g, opts.forest_enumeration_cap);
        r.forest_check_exhaustive = true;
    } else {
        forests.push_back(spanning_forest(g));
        std::mt19937_64 rng(opts.sample_seed);
        for (std::size_t i = 1; i < opts.forest_samples; ++i) {
            forests.push_back(random_forest(g, rng));
        }
        r.forest_check_exhaustive = false;
    }
    r.forests_checked = forests.size();

    bool all_separated = true;
    bool any_separated = false;
    for (const SpanningForest& f : forests) {
        bool sep = is_separated(fundamental_basis(g, f));
        all_separated = all_separated && sep;
        any_separated = any_separated || sep;
    }
    r.all_fundamental_bases_separated = all_separated;
    r.some_fundamental_basis_separated = any_separated;
    r.separated_basis_exists = r.size_equals_b1;  // the authoritative decision path

    const bool conditions[] = {r.torifiable,
                               r.boolean_arrangement,
                               r.size_equals_b1,
                               r.all_fundamental_bases_separated,
                               r.some_fundamental_basis_separated,
                               r.separated_basis_exists,
                               r.cactus};
    for (bool c : conditions) {
        if (c != conditions[0]) {
            std::ostringstream os;
            os << "self-check failed: equivalent torifiability conditions disagree "
               << "(torifiable=" << r.torifiable << " boolean=" << r.boolean_arrangement
               << " size=b1:" << r.size_equals_b1
               << " all-forests:" << r.all_fundamental_bases_separated
               << " some-forest:" << r.some_fundamental_basis_separated
               << " separated-basis:" << r.separated_basis_exists << " cactus:" << r.cactus << ")";
            throw Error::invariant(os.str());
        }
    }
    r.verdict = conditions[0];

    CycleBasis basis = fundamental_basis(g, spanning_forest(g));
    if (r.verdict) {
        if (!is_separated(basis)) {
            throw Error::invariant("self-check failed: fundamental basis of the deterministic "
                                   "forest not separated despite a positive verdict");
        }
        r.separated_basis = std::move(basis);
    } else {
        for (std::size_t e = 0; e < g.edge_count() && !r.shared_edge; ++e) {
            std::vector<std::size_t> labels;
            for (std::size_t j = 0; j < basis.cycles.size(); ++j) {
                if (basis.cycles[j][e] != 0) labels.push_back(basis.labels[j]);
            }
            if (labels.size() > 1) {
                r.shared_edge = SharedEdgeWitness{e, std::move(labels)};
            }
        }
        if (!r.shared_edge) {
            throw Error::invariant("self-check failed: negative verdict but no shared edge in "
                                   "the deterministic fundamental basis");
        }
    }
    return r;
}

}  // namespace f1arr
