#pragma once

// Connected simple graphs on vertex set {1..n}. The labeling is the vertex
// order, so a Graph doubles as an ordered graph for the shuffle machinery.
// Vertex subsets are bitmasks (bit v-1 for vertex v), edge sets are bitmasks
// over the triangular pair index; everything here assumes n <= 8.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gc {

using VMask = std::uint16_t;  // vertex subset, bit v-1 <-> vertex v
using EMask = std::uint32_t;  // edge subset, triangular pair index

constexpr int kMaxVertices = 8;

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }
inline int lowest_bit(std::uint32_t m) { return __builtin_ctz(m); }

// vertices are 1-based everywhere in the public interface
inline VMask vbit(int v) { return VMask(1u << (v - 1)); }
inline int min_vertex(VMask m) { return lowest_bit(m) + 1; }

inline std::vector<int> mask_vertices(VMask m) {
    std::vector<int> out;
    for (int v = 1; m; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

// pair index for an unordered edge {u,v}, u != v
inline int pair_index(int u, int v) {
    if (u > v) std::swap(u, v);
    // edges (1,2),(1,3),...,(1,n),(2,3),... row by row
    int i = u - 1, j = v - 1;
    return i * (2 * kMaxVertices - i - 1) / 2 + (j - i - 1);
}

struct Edge {
    int u, v;  // u < v
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<Edge>& edges, bool require_connected = true)
        : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("graph: vertex count must be in 1..8, got " +
                                        std::to_string(n));
        adj_.fill(0);
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
            if (u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("graph: edge endpoint out of range 1..n");
            if (u > v) std::swap(u, v);
            em_ |= EMask(1) << pair_index(u, v);
            adj_[u] |= vbit(v);
            adj_[v] |= vbit(u);
        }
        if (require_connected && !connected())
            throw std::invalid_argument("graph: not connected");
    }

    static Graph from_edge_mask(int n, EMask em, bool require_connected = true) {
        std::vector<Edge> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (em & (EMask(1) << pair_index(u, v))) es.push_back({u, v});
        return Graph(n, es, require_connected);
    }

    int n() const { return n_; }
    EMask edge_mask() const { return em_; }
    VMask vertices() const { return VMask((1u << n_) - 1); }
    VMask adj(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const {
        return u != v && (em_ & (EMask(1) << pair_index(u, v)));
    }
    int edge_count() const { return popcount(em_); }

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (has_edge(u, v)) es.push_back({u, v});
        return es;
    }

    // neighbors of a whole subset
    VMask adj_set(VMask s) const {
        VMask out = 0;
        for (int v = 1; v <= n_; ++v)
            if (s & vbit(v)) out |= adj_[v];
        return VMask(out & ~s);
    }

    bool connected_subset(VMask s) const {
        if (!s) return false;
        VMask comp = VMask(1u << lowest_bit(s));
        for (;;) {
            VMask grow = VMask(comp | (adj_set(comp) & s));
            if (grow == comp) break;
            comp = grow;
        }
        return comp == s;
    }
    bool connected() const { return connected_subset(vertices()); }
    bool is_tube(VMask s) const { return s && (s & ~vertices()) == 0 && connected_subset(s); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && em_ == o.em_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }
    bool operator<(const Graph& o) const {
        return n_ != o.n_ ? n_ < o.n_ : em_ < o.em_;
    }

    // stable key for hashing / map ordering of ordered-graph components
    std::uint64_t key() const { return (std::uint64_t(n_) << 32) | em_; }

private:
    int n_ = 0;
    EMask em_ = 0;
    std::array<VMask, kMaxVertices + 1> adj_{};
};

// ---- graph families ---------------------------------------------------

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("P_n requires n >= 1");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("K_n requires n >= 1");
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.push_back({u, v});
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("C_n requires n >= 3");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
    es.push_back({1, n});
    return Graph(n, es);
}

// star with n leaves; the sun is relabeled to vertex 1, leaves are 2..n+1
inline Graph star_graph(int n) {
    if (n < 0) throw std::invalid_argument("St_n requires n >= 0");
    std::vector<Edge> es;
    for (int i = 2; i <= n + 1; ++i) es.push_back({1, i});
    return Graph(n + 1, es);
}

// K_(1^m,k): join of K_m (vertices 1..m) with k isolated vertices (m+1..m+k)
inline Graph join_complete_discrete(int m, int k) {
    if (m < 1 || k < 0) throw std::invalid_argument("K_(1^m,k) requires m >= 1, k >= 0");
    std::vector<Edge> es;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) es.push_back({u, v});
    for (int u = 1; u <= m; ++u)
        for (int v = m + 1; v <= m + k; ++v) es.push_back({u, v});
    return Graph(m + k, es);
}

// ---- parsing ----------------------------------------------------------

// Family tokens ("P4", "C5", "K4", "St3", "K(1^2,2)") or explicit edge
// lists ("edges:1-2,2-3"). Rejects disconnected and malformed input.
inline Graph parse_graph(const std::string& spec) {
    auto fail = [&](std::size_t pos, const std::string& what) -> Graph {
        throw std::invalid_argument("parse_graph: " + what + " at position " +
                                    std::to_string(pos) + " in \"" + spec + "\"");
    };
    if (spec.rfind("edges:", 0) == 0) {
        std::vector<Edge> es;
        int maxv = 0;
        std::size_t i = 6;
        while (i < spec.size()) {
            std::size_t j = spec.find(',', i);
            if (j == std::string::npos) j = spec.size();
            std::string tok = spec.substr(i, j - i);
            std::size_t dash = tok.find('-');
            if (dash == std::string::npos) return fail(i, "expected u-v edge token");
            int u, v;
            try {
                u = std::stoi(tok.substr(0, dash));
                v = std::stoi(tok.substr(dash + 1));
            } catch (...) {
                return fail(i, "bad edge endpoints");
            }
            es.push_back({std::min(u, v), std::max(u, v)});
            maxv = std::max({maxv, u, v});
            i = j + 1;
        }
        if (es.empty()) return fail(6, "empty edge list");
        return Graph(maxv, es);  // throws "not connected" for disconnected input
    }
    if (spec.rfind("K(1^", 0) == 0) {
        std::size_t comma = spec.find(',');
        std::size_t close = spec.find(')');
        if (comma == std::string::npos || close == std::string::npos || close < comma)
            return fail(0, "expected K(1^m,k)");
        int m, k;
        try {
            m = std::stoi(spec.substr(4, comma - 4));
            k = std::stoi(spec.substr(comma + 1, close - comma - 1));
        } catch (...) {
            return fail(4, "bad K(1^m,k) parameters");
        }
        return join_complete_discrete(m, k);
    }
    auto num = [&](std::size_t off) {
        if (off >= spec.size()) fail(off, "missing family parameter");
        for (std::size_t i = off; i < spec.size(); ++i)
            if (!isdigit((unsigned char)spec[i])) fail(i, "unexpected character");
        return std::stoi(spec.substr(off));
    };
    if (spec.rfind("St", 0) == 0) return star_graph(num(2));
    if (!spec.empty() && (spec[0] == 'P' || spec[0] == 'K' || spec[0] == 'C')) {
        int v = num(1);
        if (spec[0] == 'P') return path_graph(v);
        if (spec[0] == 'K') return complete_graph(v);
        return cycle_graph(v);
    }
    return fail(0, "unknown graph spec");
}

// name/params front end used by the CLI
inline Graph make_family(const std::string& name, const std::vector<int>& params) {
    if (name == "P") return path_graph(params.at(0));
    if (name == "K") {
        if (params.size() == 2) return join_complete_discrete(params[0], params[1]);
        return complete_graph(params.at(0));
    }
    if (name == "C") return cycle_graph(params.at(0));
    if (name == "St") return star_graph(params.at(0));
    throw std::invalid_argument("make_family: unknown family " + name);
}

// ---- tubes, induced and contracted graphs -----------------------------

// all tubes, ordered by size then lexicographically by sorted vertex list
inline std::vector<VMask> enumerate_tubes(const Graph& g) {
    std::vector<VMask> tubes;
    for (VMask s = 1; s <= g.vertices(); ++s)
        if (g.is_tube(s)) tubes.push_back(s);
    std::sort(tubes.begin(), tubes.end(), [](VMask a, VMask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return mask_vertices(a) < mask_vertices(b);
    });
    return tubes;
}

struct Relabeled {
    Graph graph;
    std::vector<int> old_to_new;  // indexed by old vertex id, 0 = absent
};

// induced subgraph on a tube, vertices relabeled 1..|s| in numeric order
inline Relabeled induced_subgraph(const Graph& g, VMask s) {
    if (!g.is_tube(s)) throw std::invalid_argument("induced_subgraph: subset is not a tube");
    std::vector<int> old_to_new(g.n() + 1, 0);
    int next = 1;
    for (int v = 1; v <= g.n(); ++v)
        if (s & vbit(v)) old_to_new[v] = next++;
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if ((s & vbit(u)) && (s & vbit(v))) es.push_back({old_to_new[u], old_to_new[v]});
    return {Graph(next - 1, es), old_to_new};
}

// blocks sorted by minimal vertex; this is the induced order <^ind
inline std::vector<VMask> sorted_blocks(std::vector<VMask> blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](VMask a, VMask b) { return min_vertex(a) < min_vertex(b); });
    return blocks;
}

struct Contracted {
    Graph graph;
    std::vector<VMask> blocks;  // block of new vertex i+1 is blocks[i]
};

// contracted graph g/I; blocks must be disjoint tubes covering the vertex set
inline Contracted contract(const Graph& g, const std::vector<VMask>& blocks_in) {
    auto blocks = sorted_blocks(blocks_in);
    VMask cover = 0;
    for (VMask b : blocks) {
        if (!g.is_tube(b)) throw std::invalid_argument("contract: block is not a tube");
        if (cover & b) throw std::invalid_argument("contract: blocks overlap");
        cover |= b;
    }
    if (cover != g.vertices()) throw std::invalid_argument("contract: blocks do not cover");
    int k = int(blocks.size());
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.is_tube(VMask(blocks[i] | blocks[j]))) es.push_back({i + 1, j + 1});
    return {Graph(k, es), blocks};
}

// g/G for a single tube (all other blocks singletons)
inline Contracted contract_tube(const Graph& g, VMask tube) {
    std::vector<VMask> blocks{tube};
    for (int v = 1; v <= g.n(); ++v)
        if (!(tube & vbit(v))) blocks.push_back(vbit(v));
    return contract(g, blocks);
}

// ---- automorphisms and isomorphism ------------------------------------

using Perm = std::vector<int>;  // perm[v] = image of v, 1-based (perm[0] unused)

inline Graph apply_perm(const Graph& g, const Perm& p) {
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        es.push_back({std::min(p[u], p[v]), std::max(p[u], p[v])});
    return Graph(g.n(), es);
}

inline std::vector<Perm> automorphisms(const Graph& g) {
    if (g.n() > kMaxVertices) throw std::invalid_argument("automorphisms: graph too large");
    std::vector<int> base(g.n());
    std::iota(base.begin(), base.end(), 1);
    std::vector<Perm> out;
    std::vector<int> perm = base;
    do {
        Perm p(g.n() + 1);
        for (int i = 0; i < g.n(); ++i) p[i + 1] = perm[i];
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!g.has_edge(p[u], p[v])) { ok = false; break; }
        if (ok) out.push_back(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // identity first (it is the lexicographically smallest permutation)
    return out;
}

// canonical edge mask over all relabelings; brute force, n <= 8
inline EMask canonical_edge_mask(const Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 1);
    EMask best = ~EMask(0);
    do {
        Perm p(g.n() + 1);
        for (int i = 0; i < g.n(); ++i) p[i + 1] = perm[i];
        best = std::min(best, apply_perm(g, p).edge_mask());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.n() == b.n() && canonical_edge_mask(a) == canonical_edge_mask(b);
}

// all distinct vertex-orderings of g (as labeled graphs on 1..n)
inline std::vector<Graph> orderings_of(const Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<EMask> seen;
    std::vector<Graph> out;
    do {
        Perm p(g.n() + 1);
        for (int i = 0; i < g.n(); ++i) p[i + 1] = perm[i];
        Graph h = apply_perm(g, p);
        if (std::find(seen.begin(), seen.end(), h.edge_mask()) == seen.end()) {
            seen.push_back(h.edge_mask());
            out.push_back(h);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// all connected labeled graphs on {1..n}
inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
        std::vector<Edge> es;
        int idx = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v, ++idx)
                if (bits & (1u << idx)) es.push_back({u, v});
        try {
            out.push_back(Graph(n, es));
        } catch (const std::invalid_argument&) {
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// one representative per isomorphism class of connected graphs on n vertices
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<EMask> seen;
    std::vector<Graph> out;
    for (const Graph& g : all_connected_graphs(n)) {
        EMask c = canonical_edge_mask(g);
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
            seen.push_back(c);
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace gc
