#pragma once

// Built-in presentations (gcCom, gcLie, gcAss in both bases, gcGerst, the
// higher-disc homology family, RST and its dual) and the concrete rooted
// spanning tree model with its grafting product.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gc/algebra.hpp"
#include "gc/presentation.hpp"

namespace gc {

namespace detail {

// weight-2 monomial x o_G y on host h (binary letters)
inline Element mono2(const Graph& h, VMask G, int outer, int inner, const Alphabet& a) {
    Tree to = Tree::corolla(contract_tube(h, G).graph, outer);
    Tree ti = Tree::corolla(induced_subgraph(h, G).graph, inner);
    auto st = compose(h, G, to, ti, a);
    return Element::monomial(st.tree, st.sign);
}

inline Perm perm_of(std::initializer_list<int> images) {
    Perm p{0};
    for (int v : images) p.push_back(v);
    return p;
}

}  // namespace detail

// Symmetric presentations as printed; call symmetrize_presentation for the
// shuffle version used by the Groebner machinery.
inline Presentation preset(const std::string& name, int en_degree = 2) {
    using detail::mono2;
    using detail::perm_of;
    Presentation p;
    p.name = name;
    Graph P3 = path_graph(3), K3 = complete_graph(3);
    VMask T12 = 0b011, T23 = 0b110, T13 = 0b101;

    if (name == "gcCom") {
        int m = p.alphabet.add_character("m", 0, +1);
        p.add_relation(P3, mono2(P3, T12, m, m, p.alphabet) - mono2(P3, T23, m, m, p.alphabet));
        p.add_relation(K3, mono2(K3, T12, m, m, p.alphabet) - mono2(K3, T23, m, m, p.alphabet));
        return p;
    }
    if (name == "gcLie") {
        int b = p.alphabet.add_character("b", 0, -1);
        p.add_relation(P3, mono2(P3, T12, b, b, p.alphabet) - mono2(P3, T23, b, b, p.alphabet));
        Element jac = mono2(K3, T12, b, b, p.alphabet);
        jac += translate(mono2(K3, T12, b, b, p.alphabet), perm_of({2, 3, 1}), p.alphabet);
        jac += translate(mono2(K3, T12, b, b, p.alphabet), perm_of({3, 1, 2}), p.alphabet);
        p.add_relation(K3, jac);
        return p;
    }
    if (name == "gcAss-nu") {
        auto [nu, nuf] = p.alphabet.add_free("nu", 0);
        const Alphabet& a = p.alphabet;
        p.add_relation(P3, mono2(P3, T12, nu, nu, a) - mono2(P3, T23, nu, nu, a));
        p.add_relation(P3, mono2(P3, T12, nuf, nu, a) - mono2(P3, T23, nu, nuf, a));
        p.add_relation(P3, mono2(P3, T12, nu, nuf, a) - mono2(P3, T23, nuf, nu, a));
        p.add_relation(K3, mono2(K3, T12, nu, nu, a) - mono2(K3, T23, nu, nu, a));
        return p;
    }
    if (name == "gcAss-mb" || name == "gcGerst" || name == "En") {
        // one family of relation shapes; they differ in the degree and
        // symmetry of the bracket generator and in the sign of its P3 relation
        int bdeg, bsign, ccsign;  // relation: b o12 b = ccsign * b o23 b
        std::string bname = "b";
        if (name == "gcAss-mb") {
            bdeg = 0, bsign = -1, ccsign = +1;
        } else if (name == "gcGerst") {
            bdeg = 1, bsign = +1, ccsign = -1;
        } else {  // En
            if (en_degree < 2) throw std::invalid_argument("En requires n >= 2");
            bdeg = en_degree - 1;
            bsign = (en_degree % 2 == 0) ? +1 : -1;
            ccsign = (en_degree % 2 == 0) ? -1 : +1;
            bname = "c";
            p.name = "E" + std::to_string(en_degree);
        }
        int m = p.alphabet.add_character("m", 0, +1);
        int b = p.alphabet.add_character(bname, bdeg, bsign);
        const Alphabet& a = p.alphabet;
        p.add_relation(P3, mono2(P3, T12, m, m, a) - mono2(P3, T23, m, m, a));
        p.add_relation(P3, mono2(P3, T12, b, b, a) - Rational(ccsign) * mono2(P3, T23, b, b, a));
        Element jac = mono2(K3, T12, b, b, a);
        jac += translate(mono2(K3, T12, b, b, a), perm_of({2, 3, 1}), a);
        jac += translate(mono2(K3, T12, b, b, a), perm_of({3, 1, 2}), a);
        if (name == "gcAss-mb") {
            // the derived m/b form of the associative relations
            p.add_relation(P3, mono2(P3, T12, m, b, a) - mono2(P3, T23, b, m, a));
            p.add_relation(K3, mono2(K3, T12, m, m, a) - mono2(K3, T23, m, m, a) +
                                   mono2(K3, T13, b, b, a));
            p.add_relation(K3, jac);
            p.add_relation(K3, mono2(K3, T12, b, m, a) - mono2(K3, T23, m, b, a) -
                                   mono2(K3, T13, m, b, a));
        } else {
            p.add_relation(P3, mono2(P3, T12, b, m, a) - mono2(P3, T23, m, b, a));
            p.add_relation(K3, mono2(K3, T12, m, m, a) - mono2(K3, T23, m, m, a));
            p.add_relation(K3, jac);
            p.add_relation(K3, mono2(K3, T12, b, m, a) - mono2(K3, T23, m, b, a) -
                                   translate(mono2(K3, T12, m, b, a), perm_of({1, 3, 2}), a));
        }
        return p;
    }
    if (name == "RST") {
        auto [mu, muf] = p.alphabet.add_free("mu", 0);
        const Alphabet& a = p.alphabet;
        p.add_relation(P3, mono2(P3, T12, mu, mu, a) - mono2(P3, T23, mu, mu, a));
        p.add_relation(P3, mono2(P3, T12, mu, muf, a) - mono2(P3, T23, muf, mu, a));
        p.add_relation(P3, mono2(P3, T12, muf, mu, a));
        Element r4 = mono2(K3, T12, mu, mu, a) - mono2(K3, T23, mu, mu, a);
        r4 -= translate(r4, perm_of({1, 3, 2}), a);
        p.add_relation(K3, r4);
        return p;
    }
    if (name == "RST-dual") {
        auto [nu, nuf] = p.alphabet.add_free("nu", 0);
        const Alphabet& a = p.alphabet;
        p.add_relation(P3, mono2(P3, T12, nu, nu, a) - mono2(P3, T23, nu, nu, a));
        p.add_relation(P3, mono2(P3, T12, nu, nuf, a) - mono2(P3, T23, nuf, nu, a));
        p.add_relation(K3, mono2(K3, T12, nu, nu, a) - mono2(K3, T23, nu, nu, a));
        Element r = mono2(K3, T23, nu, nu, a);
        r -= translate(r, perm_of({1, 3, 2}), a);
        p.add_relation(K3, r);
        return p;
    }
    throw std::invalid_argument("preset: unknown name " + name);
}

inline Presentation preset_en(int n) { return preset("En", n); }

// ---- rooted spanning trees ------------------------------------------------

struct RootedSpanningTree {
    Graph host;
    EMask tree_edges = 0;
    int root = 0;

    bool operator==(const RootedSpanningTree&) const = default;
    bool operator<(const RootedSpanningTree& o) const {
        if (!(host == o.host)) return host < o.host;
        if (tree_edges != o.tree_edges) return tree_edges < o.tree_edges;
        return root < o.root;
    }
};

inline bool spans(const Graph& g, EMask edges) {
    if (popcount(edges) != g.n() - 1) return false;
    // union-find over vertices
    std::vector<int> up(g.n() + 1);
    std::iota(up.begin(), up.end(), 0);
    std::function<int(int)> find = [&](int v) { return up[v] == v ? v : up[v] = find(up[v]); };
    for (auto [u, v] : g.edges())
        if (edges & (EMask(1) << pair_index(u, v))) {
            int a = find(u), b = find(v);
            if (a == b) return false;  // cycle
            up[a] = b;
        }
    for (int v = 2; v <= g.n(); ++v)
        if (find(v) != find(1)) return false;
    return true;
}

inline std::vector<EMask> spanning_trees(const Graph& g) {
    std::vector<EMask> out;
    auto edges = g.edges();
    int m = int(edges.size());
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        if (popcount(bits) != g.n() - 1) continue;
        EMask em = 0;
        for (int i = 0; i < m; ++i)
            if (bits & (1u << i)) em |= EMask(1) << pair_index(edges[i].u, edges[i].v);
        if (spans(g, em)) out.push_back(em);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<RootedSpanningTree> rooted_spanning_trees(const Graph& g) {
    if (g.n() > kMaxVertices) throw std::invalid_argument("rooted_spanning_trees: graph too large");
    std::vector<RootedSpanningTree> out;
    if (g.n() == 1) return {{g, 0, 1}};
    for (EMask t : spanning_trees(g))
        for (int r = 1; r <= g.n(); ++r) out.push_back({g, t, r});
    return out;
}

// a rooted subtree of g on a vertex subset: spanning tree of the induced
// subgraph (edges in the host's labels) plus a root inside the subset
struct RootedSubtree {
    VMask vertices = 0;
    EMask edges = 0;
    int root = 0;
    bool operator<(const RootedSubtree& o) const {
        if (vertices != o.vertices) return vertices < o.vertices;
        if (edges != o.edges) return edges < o.edges;
        return root < o.root;
    }
    bool operator==(const RootedSubtree&) const = default;
};

using RstSum = std::map<RootedSubtree, Rational>;

// T1 * T2: graft the root of T2 onto every vertex of T1 adjacent to it
inline RstSum rst_star(const Graph& g, const RootedSubtree& t1, const RootedSubtree& t2) {
    if (t1.vertices & t2.vertices) throw std::invalid_argument("rst_star: subtrees overlap");
    RstSum out;
    for (int v : mask_vertices(t1.vertices)) {
        if (!g.has_edge(v, t2.root)) continue;
        RootedSubtree r;
        r.vertices = VMask(t1.vertices | t2.vertices);
        r.edges = EMask(t1.edges | t2.edges) | (EMask(1) << pair_index(v, t2.root));
        r.root = t1.root;
        out[r] += 1;
    }
    return out;
}

inline RstSum rst_star(const Graph& g, const RstSum& a, const RootedSubtree& t2) {
    RstSum out;
    for (const auto& [t1, c] : a)
        for (const auto& [r, c2] : rst_star(g, t1, t2)) out[r] += c * c2;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

inline RstSum rst_star(const Graph& g, const RootedSubtree& t1, const RstSum& b) {
    RstSum out;
    for (const auto& [t2, c] : b)
        for (const auto& [r, c2] : rst_star(g, t1, t2)) out[r] += c * c2;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// all rooted subtrees on a fixed vertex subset
inline std::vector<RootedSubtree> rooted_subtrees_on(const Graph& g, VMask s) {
    std::vector<RootedSubtree> out;
    if (popcount(s) == 1) {
        out.push_back({s, 0, min_vertex(s)});
        return out;
    }
    auto ind = induced_subgraph(g, s);
    auto verts = mask_vertices(s);
    for (EMask t : spanning_trees(ind.graph)) {
        EMask host_edges = 0;
        for (auto [u, v] : ind.graph.edges())
            if (t & (EMask(1) << pair_index(u, v)))
                host_edges |= EMask(1) << pair_index(verts[u - 1], verts[v - 1]);
        for (int r : verts) out.push_back({s, host_edges, r});
    }
    return out;
}

}  // namespace gc
