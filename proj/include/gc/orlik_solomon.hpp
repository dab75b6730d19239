#pragma once

// Orlik-Solomon algebra of a graphic arrangement: nbc bases, circuit
// straightening, Hilbert series, the cocontractad cocomposition, the tree
// monomial T(S) attached to an nbc set, and the pairing against gcGerst
// monomials.

#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <vector>

#include "gc/algebra.hpp"
#include "gc/lattice.hpp"
#include "gc/trees.hpp"

namespace gc {

// edges indexed by their position in g.edges(); the default order is the
// list order, i.e. lexicographic on (min endpoint, max endpoint)
struct EdgeOrder {
    std::vector<int> rank;  // rank[i] = position of edge i in the total order

    static EdgeOrder lex(const Graph& g) {
        EdgeOrder o;
        o.rank.resize(g.edge_count());
        std::iota(o.rank.begin(), o.rank.end(), 0);
        return o;
    }
    static EdgeOrder from_permutation(const Graph& g, const std::vector<int>& order) {
        if (int(order.size()) != g.edge_count())
            throw std::invalid_argument("edge order: permutation size mismatch");
        EdgeOrder o;
        o.rank.resize(order.size());
        std::vector<char> seen(order.size(), 0);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            int e = order[pos];
            if (e < 0 || e >= int(order.size()) || seen[e])
                throw std::invalid_argument("edge order: not a permutation");
            seen[e] = 1;
            o.rank[e] = int(pos);
        }
        return o;
    }
};

using OSMask = std::uint32_t;  // subset of edge positions

// all simple cycles of g as edge-position masks
inline std::vector<OSMask> simple_cycles(const Graph& g) {
    auto edges = g.edges();
    std::map<std::pair<int, int>, int> eix;
    for (std::size_t i = 0; i < edges.size(); ++i) eix[{edges[i].u, edges[i].v}] = int(i);
    auto ix = [&](int u, int v) { return eix.at({std::min(u, v), std::max(u, v)}); };
    std::vector<OSMask> out;
    // canonical traversal: cycles start at their smallest vertex, with the
    // direction fixed by path[1] < path.back()
    std::vector<int> path;
    for (int v = 1; v <= g.n(); ++v) {
        path = {v};
        // close the cycle back at v only
        std::function<void(int, VMask)> walk = [&](int u, VMask used) {
            for (int w = v + 1; w <= g.n(); ++w) {
                if (!g.has_edge(u, w) || (used & vbit(w))) continue;
                path.push_back(w);
                if (path.size() >= 3 && g.has_edge(w, v) && path[1] < path.back()) {
                    OSMask c = 0;
                    for (std::size_t i = 0; i + 1 < path.size(); ++i)
                        c |= OSMask(1) << ix(path[i], path[i + 1]);
                    c |= OSMask(1) << ix(path.back(), v);
                    out.push_back(c);
                }
                walk(w, VMask(used | vbit(w)));
                path.pop_back();
            }
        };
        walk(v, vbit(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct OSContext {
    Graph host;
    EdgeOrder order;
    std::vector<Edge> edges;
    std::vector<OSMask> cycles;
    std::vector<OSMask> broken;     // cycle minus its order-minimal edge
    std::vector<int> broken_min;    // the removed edge (position)

    explicit OSContext(const Graph& g, EdgeOrder o) : host(g), order(std::move(o)) {
        edges = g.edges();
        cycles = simple_cycles(g);
        for (OSMask c : cycles) {
            int mn = -1;
            for (int e = 0; e < int(edges.size()); ++e)
                if ((c >> e) & 1)
                    if (mn < 0 || order.rank[e] < order.rank[mn]) mn = e;
            broken.push_back(OSMask(c & ~(OSMask(1) << mn)));
            broken_min.push_back(mn);
        }
    }
    explicit OSContext(const Graph& g) : OSContext(g, EdgeOrder::lex(g)) {}

    bool is_nbc(OSMask s) const {
        for (OSMask b : broken)
            if ((s & b) == b) return false;
        return true;
    }
    bool contains_cycle(OSMask s) const {
        for (OSMask c : cycles)
            if ((s & c) == c) return true;
        return false;
    }
};

// all nbc subsets of a given size, sorted
inline std::vector<OSMask> nbc_basis(const OSContext& ctx, int k) {
    std::vector<OSMask> out;
    int m = int(ctx.edges.size());
    for (OSMask s = 0; s < (OSMask(1) << m); ++s)
        if (popcount(s) == k && ctx.is_nbc(s)) out.push_back(s);
    return out;
}

// monomials in canonical (sorted) edge order with the permutation sign
// absorbed into coefficients
class OSElement {
public:
    OSElement() = default;
    explicit OSElement(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<OSMask, Rational>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    void add(OSMask s, const Rational& c) {
        if (c == 0) return;
        if (degree_ < 0) degree_ = popcount(s);
        if (popcount(s) != degree_) throw std::invalid_argument("os element: inhomogeneous");
        auto it = terms_.find(s);
        if (it == terms_.end()) terms_[s] = c;
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    OSElement& operator+=(const OSElement& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    OSElement& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        else
            for (auto& [s, v] : terms_) v *= c;
        return *this;
    }
    bool operator==(const OSElement&) const = default;

private:
    int degree_ = -1;
    std::map<OSMask, Rational> terms_;
};

// sign of sorting an explicit edge word into increasing position order;
// returns 0 coefficient for repeated edges
inline std::pair<int, OSMask> sort_edge_word(const std::vector<int>& word) {
    OSMask s = 0;
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (s & (OSMask(1) << word[i])) return {0, 0};
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[j] < word[i]) sign = -sign;
        s |= OSMask(1) << word[i];
    }
    return {sign, s};
}

// straighten a single monomial to the nbc basis
inline OSElement os_reduce(const OSContext& ctx, OSMask s, const Rational& coeff = 1) {
    OSElement out(popcount(s));
    if (coeff == 0) return out;
    if (ctx.contains_cycle(s)) return out;  // dependent monomials vanish
    std::map<OSMask, Rational> work{{s, coeff}};
    while (!work.empty()) {
        auto it = std::prev(work.end());
        OSMask cur = it->first;
        Rational c = it->second;
        work.erase(it);
        // broken circuit contained in cur with the largest removed edge
        int best = -1;
        for (std::size_t bi = 0; bi < ctx.broken.size(); ++bi) {
            if ((cur & ctx.broken[bi]) != ctx.broken[bi]) continue;
            if (best < 0 ||
                ctx.order.rank[ctx.broken_min[bi]] > ctx.order.rank[ctx.broken_min[best]])
                best = int(bi);
        }
        if (best < 0) {
            out.add(cur, c);
            continue;
        }
        // rewrite: with the circuit C = {c0 < c1 < ... < ck} in order-rank,
        // w_{C\c0} = sum_{i>=1} (-1)^{i-1} w_{C\ci}; multiply by the rest
        OSMask C = ctx.cycles[best];
        OSMask bc = ctx.broken[best];
        OSMask rest = OSMask(cur & ~bc);
        std::vector<int> ce;
        for (int e = 0; e < int(ctx.edges.size()); ++e)
            if ((C >> e) & 1) ce.push_back(e);
        std::sort(ce.begin(), ce.end(),
                  [&](int a, int b) { return ctx.order.rank[a] < ctx.order.rank[b]; });
        // position-sign of splitting cur = bc * rest (bc edges pulled front,
        // in position order inside each side)
        int split_sign = 1;
        {
            std::vector<int> wa, wb;
            for (int e = 0; e < int(ctx.edges.size()); ++e) {
                if ((bc >> e) & 1) wa.push_back(e);
                if ((rest >> e) & 1) wb.push_back(e);
            }
            // count inversions between the two sorted lists inside cur
            for (int eb : wb)
                for (int ea : wa)
                    if (eb < ea) split_sign = -split_sign;
        }
        // the circuit relation lists monomials in order-rank sequence, while
        // masks are canonical position order; convert the broken-circuit
        // factor first
        int bc_conv;
        {
            std::vector<int> word(ce.begin() + 1, ce.end());
            bc_conv = sort_edge_word(word).first;
        }
        for (std::size_t i = 1; i < ce.size(); ++i) {
            OSMask ci = OSMask(C & ~(OSMask(1) << ce[i]));
            if (ci & rest) continue;  // repeated edge kills the term
            int sgn = (i % 2 == 1) ? 1 : -1;
            std::vector<int> word;
            for (int e : ce)
                if (e != ce[i]) word.push_back(e);
            auto [s1, m1] = sort_edge_word(word);
            std::vector<int> word2;
            for (int e = 0; e < int(ctx.edges.size()); ++e)
                if ((m1 >> e) & 1) word2.push_back(e);
            for (int e = 0; e < int(ctx.edges.size()); ++e)
                if ((rest >> e) & 1) word2.push_back(e);
            auto [s2, m2] = sort_edge_word(word2);
            if (s2 == 0) continue;
            work[m2] += c * split_sign * bc_conv * sgn * s1 * s2;
            if (work[m2] == 0) work.erase(m2);
        }
    }
    return out;
}

inline OSElement os_reduce(const OSContext& ctx, const OSElement& e) {
    OSElement out(e.degree());
    for (const auto& [s, c] : e.terms()) out += os_reduce(ctx, s, c);
    return out;
}

// monomial from an explicit (sign-sensitive) edge word
inline OSElement os_monomial(const OSContext& ctx, const std::vector<int>& word) {
    auto [sign, mask] = sort_edge_word(word);
    OSElement out(int(word.size()));
    if (sign == 0) return out;
    return os_reduce(ctx, mask, sign);
}

inline OSElement os_product(const OSContext& ctx, const OSElement& a, const OSElement& b) {
    OSElement out(a.degree() + b.degree());
    for (const auto& [s, cs] : a.terms())
        for (const auto& [t, ct] : b.terms()) {
            std::vector<int> word;
            for (int e = 0; e < int(ctx.edges.size()); ++e)
                if ((s >> e) & 1) word.push_back(e);
            for (int e = 0; e < int(ctx.edges.size()); ++e)
                if ((t >> e) & 1) word.push_back(e);
            auto [sg, m] = sort_edge_word(word);
            if (sg) out += os_reduce(ctx, m, cs * ct * sg);
        }
    return out;
}

// Hilbert series by nbc count per degree, cross-checked against the
// partition-lattice formula sum_I t^{rk I} prod |mu|
inline std::vector<long long> os_hilbert(const Graph& g) {
    OSContext ctx(g);
    std::vector<long long> coeff(g.n(), 0);
    for (int k = 0; k < g.n(); ++k) coeff[k] = (long long)nbc_basis(ctx, k).size();
    std::vector<long long> lattice_coeff(g.n(), 0);
    for (const auto& p : enumerate_partitions(g)) {
        long long prod = 1;
        for (VMask b : p.blocks) prod *= abs_moebius_cached(induced_subgraph(g, b).graph);
        lattice_coeff[g.n() - p.size()] += prod;
    }
    if (coeff != lattice_coeff)
        throw std::runtime_error("os_hilbert: nbc count disagrees with the lattice formula");
    return coeff;
}

// cocomposition at a tube: one tensor term per monomial
struct OSTensorTerm {
    OSMask left = 0;   // on g/G
    OSMask right = 0;  // on g|_G
    Rational coeff;
};

// images of a monomial under the cocomposition map determined on generators
// by w_e -> w_e' x 1 (e not inside G) and w_e -> 1 x w_e (e inside G)
inline std::vector<OSTensorTerm> os_cocompose(const OSContext& ctx, const OSElement& x,
                                              VMask G) {
    const Graph& g = ctx.host;
    auto con = contract_tube(g, G);
    auto ind = induced_subgraph(g, G);
    OSContext lctx(con.graph);
    OSContext rctx(ind.graph);
    auto lix = [&](int u, int v) {
        auto es = con.graph.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            if (es[i].u == std::min(u, v) && es[i].v == std::max(u, v)) return int(i);
        throw std::logic_error("os_cocompose: contracted edge missing");
    };
    auto rix = [&](int u, int v) {
        auto es = ind.graph.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            if (es[i].u == std::min(u, v) && es[i].v == std::max(u, v)) return int(i);
        throw std::logic_error("os_cocompose: induced edge missing");
    };
    // block index per vertex
    std::vector<int> block_of(g.n() + 1, 0);
    for (std::size_t b = 0; b < con.blocks.size(); ++b)
        for (int v : mask_vertices(con.blocks[b])) block_of[v] = int(b) + 1;

    std::vector<OSTensorTerm> out;
    for (const auto& [s, c] : x.terms()) {
        // walk edges in canonical order; route each factor left or right
        std::vector<int> lword, rword;
        int koszul = 1;
        int lcount = 0, rcount = 0;
        (void)lcount;
        bool dead = false;
        for (int e = 0; e < int(ctx.edges.size()) && !dead; ++e) {
            if (!((s >> e) & 1)) continue;
            auto [u, v] = ctx.edges[e];
            bool inside = (G & vbit(u)) && (G & vbit(v));
            if (inside) {
                rword.push_back(rix(ind.old_to_new[u], ind.old_to_new[v]));
                ++rcount;
            } else {
                // every right factor already emitted hops over this left one
                if (rcount % 2 == 1) koszul = -koszul;
                int bu = block_of[u], bv = block_of[v];
                if (bu == bv) { dead = true; break; }
                lword.push_back(lix(bu, bv));
            }
        }
        if (dead) continue;
        auto [sl, ml] = sort_edge_word(lword);
        auto [sr, mr] = sort_edge_word(rword);
        if (sl == 0 || sr == 0) continue;
        // reduce both sides to nbc
        OSElement le = os_reduce(lctx, ml, Rational(1));
        OSElement re = os_reduce(rctx, mr, Rational(1));
        for (const auto& [lmask, lc] : le.terms())
            for (const auto& [rmask, rc] : re.terms())
                out.push_back({lmask, rmask, c * koszul * sl * sr * lc * rc});
    }
    // merge duplicates
    std::map<std::pair<OSMask, OSMask>, Rational> acc;
    for (const auto& t : out) acc[{t.left, t.right}] += t.coeff;
    out.clear();
    for (const auto& [k, c] : acc)
        if (c != 0) out.push_back({k.first, k.second, c});
    return out;
}

// ---- T(S) and the pairing --------------------------------------------------

// The tree monomial attached to an nbc set: process edges in decreasing
// order, grafting each new bracket corolla onto the trees its endpoints
// already belong to; cap the resulting forest with the unique commutative
// comb on the contracted graph.
inline Tree tree_of_nbc(const OSContext& ctx, OSMask S, const Alphabet& alpha) {
    if (!ctx.is_nbc(S)) throw std::invalid_argument("tree_of_nbc: set contains a broken circuit");
    const Graph& g = ctx.host;
    int m_letter = alpha.find("m");
    int b_letter = -1;
    for (int l = 0; l < int(alpha.letters.size()); ++l)
        if (l != m_letter && alpha.letters[l].host.n() == 2) { b_letter = l; break; }
    if (b_letter < 0) throw std::invalid_argument("tree_of_nbc: alphabet lacks a bracket letter");

    struct RawTree {
        VMask verts = 0;
        std::vector<TreeNode> nodes;  // leaves in host labels, root at 0
    };
    std::vector<RawTree> forest;
    std::vector<int> order_edges;
    for (int e = 0; e < int(ctx.edges.size()); ++e)
        if ((S >> e) & 1) order_edges.push_back(e);
    std::sort(order_edges.begin(), order_edges.end(),
              [&](int a, int b) { return ctx.order.rank[a] > ctx.order.rank[b]; });
    for (int e : order_edges) {
        auto [u, v] = ctx.edges[e];
        RawTree merged;
        merged.nodes.push_back({});
        merged.nodes[0].letter = b_letter;
        merged.verts = VMask(vbit(u) | vbit(v));
        std::vector<int> ch;
        for (int w : {u, v}) {
            int found = -1;
            for (std::size_t i = 0; i < forest.size(); ++i)
                if (forest[i].verts & vbit(w)) found = int(i);
            if (found < 0) {
                ch.push_back(w);
            } else {
                int off = int(merged.nodes.size());
                for (const auto& nd : forest[found].nodes) {
                    TreeNode copy = nd;
                    for (auto& c : copy.children)
                        if (c < 0) c = ~(~c + off);
                    merged.nodes.push_back(copy);
                }
                ch.push_back(~off);
                merged.verts |= forest[found].verts;
                forest.erase(forest.begin() + found);
            }
        }
        merged.nodes[0].children = ch;
        forest.push_back(std::move(merged));
    }
    // partition: forest leaf sets plus untouched singletons
    std::vector<VMask> blocks;
    VMask covered = 0;
    for (const auto& t : forest) {
        blocks.push_back(t.verts);
        covered |= t.verts;
    }
    for (int v = 1; v <= g.n(); ++v)
        if (!(covered & vbit(v))) blocks.push_back(vbit(v));
    auto con = contract(g, blocks);
    // forest index per block (sorted blocks)
    std::vector<int> tree_of_block(con.blocks.size(), -1);
    for (std::size_t b = 0; b < con.blocks.size(); ++b)
        for (std::size_t i = 0; i < forest.size(); ++i)
            if (forest[i].verts == con.blocks[b]) tree_of_block[b] = int(i);

    std::vector<TreeNode> raw;
    if (con.graph.n() == 1) {
        // a single tree covering everything: no commutative cap
        raw = forest[0].nodes;
        return Tree::build(g, raw);
    }
    // greedy commutative comb on the contracted graph: v1 = min vertex,
    // v_{i+1} = min vertex adjacent to the accumulated tube
    std::vector<int> seq{1};
    VMask acc = vbit(1);
    while (int(seq.size()) < con.graph.n()) {
        int next = -1;
        for (int v = 1; v <= con.graph.n(); ++v) {
            if (acc & vbit(v)) continue;
            if (con.graph.adj_set(acc) & vbit(v)) { next = v; break; }
        }
        if (next < 0) throw std::logic_error("tree_of_nbc: contracted graph disconnected");
        seq.push_back(next);
        acc |= vbit(next);
    }
    // leaf content per block: vertex or grafted forest tree
    auto block_child = [&](int blockix) -> int {
        int ti = tree_of_block[blockix - 1];
        if (ti < 0) return min_vertex(con.blocks[blockix - 1]);
        int off = int(raw.size());
        for (const auto& nd : forest[ti].nodes) {
            TreeNode copy = nd;
            for (auto& c : copy.children)
                if (c < 0) c = ~(~c + off);
            raw.push_back(copy);
        }
        return ~off;
    };
    // build the left comb m(...m(m(s1,s2),s3)...,sk), root at node 0
    raw.push_back({});  // root
    int cur = 0;
    for (int i = int(seq.size()) - 1; i >= 2; --i) {
        raw[cur].letter = m_letter;
        int nxt = int(raw.size());
        raw.push_back({});
        int leafc = block_child(seq[i]);
        raw[cur].children = {~nxt, leafc};
        cur = nxt;
    }
    raw[cur].letter = m_letter;
    int c1 = block_child(seq[0]);
    int c2 = block_child(seq[1]);
    raw[cur].children = {c1, c2};
    return Tree::build(g, raw);
}

// nadir (lowest common ancestor) map: edge {u,v} of S -> tree vertex
inline bool phi_is_bijection(const Tree& t, const OSContext& ctx, OSMask S, int b_letter) {
    std::vector<int> leaf_node(t.host().n() + 1, -1);
    for (int i = 0; i < t.weight(); ++i)
        for (int c : t.node(i).children)
            if (c > 0) leaf_node[c] = i;
    auto lca = [&](int u, int v) {
        // walk up from the deeper leaf-parent until the leaf sets meet
        int a = leaf_node[u];
        while (!(t.node(a).leaves & vbit(v))) a = t.node(a).parent;
        return a;
    };
    std::vector<char> usedv(t.weight(), 0);
    int hits = 0;
    for (int e = 0; e < int(ctx.edges.size()); ++e) {
        if (!((S >> e) & 1)) continue;
        int w = lca(ctx.edges[e].u, ctx.edges[e].v);
        if (t.node(w).letter != b_letter) return false;
        if (usedv[w]) return false;
        usedv[w] = 1;
        ++hits;
    }
    int bcount = 0;
    for (const auto& nd : t.nodes())
        if (nd.letter == b_letter) ++bcount;
    return hits == bcount;
}

// graded evaluation of the pairing <T, w_S> for a gcGerst monomial whose
// m-vertices sit at the bottom; returns -1, 0 or +1
inline int gerst_pairing(const Tree& T, const OSContext& ctx, OSMask S, const Alphabet& alpha) {
    int m_letter = alpha.find("m");
    int b_letter = alpha.find("b");
    // precondition: every m-vertex's parent chain is all m (m at the bottom)
    for (int i = 0; i < T.weight(); ++i)
        if (T.node(i).letter == m_letter) {
            int p = T.node(i).parent;
            if (p >= 0 && T.node(p).letter != m_letter)
                throw std::invalid_argument("gerst_pairing: m-vertices must sit at the bottom");
        }
    int tdeg = 0;
    for (const auto& nd : T.nodes()) tdeg += alpha.degree(nd.letter);
    if (tdeg != popcount(S)) {
        std::cerr << "gerst_pairing: degree mismatch, returning 0\n";
        return 0;
    }

    std::function<Rational(const Tree&, const OSContext&, OSMask)> eval =
        [&](const Tree& t, const OSContext& c, OSMask s) -> Rational {
        if (t.weight() == 1) {
            // binary corolla on a two-vertex host with one edge
            bool is_b = (t.node(0).letter == b_letter);
            if (is_b) return s == 1 ? 1 : 0;
            return s == 0 ? 1 : 0;
        }
        // peel the last all-leaf vertex in DFS order
        int v = -1;
        for (int i = t.weight() - 1; i >= 1; --i) {
            bool all_leaves = true;
            for (int ch : t.node(i).children)
                if (ch < 0) all_leaves = false;
            if (all_leaves) { v = i; break; }
        }
        if (v < 0) throw std::logic_error("gerst_pairing: no peelable vertex");
        VMask G = t.node(v).leaves;
        int x = t.node(v).letter;
        OSElement xs(popcount(s));
        xs.add(s, 1);
        auto terms = os_cocompose(c, xs, G);
        // context tree on host/G, plus the sign of t = eps * (context o x)
        Occurrence occ;
        occ.root = v;
        occ.nodes = {v};
        auto d = gc::detail::decompose_at(t, occ);
        const Tree& context = d.context;
        Tree xcor = Tree::corolla(induced_subgraph(t.host(), G).graph, x);
        auto st = compose(t.host(), G, context, xcor, alpha);
        if (!(st.tree == t)) throw std::logic_error("gerst_pairing: peel failed to rebuild");
        OSContext lctx(context.host());
        Rational total = 0;
        for (const auto& tt : terms) {
            // right factor must match the peeled letter exactly
            if (x == b_letter && tt.right != 1) continue;
            if (x == m_letter && tt.right != 0) continue;
            int graded = (alpha.degree(x) % 2 == 1 && popcount(tt.left) % 2 == 1) ? -1 : 1;
            total += tt.coeff * graded * eval(context, lctx, tt.left);
        }
        return total * st.sign;
    };
    Rational value = eval(T, ctx, S);
    if (value != -1 && value != 0 && value != 1)
        throw std::logic_error("gerst_pairing: evaluation is not 0 or +-1");
    return int(value);
}

}  // namespace gc
