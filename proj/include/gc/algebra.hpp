#pragma once

// Decorated tree monomials and exact-rational linear combinations: the free
// shuffle contractad. Signs follow the Koszul rule with the DFS listing of
// decorated vertices (root first, children in canonical planar order) as the
// reference ordering.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gc/graph.hpp"
#include "gc/trees.hpp"

namespace gc {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// ---- alphabet -----------------------------------------------------------

// A letter is a basis element of the generator space on its host component.
// The P2 flip acts by letter -> flip_sign * letters[flip_to]; a +/-1
// character representation has flip_to = itself, a free generator is a pair
// of letters exchanged by the flip.
struct Letter {
    std::string name;
    int degree = 0;
    int flip_to = -1;
    int flip_sign = 1;
    Graph host = path_graph(2);
};

struct Alphabet {
    std::vector<Letter> letters;

    int add(const Letter& l) {
        letters.push_back(l);
        return int(letters.size()) - 1;
    }
    // symmetric (eps=+1) or antisymmetric (eps=-1) binary generator
    int add_character(const std::string& name, int degree, int eps) {
        int id = add({name, degree, 0, eps});
        letters[id].flip_to = id;
        return id;
    }
    // free binary generator: returns {x, x^(12)}
    std::pair<int, int> add_free(const std::string& name, int degree) {
        int a = add({name, degree, 0, 1});
        int b = add({name + "~", degree, a, 1});
        letters[a].flip_to = b;
        return {a, b};
    }
    int find(const std::string& name) const {
        for (int i = 0; i < int(letters.size()); ++i)
            if (letters[i].name == name) return i;
        throw std::invalid_argument("alphabet: unknown letter " + name);
    }
    int degree(int id) const { return letters[id].degree; }
    const std::string& name(int id) const { return letters[id].name; }
    bool all_binary() const {
        for (const auto& l : letters)
            if (l.host.n() != 2) return false;
        return true;
    }
};

inline int monomial_degree(const Tree& t, const Alphabet& a) {
    int d = 0;
    for (const auto& nd : t.nodes()) {
        if (nd.letter < 0) throw std::invalid_argument("monomial_degree: undecorated node");
        d += a.degree(nd.letter);
    }
    return d;
}

// every decoration's host must equal the vertex input graph
inline void validate_monomial(const Tree& t, const Alphabet& a) {
    for (int i = 0; i < t.weight(); ++i) {
        int l = t.node(i).letter;
        if (l < 0) throw std::invalid_argument("monomial: undecorated vertex");
        if (!(a.letters[l].host == t.input_graph(i)))
            throw std::invalid_argument("monomial: decoration host mismatch at vertex " +
                                        std::to_string(i));
    }
}

// Koszul sign of moving items (with given degrees, listed in reference
// order) to the positions new_pos: -1 per inversion of two odd items.
inline int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& new_pos) {
    int sign = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t j = i + 1; j < degrees.size(); ++j)
            if ((degrees[i] & 1) && (degrees[j] & 1) && new_pos[i] > new_pos[j])
                sign = -sign;
    return sign;
}

struct SignedTree {
    int sign = 1;
    Tree tree;
};

// ---- signed substitution -------------------------------------------------
// Graft inner monomials into the block leaves of an outer monomial. The
// reference ordering is [outer DFS, inner_1 DFS, inner_2 DFS, ...] with
// inners listed in block order (blocks sorted by min vertex); the sign is
// the Koszul sign of the permutation to the canonical DFS of the result.
inline SignedTree signed_substitute(const Graph& g, const std::vector<VMask>& blocks_in,
                                    const Tree& outer,
                                    const std::vector<std::optional<Tree>>& inners,
                                    const Alphabet& alpha) {
    auto con = contract(g, blocks_in);
    if (!(outer.host() == con.graph))
        throw std::invalid_argument("signed_substitute: outer host mismatch");
    if (inners.size() != con.blocks.size())
        throw std::invalid_argument("signed_substitute: inner list size mismatch");
    for (std::size_t i = 0; i < con.blocks.size(); ++i) {
        bool big = popcount(con.blocks[i]) > 1;
        if (big != inners[i].has_value())
            throw std::invalid_argument("signed_substitute: inner presence mismatch");
        if (big && !(inners[i]->host() == induced_subgraph(g, con.blocks[i]).graph))
            throw std::invalid_argument("signed_substitute: inner host mismatch");
    }

    std::vector<TreeNode> raw;
    std::vector<int> ref_rank;  // per raw node
    int next_rank = 0;
    // copy outer in DFS order; block leaves resolved afterwards
    std::function<int(int)> copy_outer = [&](int i) -> int {
        int self = int(raw.size());
        raw.push_back({});
        ref_rank.push_back(next_rank++);
        raw[self].letter = outer.node(i).letter;
        std::vector<int> ch;
        for (int c : outer.node(i).children)
            ch.push_back(c < 0 ? ~copy_outer(~c) : c /* block index, patched below */);
        raw[self].children = ch;
        return self;
    };
    copy_outer(0);
    int outer_nodes = int(raw.size());
    // record where each block leaf sits
    std::vector<std::pair<int, int>> slots(con.blocks.size(), {-1, -1});
    for (int i = 0; i < outer_nodes; ++i)
        for (std::size_t s = 0; s < raw[i].children.size(); ++s) {
            int c = raw[i].children[s];
            if (c > 0) slots[c - 1] = {i, int(s)};
        }
    // splice inners in block order so ref ranks follow the convention
    std::function<int(const Tree&, int, const std::vector<int>&)> copy_in =
        [&](const Tree& src, int i, const std::vector<int>& leafmap) -> int {
        int self = int(raw.size());
        raw.push_back({});
        ref_rank.push_back(next_rank++);
        raw[self].letter = src.node(i).letter;
        std::vector<int> ch;
        for (int c : src.node(i).children)
            ch.push_back(c > 0 ? leafmap[c] : ~copy_in(src, ~c, leafmap));
        raw[self].children = ch;
        return self;
    };
    for (std::size_t b = 0; b < con.blocks.size(); ++b) {
        auto [ni, si] = slots[b];
        if (ni < 0) throw std::logic_error("signed_substitute: missing block leaf");
        if (!inners[b]) {
            raw[ni].children[si] = min_vertex(con.blocks[b]);
        } else {
            auto verts = mask_vertices(con.blocks[b]);
            std::vector<int> leafmap(inners[b]->host().n() + 1, 0);
            for (std::size_t q = 0; q < verts.size(); ++q) leafmap[q + 1] = verts[q];
            raw[ni].children[si] = ~copy_in(*inners[b], 0, leafmap);
        }
    }

    std::vector<int> dfs_pos;
    Tree result = Tree::build(g, raw, &dfs_pos);
    std::vector<int> degrees(raw.size()), new_pos(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        degrees[ref_rank[i]] = raw[i].letter >= 0 ? alpha.degree(raw[i].letter) : 0;
        new_pos[ref_rank[i]] = dfs_pos[i];
    }
    return {koszul_sign(degrees, new_pos), result};
}

// infinitesimal composition at a tube G (|G| >= 2); outer on g/G, inner on g|_G
inline SignedTree compose(const Graph& g, VMask G, const Tree& outer, const Tree& inner,
                          const Alphabet& alpha) {
    if (popcount(G) < 2) throw std::invalid_argument("compose: tube must have >= 2 vertices");
    std::vector<VMask> blocks{G};
    for (int v = 1; v <= g.n(); ++v)
        if (!(G & vbit(v))) blocks.push_back(vbit(v));
    auto sorted = sorted_blocks(blocks);
    std::vector<std::optional<Tree>> inners(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] == G) inners[i] = inner;
    return signed_substitute(g, blocks, outer, inners, alpha);
}

// ---- relabeling (graph automorphisms / isomorphisms) ---------------------

// Apply a vertex relabeling sigma (a bijection {1..n} -> {1..n}) to a
// monomial. Decorated vertices must be binary; when the relabeling reverses
// a vertex's two child blocks, its letter is transported through the flip.
inline SignedTree translate(const Tree& t, const Perm& sigma, const Alphabet& alpha) {
    Graph h = apply_perm(t.host(), sigma);
    std::vector<TreeNode> raw(t.nodes().begin(), t.nodes().end());
    int sign = 1;
    auto relabeled_min = [&](int i, int c) -> int {
        VMask m = (c > 0) ? vbit(c) : t.node(~c).leaves;
        (void)i;
        int best = 9;
        for (int v : mask_vertices(m)) best = std::min(best, sigma[v]);
        return best;
    };
    for (int i = 0; i < t.weight(); ++i) {
        auto& nd = raw[i];
        for (auto& c : nd.children)
            if (c > 0) c = sigma[c];
        if (t.node(i).letter >= 0) {
            if (t.node(i).children.size() != 2)
                throw std::invalid_argument("translate: only binary decorations supported");
            int m0 = relabeled_min(i, t.node(i).children[0]);
            int m1 = relabeled_min(i, t.node(i).children[1]);
            if (m0 > m1) {
                const Letter& l = alpha.letters[nd.letter];
                nd.letter = l.flip_to;
                sign *= l.flip_sign;
            }
        }
    }
    std::vector<int> dfs_pos;
    Tree result = Tree::build(h, raw, &dfs_pos);
    std::vector<int> degrees(raw.size()), new_pos(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        degrees[i] = raw[i].letter >= 0 ? alpha.degree(raw[i].letter) : 0;
        new_pos[i] = dfs_pos[i];
    }
    return {sign * koszul_sign(degrees, new_pos), result};
}

// ---- elements -------------------------------------------------------------

class Element {
public:
    Element() = default;
    explicit Element(const Graph& host) : host_(host) {}

    static Element monomial(const Tree& t, const Rational& c = 1) {
        Element e(t.host());
        if (c != 0) e.terms_[t] = c;
        return e;
    }

    const Graph& host() const { return host_; }
    const std::map<Tree, Rational>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Tree& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Tree& t, const Rational& c) {
        if (host_.n() == 0) host_ = t.host();
        if (!(t.host() == host_)) throw std::invalid_argument("element: host mismatch");
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            if (c != 0) terms_[t] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [t, c] : o.terms_) add_term(t, -c);
        return *this;
    }
    Element& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        else
            for (auto& [t, v] : terms_) v *= c;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    bool operator==(const Element& o) const { return host_ == o.host_ && terms_ == o.terms_; }

    int weight() const {
        if (terms_.empty()) return -1;
        int w = terms_.begin()->first.weight();
        for (const auto& [t, c] : terms_)
            if (t.weight() != w) throw std::invalid_argument("element: inhomogeneous weight");
        return w;
    }
    int degree(const Alphabet& a) const {
        if (terms_.empty()) return 0;
        int d = monomial_degree(terms_.begin()->first, a);
        for (const auto& [t, c] : terms_)
            if (monomial_degree(t, a) != d)
                throw std::invalid_argument("element: inhomogeneous degree");
        return d;
    }

private:
    Graph host_;
    std::map<Tree, Rational> terms_;
};

inline Element compose(const Graph& g, VMask G, const Element& outer, const Element& inner,
                       const Alphabet& alpha) {
    Element out(g);
    for (const auto& [to, co] : outer.terms())
        for (const auto& [ti, ci] : inner.terms()) {
            auto st = compose(g, G, to, ti, alpha);
            out.add_term(st.tree, co * ci * st.sign);
        }
    return out;
}

inline Element translate(const Element& e, const Perm& sigma, const Alphabet& alpha) {
    Element out;
    for (const auto& [t, c] : e.terms()) {
        auto st = translate(t, sigma, alpha);
        out.add_term(st.tree, c * st.sign);
    }
    return out;
}

// ---- enumeration of decorated monomials -----------------------------------

// all tree monomials of a given weight on g over the alphabet
inline std::vector<Tree> enumerate_monomials(const Alphabet& alpha, const Graph& g, int w) {
    if (g.n() == 1 || w <= 0) return {};
    TreeFilter f;
    f.max_weight = w;
    f.binary_only = alpha.all_binary();
    std::vector<Tree> out;
    for (const Tree& shape : enumerate_admissible_trees(g, f)) {
        if (shape.weight() != w) continue;
        // candidate letters per vertex
        std::vector<std::vector<int>> cand(shape.weight());
        bool ok = true;
        for (int v = 0; v < shape.weight() && ok; ++v) {
            Graph in = shape.input_graph(v);
            for (int l = 0; l < int(alpha.letters.size()); ++l)
                if (alpha.letters[l].host == in) cand[v].push_back(l);
            if (cand[v].empty()) ok = false;
        }
        if (!ok) continue;
        std::vector<int> pick(shape.weight(), 0);
        for (;;) {
            std::vector<TreeNode> raw(shape.nodes().begin(), shape.nodes().end());
            for (int v = 0; v < shape.weight(); ++v) raw[v].letter = cand[v][pick[v]];
            out.push_back(Tree::build(g, raw));
            int i = 0;
            for (; i < shape.weight(); ++i) {
                if (++pick[i] < int(cand[i].size())) break;
                pick[i] = 0;
            }
            if (i == shape.weight()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- divisibility ----------------------------------------------------------

struct Occurrence {
    int root = -1;            // topmost node of the embedded pattern
    std::vector<int> nodes;   // pattern nodes, sorted
};

struct Extract {
    Occurrence occ;
    Tree pattern;  // the embedded monomial on its induced-contracted host
};

namespace detail {

// extract the decorated sub-monomial at a connected node set W rooted at r
inline Tree extract_pattern(const Tree& t, int r, const std::vector<char>& in_w) {
    auto ind = induced_subgraph(t.host(), t.node(r).leaves);
    std::vector<VMask> blocks;
    for (int x = 0; x < t.weight(); ++x) {
        if (!in_w[x]) continue;
        for (int c : t.node(x).children) {
            if (c < 0 && in_w[~c]) continue;
            VMask bl = (c > 0) ? vbit(c) : t.node(~c).leaves;
            VMask rel = 0;
            for (int v : mask_vertices(bl)) rel |= vbit(ind.old_to_new[v]);
            blocks.push_back(rel);
        }
    }
    auto con = contract(ind.graph, blocks);
    std::map<VMask, int> block_ix;
    for (std::size_t i = 0; i < con.blocks.size(); ++i) block_ix[con.blocks[i]] = int(i) + 1;
    std::vector<TreeNode> raw;
    std::function<int(int)> build = [&](int x) -> int {
        int self = int(raw.size());
        raw.push_back({});
        raw[self].letter = t.node(x).letter;
        std::vector<int> ch;
        for (int c : t.node(x).children) {
            if (c < 0 && in_w[~c]) {
                ch.push_back(~build(~c));
            } else {
                VMask bl = (c > 0) ? vbit(c) : t.node(~c).leaves;
                VMask rel = 0;
                for (int v : mask_vertices(bl)) rel |= vbit(ind.old_to_new[v]);
                ch.push_back(block_ix.at(rel));
            }
        }
        raw[self].children = ch;
        return self;
    };
    build(r);
    return Tree::build(con.graph, raw);
}

}  // namespace detail

// all decorated sub-monomial extractions of t with min_size <= |W| <= max_size
inline std::vector<Extract> extract_all(const Tree& t, int min_size = 1,
                                        int max_size = 1 << 20) {
    std::vector<Extract> out;
    std::vector<char> in_w(t.weight(), 0);
    for (int r = 0; r < t.weight(); ++r) {
        std::vector<int> W{r};
        in_w.assign(t.weight(), 0);
        in_w[r] = 1;
        std::function<void(std::vector<int>, std::size_t)> grow =
            [&](std::vector<int> frontier, std::size_t from) {
                if (int(W.size()) >= min_size && int(W.size()) <= max_size) {
                    Occurrence occ;
                    occ.root = r;
                    occ.nodes = W;
                    std::sort(occ.nodes.begin(), occ.nodes.end());
                    out.push_back({occ, detail::extract_pattern(t, r, in_w)});
                }
                if (int(W.size()) >= max_size) return;
                for (std::size_t i = from; i < frontier.size(); ++i) {
                    int x = frontier[i];
                    W.push_back(x);
                    in_w[x] = 1;
                    auto next = frontier;
                    for (int c : t.node(x).children)
                        if (c < 0) next.push_back(~c);
                    grow(next, i + 1);
                    W.pop_back();
                    in_w[x] = 0;
                }
            };
        std::vector<int> frontier;
        for (int c : t.node(r).children)
            if (c < 0) frontier.push_back(~c);
        grow(frontier, 0);
    }
    return out;
}

// decorated-subtree embeddings of pattern into t
inline std::vector<Occurrence> occurrences(const Tree& t, const Tree& pattern) {
    std::vector<Occurrence> found;
    for (auto& ex : extract_all(t, pattern.weight(), pattern.weight()))
        if (ex.pattern == pattern) found.push_back(ex.occ);
    return found;
}

// monomial ("sub")tree extraction on an induced host, relabeled 1..|leaves|
inline Tree subtree_at(const Tree& t, int node) {
    auto ind = induced_subgraph(t.host(), t.node(node).leaves);
    std::vector<TreeNode> raw;
    std::function<int(int)> build = [&](int x) -> int {
        int self = int(raw.size());
        raw.push_back({});
        raw[self].letter = t.node(x).letter;
        std::vector<int> ch;
        for (int c : t.node(x).children)
            ch.push_back(c > 0 ? ind.old_to_new[c] : ~build(~c));
        raw[self].children = ch;
        return self;
    };
    build(node);
    return Tree::build(ind.graph, raw);
}

namespace detail {

struct Decomposition {
    Tree context;                          // on g / L_root
    VMask root_leaves;                     // L_root
    std::vector<VMask> blocks;             // boundary blocks in g|_L world, sorted
    std::vector<std::optional<Tree>> subtrees;  // aligned with blocks
    Tree matched;                          // the embedded pattern monomial
};

inline Decomposition decompose_at(const Tree& t, const Occurrence& occ) {
    const Graph& g = t.host();
    std::vector<char> in_w(t.weight(), 0);
    for (int x : occ.nodes) in_w[x] = 1;
    VMask L = t.node(occ.root).leaves;
    auto ind = induced_subgraph(g, L);

    Decomposition d;
    d.root_leaves = L;

    // boundary blocks and their subtrees, in the induced world
    std::vector<std::pair<VMask, std::optional<Tree>>> parts;
    for (int x : occ.nodes)
        for (int c : t.node(x).children) {
            if (c < 0 && in_w[~c]) continue;
            VMask bl = (c > 0) ? vbit(c) : t.node(~c).leaves;
            VMask rel = 0;
            for (int v : mask_vertices(bl)) rel |= vbit(ind.old_to_new[v]);
            std::optional<Tree> sub;
            if (c < 0) {
                // subtree relabeled to the *induced* world of its own leaves
                sub = subtree_at(t, ~c);
            }
            parts.emplace_back(rel, std::move(sub));
        }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return min_vertex(a.first) < min_vertex(b.first);
    });
    for (auto& [bl, sub] : parts) {
        d.blocks.push_back(bl);
        d.subtrees.push_back(std::move(sub));
    }

    // matched pattern
    auto con = contract(ind.graph, d.blocks);
    std::map<VMask, int> block_ix;
    for (std::size_t i = 0; i < con.blocks.size(); ++i) block_ix[con.blocks[i]] = int(i) + 1;
    {
        std::vector<TreeNode> raw;
        std::function<int(int)> build = [&](int x) -> int {
            int self = int(raw.size());
            raw.push_back({});
            raw[self].letter = t.node(x).letter;
            std::vector<int> ch;
            for (int c : t.node(x).children) {
                if (c < 0 && in_w[~c]) {
                    ch.push_back(~build(~c));
                } else {
                    VMask bl = (c > 0) ? vbit(c) : t.node(~c).leaves;
                    VMask rel = 0;
                    for (int v : mask_vertices(bl)) rel |= vbit(ind.old_to_new[v]);
                    ch.push_back(block_ix.at(rel));
                }
            }
            raw[self].children = ch;
            return self;
        };
        build(occ.root);
        d.matched = Tree::build(con.graph, raw);
    }

    // context: t with the occurrence collapsed to a single block leaf
    if (occ.root == 0) {
        // occurrences rooted at the root have the identity as context
        // (their leaf set is the whole vertex set), signalled by an empty
        // context tree; recompose grafts the boundary subtrees back
        d.context = Tree();
    } else {
        auto cg = contract_tube(g, L);
        std::map<VMask, int> cix;
        for (std::size_t i = 0; i < cg.blocks.size(); ++i) cix[cg.blocks[i]] = int(i) + 1;
        std::vector<TreeNode> raw;
        std::function<int(int)> build = [&](int x) -> int {
            int self = int(raw.size());
            raw.push_back({});
            raw[self].letter = t.node(x).letter;
            std::vector<int> ch;
            for (int c : t.node(x).children) {
                if (c < 0 && ~c == occ.root) {
                    ch.push_back(cix.at(L));
                } else if (c < 0) {
                    ch.push_back(~build(~c));
                } else {
                    ch.push_back(cix.at(vbit(c)));
                }
            }
            raw[self].children = ch;
            return self;
        };
        build(0);
        d.context = Tree::build(cg.graph, raw);
    }
    return d;
}

// rebuild t from a replacement monomial for the matched pattern; returns the
// signed tree (context o (m o boundary subtrees))
inline SignedTree recompose(const Graph& g, const Decomposition& d, const Tree& m,
                            const Alphabet& alpha) {
    auto ind = induced_subgraph(g, d.root_leaves);
    SignedTree innerpart = signed_substitute(ind.graph, d.blocks, m, d.subtrees, alpha);
    if (d.context.weight() == 0) {
        // occurrence was the whole tree: relabel back to g
        auto verts = mask_vertices(d.root_leaves);
        std::vector<int> leafmap(ind.graph.n() + 1, 0);
        for (std::size_t q = 0; q < verts.size(); ++q) leafmap[q + 1] = verts[q];
        std::vector<TreeNode> raw;
        copy_tree_into(raw, innerpart.tree, 0, leafmap);
        return {innerpart.sign, Tree::build(g, raw)};
    }
    auto st = compose(g, d.root_leaves, d.context, innerpart.tree, alpha);
    return {innerpart.sign * st.sign, st.tree};
}

}  // namespace detail

// Replace the matched subtree of t at occ by an element. Homogeneity is
// required; the result is normalized so replacing the subtree by itself
// returns t with coefficient 1.
inline Element replace(const Tree& t, const Occurrence& occ, const Element& repl,
                       const Alphabet& alpha) {
    auto d = detail::decompose_at(t, occ);
    if (repl.zero()) return Element(t.host());
    if (!(repl.host() == d.matched.host()))
        throw std::invalid_argument("replace: replacement host mismatch");
    if (repl.weight() != d.matched.weight())
        throw std::invalid_argument("replace: replacement weight mismatch");
    if (repl.degree(alpha) != monomial_degree(d.matched, alpha))
        throw std::invalid_argument("replace: replacement degree mismatch");

    auto self = detail::recompose(t.host(), d, d.matched, alpha);
    if (!(self.tree == t)) throw std::logic_error("replace: decomposition failed to rebuild");
    Element out(t.host());
    for (const auto& [m, c] : repl.terms()) {
        auto st = detail::recompose(t.host(), d, m, alpha);
        out.add_term(st.tree, c * st.sign * self.sign);  // 1/self.sign == self.sign
    }
    return out;
}

inline std::string to_string(const Tree& t, const Alphabet& alpha) {
    std::function<std::string(int)> rec = [&](int i) -> std::string {
        std::string s = t.node(i).letter >= 0 ? alpha.name(t.node(i).letter) : std::string("*");
        s += "(";
        bool first = true;
        for (int c : t.node(i).children) {
            if (!first) s += ",";
            first = false;
            s += c > 0 ? std::to_string(c) : rec(~c);
        }
        return s + ")";
    };
    return rec(0);
}

inline std::string to_string(const Element& e, const Alphabet& alpha) {
    if (e.zero()) return "0";
    std::string s;
    for (const auto& [t, c] : e.terms()) {
        if (!s.empty()) s += " + ";
        s += rational_string(c) + "*" + to_string(t, alpha);
    }
    return s;
}

}  // namespace gc
