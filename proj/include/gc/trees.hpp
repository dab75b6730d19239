#pragma once

// Gamma-admissible rooted trees in canonical planar form. Children of every
// vertex are kept sorted by minimal leaf label, and nodes are stored in DFS
// preorder, so structural equality is equality of trees. Each node carries a
// decoration slot (an alphabet letter index, or -1 when undecorated).

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gc/graph.hpp"

namespace gc {

struct TreeNode {
    int letter = -1;   // decoration slot; -1 = undecorated
    VMask leaves = 0;  // leaf set of the subtree at this node
    int parent = -1;   // -1 for the root
    // children in canonical order: >0 leaf label, <0 = ~(node index)
    std::vector<int> children;
};

class Tree {
public:
    Tree() = default;

    // Build from a raw node list (node 0 = root); sorts children by minimal
    // leaf and renumbers nodes in DFS preorder. dfs_positions, when non-null,
    // receives old-node-index -> new DFS index (unreachable nodes get -1).
    static Tree build(const Graph& host, std::vector<TreeNode> nodes,
                      std::vector<int>* dfs_positions = nullptr) {
        Tree t;
        t.host_ = host;
        if (nodes.empty()) throw std::invalid_argument("tree: no nodes");
        std::function<VMask(int)> fill = [&](int i) -> VMask {
            VMask m = 0;
            for (int c : nodes[i].children)
                m |= (c > 0) ? vbit(c) : fill(~c);
            nodes[i].leaves = m;
            return m;
        };
        fill(0);
        if (nodes[0].leaves != host.vertices())
            throw std::invalid_argument("tree: leaves do not cover the vertex set");
        std::vector<int> pos(nodes.size(), -1);
        std::function<int(int, int)> emit = [&](int i, int parent) -> int {
            int self = int(t.nodes_.size());
            pos[i] = self;
            TreeNode nd;
            nd.letter = nodes[i].letter;
            nd.leaves = nodes[i].leaves;
            nd.parent = parent;
            t.nodes_.push_back(nd);
            auto ch = nodes[i].children;
            std::sort(ch.begin(), ch.end(), [&](int a, int b) {
                VMask la = (a > 0) ? vbit(a) : nodes[~a].leaves;
                VMask lb = (b > 0) ? vbit(b) : nodes[~b].leaves;
                return min_vertex(la) < min_vertex(lb);
            });
            std::vector<int> out_ch;
            for (int c : ch)
                out_ch.push_back(c > 0 ? c : ~emit(~c, self));
            t.nodes_[self].children = out_ch;
            return self;
        };
        emit(0, -1);
        if (dfs_positions) *dfs_positions = pos;
        t.check_leaves_unique();
        return t;
    }

    static Tree corolla(const Graph& host, int letter = -1) {
        TreeNode root;
        root.letter = letter;
        for (int v = 1; v <= host.n(); ++v) root.children.push_back(v);
        return build(host, {root});
    }

    const Graph& host() const { return host_; }
    int weight() const { return int(nodes_.size()); }
    const TreeNode& node(int i) const { return nodes_[i]; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }

    bool operator==(const Tree& o) const { return host_ == o.host_ && enc() == o.enc(); }
    bool operator!=(const Tree& o) const { return !(*this == o); }
    bool operator<(const Tree& o) const {
        if (!(host_ == o.host_)) return host_ < o.host_;
        return enc() < o.enc();
    }

    // structural encoding (preorder), used as map key
    const std::vector<std::int16_t>& enc() const {
        if (enc_.empty()) {
            for (const auto& nd : nodes_) {
                enc_.push_back(std::int16_t(nd.letter));
                enc_.push_back(std::int16_t(nd.children.size()));
                for (int c : nd.children) enc_.push_back(std::int16_t(c > 0 ? c : 0));
            }
        }
        return enc_;
    }

    bool admissible() const {
        for (const auto& nd : nodes_)
            if (!host_.is_tube(nd.leaves)) return false;
        return true;
    }

    bool stable() const {
        for (const auto& nd : nodes_)
            if (nd.children.size() < 2) return false;
        return true;
    }

    // the input graph In(v): (host|_{L_v}) / {children leaf sets}
    Graph input_graph(int v) const {
        auto ind = induced_subgraph(host_, nodes_[v].leaves);
        std::vector<VMask> blocks;
        for (int c : nodes_[v].children) {
            VMask bl = (c > 0) ? vbit(c) : nodes_[~c].leaves;
            VMask rel = 0;
            for (int w : mask_vertices(bl)) rel |= vbit(ind.old_to_new[w]);
            blocks.push_back(rel);
        }
        return contract(ind.graph, blocks).graph;
    }

    // internal edges are (node, parent) pairs for non-root nodes; ordered by
    // "e before e' iff the vertex word of L_e is lexicographically larger"
    std::vector<int> internal_edges_in_order() const {
        std::vector<int> es;
        for (int i = 1; i < weight(); ++i) es.push_back(i);
        std::sort(es.begin(), es.end(), [&](int a, int b) {
            return mask_vertices(nodes_[a].leaves) > mask_vertices(nodes_[b].leaves);
        });
        return es;
    }

    // merge node e into its parent; returns the new tree and the 1-based
    // position of e in the edge order above (for differential signs)
    std::pair<Tree, int> contract_edge(int e) const {
        if (e <= 0 || e >= weight())
            throw std::invalid_argument("contract_edge: not an internal edge");
        auto order = internal_edges_in_order();
        int position = 1 + int(std::find(order.begin(), order.end(), e) - order.begin());
        std::vector<TreeNode> raw(nodes_.begin(), nodes_.end());
        int p = raw[e].parent;
        std::vector<int> ch;
        for (int c : raw[p].children) {
            if (c == ~e)
                for (int cc : raw[e].children) ch.push_back(cc);
            else
                ch.push_back(c);
        }
        raw[p].children = ch;
        raw[e].children.clear();  // orphaned; build() never visits it
        return {build(host_, raw), position};
    }

    // S(T) = {L_e : e internal edge}
    std::vector<VMask> nested_set() const {
        if (!stable()) throw std::invalid_argument("nested_set: tree is not stable");
        std::vector<VMask> out;
        for (int i = 1; i < weight(); ++i) out.push_back(nodes_[i].leaves);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void check_leaves_unique() const {
        VMask seen = 0;
        for (const auto& nd : nodes_)
            for (int c : nd.children)
                if (c > 0) {
                    if (seen & vbit(c))
                        throw std::invalid_argument("tree: duplicate leaf label");
                    seen |= vbit(c);
                }
    }

    Graph host_;
    std::vector<TreeNode> nodes_;
    mutable std::vector<std::int16_t> enc_;
};

// ---- planar form -------------------------------------------------------

struct PlanarForm {
    // one word per leaf (leaves in increasing label order); entries are the
    // decoration slots along the root-to-leaf path
    std::vector<std::vector<int>> path_sequence;
    std::vector<int> leaf_permutation;  // leaf labels left to right
    bool operator==(const PlanarForm&) const = default;
};

inline PlanarForm canonical_planar(const Tree& t) {
    PlanarForm pf;
    pf.path_sequence.assign(t.host().n(), {});
    std::vector<int> path;
    std::function<void(int)> walk = [&](int i) {
        path.push_back(t.node(i).letter);
        for (int c : t.node(i).children) {
            if (c > 0) {
                pf.path_sequence[c - 1] = path;
                pf.leaf_permutation.push_back(c);
            } else {
                walk(~c);
            }
        }
        path.pop_back();
    };
    walk(0);
    return pf;
}

// ---- substitution (the admissible-tree monad) ---------------------------

// Copy src (relabeling leaves through leafmap) into raw; returns root index.
// Children lists are assembled locally so recursion cannot invalidate them.
inline int copy_tree_into(std::vector<TreeNode>& raw, const Tree& src, int i,
                          const std::vector<int>& leafmap) {
    int self = int(raw.size());
    raw.push_back({});
    raw[self].letter = src.node(i).letter;
    std::vector<int> ch;
    for (int c : src.node(i).children)
        ch.push_back(c > 0 ? leafmap[c] : ~copy_tree_into(raw, src, ~c, leafmap));
    raw[self].children = ch;
    return self;
}

// Graft trees on induced subgraphs into the leaves of a tree on g/I.
// outer lives on contract(g, blocks).graph; inners[i] lives on the induced
// subgraph of the i-th block in min-vertex order.
inline Tree substitute(const Graph& g, const std::vector<VMask>& blocks_in,
                       const Tree& outer, const std::vector<Tree>& inners) {
    auto con = contract(g, blocks_in);
    if (!(outer.host() == con.graph))
        throw std::invalid_argument("substitute: outer host mismatch");
    if (inners.size() != con.blocks.size())
        throw std::invalid_argument("substitute: inner count mismatch");
    for (std::size_t i = 0; i < inners.size(); ++i)
        if (!(inners[i].host() == induced_subgraph(g, con.blocks[i]).graph))
            throw std::invalid_argument("substitute: inner host mismatch");

    std::vector<TreeNode> raw;
    std::function<int(int)> copy_outer = [&](int i) -> int {
        int self = int(raw.size());
        raw.push_back({});
        raw[self].letter = outer.node(i).letter;
        std::vector<int> ch;
        for (int c : outer.node(i).children) {
            if (c < 0) {
                ch.push_back(~copy_outer(~c));
            } else {
                VMask bl = con.blocks[c - 1];
                auto verts = mask_vertices(bl);
                if (verts.size() == 1) {
                    ch.push_back(verts[0]);
                } else {
                    std::vector<int> leafmap(inners[c - 1].host().n() + 1, 0);
                    for (std::size_t q = 0; q < verts.size(); ++q) leafmap[q + 1] = verts[q];
                    ch.push_back(~copy_tree_into(raw, inners[c - 1], 0, leafmap));
                }
            }
        }
        raw[self].children = ch;
        return self;
    };
    copy_outer(0);
    return Tree::build(g, raw);
}

// ---- enumeration ---------------------------------------------------------

struct TreeFilter {
    int min_inputs = 2;        // every internal vertex has >= 2 inputs
    int max_weight = 1 << 20;  // cap on vertex count of the tree
    bool binary_only = false;
};

// all admissible trees on g matching the filter (undecorated). Vertices
// always have >= 2 inputs: components of free contractads on generators with
// hosts of >= 2 vertices never produce unary vertices.
inline std::vector<Tree> enumerate_admissible_trees(const Graph& g, const TreeFilter& f) {
    if (g.n() > kMaxVertices)
        throw std::runtime_error("enumerate_admissible_trees: bound exceeded");
    if (f.min_inputs < 2)
        throw std::invalid_argument("enumerate_admissible_trees: min_inputs must be >= 2");

    struct Frag {
        std::vector<TreeNode> nodes;  // local node list, root at 0
        int weight;
    };
    std::map<VMask, std::vector<Frag>> memo;
    std::function<const std::vector<Frag>&(VMask)> gen =
        [&](VMask s) -> const std::vector<Frag>& {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        std::vector<Frag> out;
        if (popcount(s) >= 2) {
            // enumerate partitions of s into >= 2 tube blocks
            std::vector<VMask> acc;
            std::function<void(VMask)> parts = [&](VMask rest) {
                if (!rest) {
                    int k = int(acc.size());
                    if (k < 2 || k < f.min_inputs) return;
                    if (f.binary_only && k != 2) return;
                    std::vector<VMask> big;
                    for (VMask b : acc)
                        if (popcount(b) > 1) big.push_back(b);
                    std::vector<int> pick(big.size(), 0);
                    for (;;) {
                        bool valid = true;
                        for (std::size_t i = 0; i < big.size(); ++i)
                            if (gen(big[i]).empty()) { valid = false; break; }
                        if (!valid) break;
                        std::vector<TreeNode> nodes(1);
                        int w = 1;
                        std::size_t gi = 0;
                        for (VMask b : acc) {
                            if (popcount(b) == 1) {
                                nodes[0].children.push_back(min_vertex(b));
                            } else {
                                const Frag& fr = gen(b)[pick[gi]];
                                int off = int(nodes.size());
                                for (const auto& nd : fr.nodes) {
                                    TreeNode copy = nd;
                                    for (auto& c : copy.children)
                                        if (c < 0) c = ~(~c + off);
                                    nodes.push_back(copy);
                                }
                                nodes[0].children.push_back(~off);
                                w += fr.weight;
                                ++gi;
                            }
                        }
                        if (w <= f.max_weight) out.push_back({std::move(nodes), w});
                        std::size_t i = 0;
                        for (; i < big.size(); ++i) {
                            if (++pick[i] < int(gen(big[i]).size())) break;
                            pick[i] = 0;
                        }
                        if (big.empty() || i == big.size()) break;
                    }
                    return;
                }
                int v = min_vertex(rest);
                for (VMask b = rest; b; b = VMask((b - 1) & rest)) {
                    if (!(b & vbit(v))) continue;
                    if (popcount(b) > 1 && !g.connected_subset(b)) continue;
                    acc.push_back(b);
                    parts(VMask(rest & ~b));
                    acc.pop_back();
                }
            };
            parts(s);
        }
        memo[s] = std::move(out);
        return memo[s];
    };

    std::vector<Tree> trees;
    if (g.n() == 1) return trees;  // single vertex: no internal vertices
    for (const auto& fr : gen(g.vertices()))
        trees.push_back(Tree::build(g, fr.nodes));
    std::sort(trees.begin(), trees.end());
    return trees;
}

inline std::vector<Tree> stable_trees(const Graph& g) {
    return enumerate_admissible_trees(g, TreeFilter{});
}

// nested subsets of proper nontrivial tubes (pairwise comparable or
// disjoint), counting the empty family; independent route to stable trees
inline long long count_nested_families(const Graph& g) {
    std::vector<VMask> tubes;
    for (VMask t : enumerate_tubes(g))
        if (popcount(t) > 1 && t != g.vertices()) tubes.push_back(t);
    long long count = 0;
    std::vector<VMask> acc;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == tubes.size()) {
            ++count;
            return;
        }
        rec(i + 1);
        VMask t = tubes[i];
        for (VMask s : acc) {
            VMask both = VMask(s & t);
            if (both != 0 && both != s && both != t) return;  // crossing pair
        }
        acc.push_back(t);
        rec(i + 1);
        acc.pop_back();
    };
    rec(0);
    return count;
}

}  // namespace gc
