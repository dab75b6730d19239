#pragma once

// Bar complexes of degree-zero contractads presented by a certified Groebner
// basis, syzygy-graded homology ranks over exact rationals, and
// Euler-characteristic bookkeeping for Koszul complexes.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "gc/grobner.hpp"
#include "gc/lattice.hpp"
#include "gc/linalg.hpp"
#include "gc/trees.hpp"

namespace gc {

struct ChainComplex {
    // basis[s] in syzygy degree s; d[s] maps degree s to degree s+1,
    // d[s] has dims[s+1] rows and dims[s] columns
    std::vector<std::vector<std::string>> basis_labels;
    std::vector<Matrix> differentials;

    int degrees() const { return int(basis_labels.size()); }
    int dim(int s) const {
        return (s >= 0 && s < degrees()) ? int(basis_labels[s].size()) : 0;
    }

    bool d_squared_zero() const {
        for (int s = 0; s + 1 < int(differentials.size()); ++s) {
            const Matrix& a = differentials[s];
            const Matrix& b = differentials[s + 1];
            if (a.empty() || b.empty()) continue;
            for (std::size_t j = 0; j < a[0].size(); ++j)
                for (std::size_t i = 0; i < b.size(); ++i) {
                    Rational acc = 0;
                    for (std::size_t k = 0; k < a.size(); ++k) acc += b[i][k] * a[k][j];
                    if (acc != 0) return false;
                }
        }
        return true;
    }
};

// ranks of cohomology per syzygy degree; hard failure when d^2 != 0
inline std::vector<long long> homology_ranks(const ChainComplex& c) {
    if (!c.d_squared_zero())
        throw std::runtime_error("homology_ranks: d^2 != 0 (sign rule broken)");
    std::vector<long long> out(c.degrees(), 0);
    std::vector<int> rk(c.degrees(), 0);
    for (int s = 0; s < int(c.differentials.size()); ++s) rk[s] = rank(c.differentials[s]);
    for (int s = 0; s < c.degrees(); ++s) {
        long long kernel = c.dim(s) - (s < int(c.differentials.size()) ? rk[s] : 0);
        long long image = (s > 0) ? rk[s - 1] : 0;
        out[s] = kernel - image;
    }
    return out;
}

// Bar complex of a degree-zero binary contractad with a certified monomial
// basis: generators in syzygy degree s are admissible trees with every
// vertex bearing >= 2 inputs and decorated by a normal monomial of its input
// graph; the differential merges one internal edge at a time and reduces the
// composed decoration to normal form, with the sign of the edge position.
inline ChainComplex bar_complex(const GrobnerBasis& gb, const Graph& g) {
    for (const auto& l : gb.alphabet.letters)
        if (l.degree != 0)
            throw std::invalid_argument("bar_complex: graded generators unsupported");
    if (g.n() > 6) throw std::invalid_argument("bar_complex: host bound is 6 vertices");

    ChainComplex c;
    if (g.n() == 1) {
        c.basis_labels.push_back({"1"});
        return c;
    }

    // basis element: shape tree + one normal monomial per vertex
    struct BasisElem {
        Tree shape;
        std::vector<Tree> dec;  // per shape vertex (on its input graph)
    };
    int n = g.n();
    int max_deg = n - 2;  // degrees 0..n-2 (binary trees .. corolla)
    std::vector<std::vector<BasisElem>> basis(max_deg + 1);
    std::map<std::pair<std::vector<std::int16_t>, std::string>, int> index;

    auto dec_key = [&](const BasisElem& be) {
        std::string s;
        for (const auto& d : be.dec) {
            for (auto x : d.enc()) s += std::to_string(x) + ",";
            s += ";";
        }
        return std::make_pair(be.shape.enc(), s);
    };

    std::map<std::uint64_t, std::vector<Tree>> normals;  // per input graph
    auto normal_basis = [&](const Graph& h) -> const std::vector<Tree>& {
        auto it = normals.find(h.key());
        if (it != normals.end()) return it->second;
        normals[h.key()] = normal_monomials(gb, h, h.n() - 1);
        return normals[h.key()];
    };

    for (const Tree& shape : stable_trees(g)) {
        int k = shape.weight();
        int s = (n - 1) - k;
        std::vector<const std::vector<Tree>*> cand;
        bool ok = true;
        for (int v = 0; v < k; ++v) {
            cand.push_back(&normal_basis(shape.input_graph(v)));
            if (cand.back()->empty()) ok = false;
        }
        if (!ok) continue;
        std::vector<int> pick(k, 0);
        for (;;) {
            BasisElem be{shape, {}};
            for (int v = 0; v < k; ++v) be.dec.push_back((*cand[v])[pick[v]]);
            index[dec_key(be)] = int(basis[s].size());
            basis[s].push_back(be);
            int i = 0;
            for (; i < k; ++i) {
                if (++pick[i] < int(cand[i]->size())) break;
                pick[i] = 0;
            }
            if (i == k) break;
        }
    }

    c.basis_labels.resize(max_deg + 1);
    for (int s = 0; s <= max_deg; ++s)
        for (const auto& be : basis[s]) {
            std::string lbl = std::to_string(be.shape.weight()) + "v";
            c.basis_labels[s].push_back(lbl);
        }

    c.differentials.resize(max_deg);
    for (int s = 0; s < max_deg; ++s)
        c.differentials[s].assign(basis[s + 1].size(),
                                  std::vector<Rational>(basis[s].size(), 0));

    for (int s = 0; s <= max_deg; ++s) {
        for (std::size_t col = 0; col < basis[s].size(); ++col) {
            const BasisElem& be = basis[s][col];
            const Tree& shape = be.shape;
            for (int e = 1; e < shape.weight(); ++e) {
                auto [merged_shape, position] = shape.contract_edge(e);
                int parent = shape.node(e).parent;
                // compose the two decorations on the merged input graph
                Graph in_merged = [&] {
                    // locate the merged vertex: it has the parent's leaf set
                    for (int v = 0; v < merged_shape.weight(); ++v)
                        if (merged_shape.node(v).leaves == shape.node(parent).leaves &&
                            merged_shape.node(v).children.size() ==
                                shape.node(parent).children.size() +
                                    shape.node(e).children.size() - 1)
                            return merged_shape.input_graph(v);
                    throw std::logic_error("bar_complex: merged vertex not found");
                }();
                // tube of the e-block inside the merged input graph
                auto ind = induced_subgraph(g, shape.node(parent).leaves);
                VMask block_rel = 0;
                for (int v : mask_vertices(shape.node(e).leaves))
                    block_rel |= vbit(ind.old_to_new[v]);
                // blocks of the merged vertex = children of parent with e expanded
                std::vector<VMask> blocks;
                for (int ch : shape.node(parent).children) {
                    if (ch == ~e) {
                        for (int cc : shape.node(e).children) {
                            VMask bl = (cc > 0) ? vbit(cc) : shape.node(~cc).leaves;
                            VMask rel = 0;
                            for (int v : mask_vertices(bl)) rel |= vbit(ind.old_to_new[v]);
                            blocks.push_back(rel);
                        }
                    } else {
                        VMask bl = (ch > 0) ? vbit(ch) : shape.node(~ch).leaves;
                        VMask rel = 0;
                        for (int v : mask_vertices(bl)) rel |= vbit(ind.old_to_new[v]);
                        blocks.push_back(rel);
                    }
                }
                auto con = contract(ind.graph, blocks);
                VMask tube = 0;  // image of the e-blocks in the merged input graph
                for (std::size_t bi = 0; bi < con.blocks.size(); ++bi)
                    if ((con.blocks[bi] & block_rel)) tube |= vbit(int(bi) + 1);
                if (!(con.graph == in_merged))
                    throw std::logic_error("bar_complex: merged input graph mismatch");
                auto st = compose(in_merged, tube, be.dec[parent], be.dec[e], gb.alphabet);
                Element nf = normal_form(Element::monomial(st.tree, st.sign), gb);
                int sign = (position % 2 == 1) ? 1 : -1;
                // assemble the image basis elements
                for (const auto& [mono, coef] : nf.terms()) {
                    BasisElem im{merged_shape, {}};
                    // decorations of merged_shape: map each vertex
                    for (int v = 0; v < merged_shape.weight(); ++v) {
                        VMask lv = merged_shape.node(v).leaves;
                        int src = -1;
                        for (int u = 0; u < shape.weight(); ++u)
                            if (u != e && u != parent && shape.node(u).leaves == lv &&
                                merged_shape.node(v).children.size() ==
                                    shape.node(u).children.size())
                                src = u;
                        if (lv == shape.node(parent).leaves &&
                            merged_shape.node(v).children.size() ==
                                shape.node(parent).children.size() +
                                    shape.node(e).children.size() - 1) {
                            im.dec.push_back(mono);
                        } else if (src >= 0) {
                            im.dec.push_back(be.dec[src]);
                        } else {
                            throw std::logic_error("bar_complex: vertex match failed");
                        }
                    }
                    int row = index.at(dec_key(im));
                    c.differentials[s][row][col] += coef * sign;
                }
            }
        }
    }
    return c;
}

// Euler characteristic of the twisted product Q o P at g, graded by the
// weight of the dual factor: sum over partitions I of
// (-1)^{|I|-1} dim Q(g/I) * prod_G dim P(g|_G). No differential is built.
inline long long koszul_euler(const std::function<long long(const Graph&)>& dim_dual,
                              const std::function<long long(const Graph&)>& dim_primal,
                              const Graph& g) {
    long long chi = 0;
    for (const auto& part : enumerate_partitions(g)) {
        long long term = dim_dual(contract(g, part.blocks).graph);
        for (VMask b : part.blocks) term *= dim_primal(induced_subgraph(g, b).graph);
        chi += (part.size() % 2 == 1) ? term : -term;
    }
    return chi;
}

}  // namespace gc
