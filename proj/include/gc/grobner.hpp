#pragma once

// Groebner machinery for shuffle contractads: normal forms, S-polynomials,
// truncated Buchberger completion with explicit completeness certificates,
// normal-monomial bases, the weight-3 PBW criterion, and Koszul-dual
// presentations via the exact weight-2 pairing.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gc/algebra.hpp"
#include "gc/lattice.hpp"
#include "gc/linalg.hpp"
#include "gc/orders.hpp"
#include "gc/presentation.hpp"

namespace gc {

struct GBElement {
    Element element;  // monic
    Tree lt;
};

class GrobnerBasis {
public:
    MonomialOrder order;
    Alphabet alphabet;
    std::map<std::uint64_t, std::vector<GBElement>> elements;
    std::map<std::uint64_t, Graph> components;
    // completion certificate: per host, all S-pairs with common multiples on
    // the host (and, by construction, on all of its minors) up to this
    // weight reduce to zero
    std::map<std::uint64_t, int> certified_weight;
    // set when the PBW criterion certifies a quadratic basis for every
    // component (then any desk-scale query is certified)
    bool quadratic_certified = false;
    int min_lt_weight = 1 << 20, max_lt_weight = 0;

    bool certified(const Graph& g, int w) const {
        if (quadratic_certified) return true;
        auto it = certified_weight.find(g.key());
        return it != certified_weight.end() && w <= it->second;
    }
    void insert(const Element& e_in) {
        Element e = e_in;
        auto [lt, c] = leading_term(e, order);
        e *= Rational(1) / c;
        components.emplace(e.host().key(), e.host());
        elements[e.host().key()].push_back({e, lt});
        lt_index_[e.host().key()][lt] = int(elements[e.host().key()].size()) - 1;
        min_lt_weight = std::min(min_lt_weight, lt.weight());
        max_lt_weight = std::max(max_lt_weight, lt.weight());
    }
    const std::vector<GBElement>* on(const Graph& g) const {
        auto it = elements.find(g.key());
        return it == elements.end() ? nullptr : &it->second;
    }
    // the basis element whose leading term matches the pattern, if any
    const GBElement* by_lt(const Tree& pattern) const {
        auto it = lt_index_.find(pattern.host().key());
        if (it == lt_index_.end()) return nullptr;
        auto jt = it->second.find(pattern);
        if (jt == it->second.end()) return nullptr;
        return &elements.at(pattern.host().key())[jt->second];
    }

private:
    std::map<std::uint64_t, std::map<Tree, int>> lt_index_;
};

// first divisor occurrence of any basis leading term inside t (deterministic)
inline std::optional<std::pair<Occurrence, const GBElement*>> find_divisor(
    const Tree& t, const GrobnerBasis& gb) {
    if (gb.max_lt_weight == 0) return std::nullopt;
    for (auto& ex : extract_all(t, gb.min_lt_weight, std::min(gb.max_lt_weight, t.weight())))
        if (const GBElement* ge = gb.by_lt(ex.pattern))
            return std::make_pair(ex.occ, ge);
    return std::nullopt;
}

inline bool is_normal(const Tree& t, const GrobnerBasis& gb) {
    return !find_divisor(t, gb).has_value();
}

// all ordered minors (contractions of induced subgraphs) of the targets,
// including the targets themselves; the region a completion must cover
inline std::vector<Graph> minor_closure(const std::vector<Graph>& targets) {
    std::map<std::uint64_t, Graph> seen;
    for (const Graph& g : targets) {
        for (VMask tube : enumerate_tubes(g)) {
            if (popcount(tube) < 2) continue;
            auto ind = induced_subgraph(g, tube);
            for (const auto& part : enumerate_partitions(ind.graph)) {
                Graph h = contract(ind.graph, part.blocks).graph;
                if (h.n() >= 2) seen.emplace(h.key(), h);
            }
        }
    }
    std::vector<Graph> out;
    for (auto& [k, g] : seen) out.push_back(g);
    return out;
}

// full normal form; requires a completeness certificate for the component
inline Element normal_form(const Element& x, const GrobnerBasis& gb,
                           bool check_certificate = true) {
    if (x.zero()) return x;
    if (check_certificate && !gb.certified(x.host(), x.weight()))
        throw std::runtime_error("normal_form: no completeness certificate for this component");
    Element work = x;
    Element out(x.host());
    while (!work.zero()) {
        // largest reducible term; if none, everything left is normal
        std::vector<std::pair<Tree, Rational>> terms(work.terms().begin(), work.terms().end());
        std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
            return compare(gb.order, a.first, b.first) > 0;
        });
        bool reduced = false;
        for (const auto& [t, c] : terms) {
            auto hit = find_divisor(t, gb);
            if (!hit) continue;
            Element expansion = replace(t, hit->first, hit->second->element, gb.alphabet);
            work -= c * expansion;
            reduced = true;
            break;
        }
        if (!reduced) {
            out += work;
            break;
        }
    }
    return out;
}

// S-polynomials of two monic elements over a set of candidate host graphs:
// for every common multiple (a monomial carrying occurrences of both leading
// terms that overlap and jointly cover it), the difference of the liftings.
inline std::vector<Element> s_polynomials(const Element& f, const Element& g,
                                          const MonomialOrder& order, const Alphabet& alpha,
                                          const std::vector<Graph>& hosts) {
    auto [ltf, cf] = leading_term(f, order);
    auto [ltg, cg] = leading_term(g, order);
    if (cf != 1 || cg != 1) throw std::invalid_argument("s_polynomials: elements must be monic");
    std::vector<Element> out;
    for (const Graph& h : hosts) {
        int w = ltf.weight() + ltg.weight() - 1;
        for (int weight = std::max(ltf.weight(), ltg.weight()); weight <= w; ++weight) {
            for (const Tree& t : enumerate_monomials(alpha, h, weight)) {
                auto of = occurrences(t, ltf);
                auto og = occurrences(t, ltg);
                for (const auto& a : of)
                    for (const auto& b : og) {
                        if (f == g && a.nodes == b.nodes) continue;
                        // overlap and joint cover
                        std::vector<int> uni;
                        std::set_union(a.nodes.begin(), a.nodes.end(), b.nodes.begin(),
                                       b.nodes.end(), std::back_inserter(uni));
                        std::vector<int> inter;
                        std::set_intersection(a.nodes.begin(), a.nodes.end(), b.nodes.begin(),
                                              b.nodes.end(), std::back_inserter(inter));
                        if (int(uni.size()) != t.weight() || inter.empty()) continue;
                        Element s = replace(t, a, f, alpha) - replace(t, b, g, alpha);
                        out.push_back(s);
                    }
            }
        }
    }
    return out;
}

// s_polynomials over all ordered connected hosts large enough for the
// common multiples (binary alphabets: weight w lives on w+1 vertices)
inline std::vector<Element> s_polynomials(const Element& f, const Element& g,
                                          const MonomialOrder& order, const Alphabet& alpha) {
    int w = f.weight() + g.weight() - 1;
    std::vector<Graph> hosts;
    for (int n = 3; n <= w + 1 && n <= kMaxVertices; ++n)
        for (const Graph& h : all_connected_graphs(n)) hosts.push_back(h);
    return s_polynomials(f, g, order, alpha, hosts);
}

struct BuchbergerBound {
    int vertices = 4;
    int weight = 3;
};

// Truncated Buchberger completion over the minor closure of the target
// hosts. Processes, in increasing weight, every common multiple on every
// closure component; any S-polynomial with a nonzero normal form joins the
// basis. Certificates record the covered region per component.
inline GrobnerBasis buchberger(const Presentation& shuffle_p, const MonomialOrder& order,
                               const std::vector<Graph>& targets, int max_weight,
                               std::function<void(const std::string&)> progress = nullptr) {
    if (max_weight > 7) throw std::invalid_argument("buchberger: weight bound is 7");
    GrobnerBasis gb;
    gb.order = order;
    gb.alphabet = shuffle_p.alphabet;
    for (const auto& [key, rels] : shuffle_p.relations) {
        for (const Element& r : rels) {
            Element nf = normal_form(r, gb, false);
            if (!nf.zero()) gb.insert(nf);
        }
    }
    auto closure = minor_closure(targets);
    std::sort(closure.begin(), closure.end());
    bool binary = shuffle_p.alphabet.all_binary();
    for (int w = 3; w <= max_weight; ++w) {
        for (const Graph& h : closure) {
            if (h.n() > kMaxVertices) throw std::invalid_argument("buchberger: host too large");
            if (binary && h.n() != w + 1) continue;
            if (progress)
                progress("weight " + std::to_string(w) + " host n=" + std::to_string(h.n()));
            for (const Tree& t : enumerate_monomials(shuffle_p.alphabet, h, w)) {
                struct Hit {
                    std::uint64_t key;
                    int idx;
                    Occurrence occ;
                };
                std::vector<Hit> hits;
                for (auto& ex : extract_all(t, 2, w)) {
                    auto it = gb.elements.find(ex.pattern.host().key());
                    if (it == gb.elements.end()) continue;
                    for (int e = 0; e < int(it->second.size()); ++e)
                        if (it->second[e].lt == ex.pattern)
                            hits.push_back({ex.pattern.host().key(), e, ex.occ});
                }
                auto elem_of = [&](const Hit& h2) -> const GBElement& {
                    return gb.elements.at(h2.key)[h2.idx];
                };
                for (std::size_t i = 0; i < hits.size(); ++i)
                    for (std::size_t j = i + 1; j < hits.size(); ++j) {
                        const auto a = hits[i];
                        const auto b = hits[j];
                        std::vector<int> uni;
                        std::set_union(a.occ.nodes.begin(), a.occ.nodes.end(),
                                       b.occ.nodes.begin(), b.occ.nodes.end(),
                                       std::back_inserter(uni));
                        std::vector<int> inter;
                        std::set_intersection(a.occ.nodes.begin(), a.occ.nodes.end(),
                                              b.occ.nodes.begin(), b.occ.nodes.end(),
                                              std::back_inserter(inter));
                        if (int(uni.size()) != t.weight() || inter.empty()) continue;
                        Element s = replace(t, a.occ, elem_of(a).element, gb.alphabet) -
                                    replace(t, b.occ, elem_of(b).element, gb.alphabet);
                        Element nf = normal_form(s, gb, false);
                        if (!nf.zero()) {
                            gb.insert(nf);
                            std::uint64_t k2 = nf.host().key();
                            int e2 = int(gb.elements[k2].size()) - 1;
                            for (const auto& occ : occurrences(t, gb.elements[k2][e2].lt))
                                hits.push_back({k2, e2, occ});
                        }
                    }
            }
        }
    }
    for (const Graph& h : closure) gb.certified_weight[h.key()] = max_weight;
    if (shuffle_p.quadratic()) {
        bool covers_pbw = true;  // the PBW region: all 4-vertex components
        for (const Graph& g : all_connected_graphs(4))
            if (!gb.certified(g, 3)) covers_pbw = false;
        bool extra = false;
        for (const auto& [key, elems] : gb.elements)
            for (const auto& ge : elems)
                if (ge.element.weight() > 2) extra = true;
        // quadratic relations whose S-polynomials all reduce to zero on all
        // 4-vertex components form a Groebner basis everywhere (PBW)
        if (covers_pbw && !extra) gb.quadratic_certified = true;
    }
    return gb;
}

inline GrobnerBasis buchberger(const Presentation& shuffle_p, const MonomialOrder& order,
                               BuchbergerBound bound = {},
                               std::function<void(const std::string&)> progress = nullptr) {
    std::vector<Graph> targets;
    for (int n = 2; n <= bound.vertices; ++n)
        for (const Graph& g : all_connected_graphs(n)) targets.push_back(g);
    return buchberger(shuffle_p, order, targets, bound.weight, std::move(progress));
}

// all normal monomials of a given weight on a component
inline std::vector<Tree> normal_monomials(const GrobnerBasis& gb, const Graph& g, int w) {
    if (!gb.certified(g, w))
        throw std::runtime_error("normal_monomials: no completeness certificate for (" +
                                 std::to_string(g.n()) + " vertices, weight " +
                                 std::to_string(w) + ")");
    std::vector<Tree> out;
    for (const Tree& t : enumerate_monomials(gb.alphabet, g, w))
        if (is_normal(t, gb)) out.push_back(t);
    return out;
}

// component dimension of a binary-generated quotient: normal monomials at
// weight n-1 (the unit component is one-dimensional)
inline long long dimension(const GrobnerBasis& gb, const Graph& g) {
    if (g.n() == 1) return 1;
    return (long long)normal_monomials(gb, g, g.n() - 1).size();
}

// dim of the weight-3 part of the presented contractad on a 4-vertex host:
// free weight-3 dimension minus the rank of all relation liftings
inline long long weight3_dimension(const Presentation& shuffle_p, const Graph& g) {
    const Alphabet& a = shuffle_p.alphabet;
    if (!a.all_binary()) throw std::invalid_argument("weight3_dimension: binary generators only");
    auto basis = enumerate_monomials(a, g, 3);
    std::map<Tree, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);
    Matrix rows;
    auto push = [&](const Element& e) {
        std::vector<Rational> row(basis.size(), 0);
        for (const auto& [t, c] : e.terms()) row[index.at(t)] = c;
        rows.push_back(row);
    };
    for (VMask G : enumerate_tubes(g)) {
        int sz = popcount(G);
        if (sz == 2) {
            // relation outside, generator inside
            Graph outer_host = contract_tube(g, G).graph;
            const auto* rels = shuffle_p.relations_on(outer_host);
            if (!rels) continue;
            Graph inner_host = induced_subgraph(g, G).graph;
            for (int l = 0; l < int(a.letters.size()); ++l) {
                if (!(a.letters[l].host == inner_host)) continue;
                Element x = Element::monomial(Tree::corolla(inner_host, l));
                for (const Element& r : *rels) push(compose(g, G, r, x, a));
            }
        } else if (sz == 3) {
            // generator outside, relation inside
            Graph inner_host = induced_subgraph(g, G).graph;
            const auto* rels = shuffle_p.relations_on(inner_host);
            if (!rels) continue;
            Graph outer_host = contract_tube(g, G).graph;
            for (int l = 0; l < int(a.letters.size()); ++l) {
                if (!(a.letters[l].host == outer_host)) continue;
                Element x = Element::monomial(Tree::corolla(outer_host, l));
                for (const Element& r : *rels) push(compose(g, G, x, r, a));
            }
        }
    }
    return (long long)basis.size() - rank(rows);
}

struct PbwReport {
    bool pass = false;
    struct Row {
        Graph host;
        long long normal_count = 0;
        long long true_dimension = 0;
    };
    std::vector<Row> rows;
};

// PBW criterion for binary quadratic presentations: on each of the 38
// ordered connected 4-vertex graphs, compare the count of weight-3 normal
// monomials (w.r.t. the quadratic relations' leading terms) with the true
// weight-3 dimension; equality everywhere certifies a quadratic basis.
inline PbwReport pbw_check(const Presentation& shuffle_p, const MonomialOrder& order) {
    if (!shuffle_p.quadratic()) throw std::invalid_argument("pbw_check: presentation not quadratic");
    GrobnerBasis quad;
    quad.order = order;
    quad.alphabet = shuffle_p.alphabet;
    for (const auto& [key, rels] : shuffle_p.relations)
        for (const Element& r : rels) {
            Element nf = normal_form(r, quad, false);
            if (!nf.zero()) quad.insert(nf);
        }
    PbwReport rep;
    rep.pass = true;
    for (const Graph& g : all_connected_graphs(4)) {
        long long cnt = 0;
        for (const Tree& t : enumerate_monomials(shuffle_p.alphabet, g, 3))
            if (is_normal(t, quad)) ++cnt;
        long long dim = weight3_dimension(shuffle_p, g);
        rep.rows.push_back({g, cnt, dim});
        if (cnt != dim) rep.pass = false;
    }
    return rep;
}

// Basis completed for dimension queries on the given hosts: closure of the
// targets, S-pairs through the weight needed for the largest target
inline GrobnerBasis complete_for(const Presentation& shuffle_p, const MonomialOrder& order,
                                 const std::vector<Graph>& targets,
                                 std::function<void(const std::string&)> progress = nullptr) {
    int w = 2;
    for (const Graph& g : targets) w = std::max(w, g.n() - 1);
    return buchberger(shuffle_p, order, targets, w, std::move(progress));
}

// ---- Koszul duality -------------------------------------------------------

// Pairing sign of a weight-2 monomial a o_G b against its dual, from the
// desuspension: (-1)^{(|G|-1)(pos(G)-1)} times the parity of the unshuffle
// listing the blocks' vertices in block order, times a graded factor for an
// odd outer letter. This choice sends the commutative preset's relations
// exactly to the Lie preset's relations.
inline int dual_pairing_sign(const Tree& t, const Alphabet& alpha) {
    if (t.weight() != 2) throw std::invalid_argument("dual_pairing_sign: weight-2 only");
    // root = outer letter a; the unique internal child spans the tube G
    int p = 0;  // 1-based block position of G among root children
    VMask G = 0;
    const auto& ch = t.node(0).children;
    for (std::size_t i = 0; i < ch.size(); ++i)
        if (ch[i] < 0) {
            p = int(i) + 1;
            G = t.node(~ch[i]).leaves;
        }
    int j = popcount(G);
    int sign = ((j - 1) * (p - 1)) % 2 ? -1 : 1;
    // unshuffle: list blocks in order, each block's vertices increasing
    std::vector<int> seq;
    for (int c : ch) {
        VMask bl = (c > 0) ? vbit(c) : G;
        for (int v : mask_vertices(bl)) seq.push_back(v);
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t k = i + 1; k < seq.size(); ++k)
            if (seq[i] > seq[k]) sign = -sign;
    int deg_a = alpha.degree(t.node(0).letter);
    if ((deg_a * (j - 1)) % 2) sign = -sign;
    return sign;
}

// Koszul dual presentation: dual generators (degree negated, symmetry
// twisted by the sign character) with relations the exact annihilator of R
// under the weight-2 pairing.
inline Presentation koszul_dual(const Presentation& shuffle_p) {
    if (!shuffle_p.quadratic()) throw std::invalid_argument("koszul_dual: presentation not quadratic");
    const Alphabet& a = shuffle_p.alphabet;
    if (!a.all_binary()) throw std::invalid_argument("koszul_dual: binary generators only");
    Presentation dual;
    dual.name = shuffle_p.name + "!";
    dual.alphabet.letters.resize(a.letters.size());
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        const Letter& l = a.letters[i];
        Letter d;
        d.name = l.name + "!";
        d.degree = -l.degree;
        d.host = l.host;
        d.flip_to = l.flip_to;
        d.flip_sign = -l.flip_sign;
        dual.alphabet.letters[i] = d;
    }
    auto dual_tree = [&](const Tree& t) {
        std::vector<TreeNode> raw(t.nodes().begin(), t.nodes().end());
        return Tree::build(t.host(), raw);  // letters index identically
    };
    for (const Graph& h : all_connected_graphs(3)) {
        auto basis = enumerate_monomials(a, h, 2);
        if (basis.empty()) continue;
        std::map<Tree, int> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);
        Matrix rows;
        const auto* rels = shuffle_p.relations_on(h);
        if (rels)
            for (const Element& r : *rels) {
                std::vector<Rational> row(basis.size(), 0);
                for (const auto& [t, c] : r.terms())
                    row[index.at(t)] = c * dual_pairing_sign(t, a);
                rows.push_back(row);
            }
        if (rows.empty()) rows.push_back(std::vector<Rational>(basis.size(), 0));
        for (const auto& v : nullspace(rows)) {
            Element r(h);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (v[i] != 0) r.add_term(dual_tree(basis[i]), v[i]);
            if (!r.zero()) dual.add_relation(h, r);
        }
    }
    return dual;
}

}  // namespace gc
