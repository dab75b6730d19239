#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gc/algebra.hpp"
#include "gc/json_io.hpp"
#include "gc/presets.hpp"

using namespace gc;

namespace {

Tree mono2(const Graph& h, VMask G, int outer, int inner, const Alphabet& a, int* sign = nullptr) {
    auto st = compose(h, G,
                      Tree::corolla(contract_tube(h, G).graph, outer),
                      Tree::corolla(induced_subgraph(h, G).graph, inner), a);
    if (sign) *sign = st.sign;
    return st.tree;
}

}  // namespace

TEST_CASE("composition basics") {
    Alphabet a;
    int m = a.add_character("m", 0, +1);
    Graph p3 = path_graph(3);
    int sign = 0;
    Tree t = mono2(p3, 0b011, m, m, a, &sign);
    CHECK(sign == 1);
    CHECK(to_string(t, a) == "m(m(1,2),3)");
    CHECK(monomial_degree(t, a) == 0);
    CHECK(t.weight() == 2);
    validate_monomial(t, a);
    CHECK_THROWS(compose(p3, VMask(vbit(2)), t, t, a));  // tube too small
}

TEST_CASE("monomial enumeration") {
    Alphabet a;
    int m = a.add_character("m", 0, +1);
    (void)m;
    CHECK(enumerate_monomials(a, path_graph(3), 2).size() == 2);
    CHECK(enumerate_monomials(a, complete_graph(3), 2).size() == 3);
    Alphabet two;
    two.add_character("m", 0, +1);
    two.add_character("b", 0, -1);
    CHECK(enumerate_monomials(two, path_graph(2), 1).size() == 2);
    CHECK(enumerate_monomials(two, path_graph(3), 2).size() == 8);
}

TEST_CASE("occurrences") {
    Alphabet a;
    int m = a.add_character("m", 0, +1);
    Graph p3 = path_graph(3);
    Tree comb = mono2(p3, 0b011, m, m, a);
    CHECK(occurrences(comb, comb).size() == 1);
    Tree cor = Tree::corolla(path_graph(2), m);
    CHECK(occurrences(comb, cor).size() == 2);
    // weight-3 all-m comb has 3 corolla occurrences
    Graph p4 = path_graph(4);
    auto w3 = enumerate_monomials(a, p4, 3);
    for (const Tree& t : w3) CHECK(occurrences(t, cor).size() == 3);
    // comb over {1,2} does not occur inside the comb over {2,3}
    Tree c12 = mono2(p3, 0b011, m, m, a);
    Tree c23 = mono2(p3, 0b110, m, m, a);
    CHECK(occurrences(c23, c12).empty());
}

TEST_CASE("replace") {
    Alphabet a;
    int m = a.add_character("m", 0, +1);
    Graph p4 = path_graph(4);
    for (const Tree& t : enumerate_monomials(a, p4, 3)) {
        for (auto& ex : extract_all(t, 2, 2)) {
            // replacing a subtree by itself gives back t with coefficient 1
            Element self = replace(t, ex.occ, Element::monomial(ex.pattern), a);
            CHECK(self.size() == 1);
            CHECK(self.coeff(t) == 1);
            // replacing by zero gives zero
            CHECK(replace(t, ex.occ, Element(ex.pattern.host()), a).zero());
        }
    }
    // linearity: replacing by a sum = sum of replacements
    Graph p3 = path_graph(3);
    Tree c12 = mono2(p3, 0b011, m, m, a);
    Tree c23 = mono2(p3, 0b110, m, m, a);
    Tree big = enumerate_monomials(a, p4, 3)[0];
    auto exs = extract_all(big, 2, 2);
    for (auto& ex : exs) {
        if (!(ex.pattern.host() == p3)) continue;
        Element sum = Element::monomial(c12, 2) + Element::monomial(c23, -3);
        Element r = replace(big, ex.occ, sum, a);
        Element r1 = replace(big, ex.occ, Element::monomial(c12), a);
        Element r2 = replace(big, ex.occ, Element::monomial(c23), a);
        CHECK(r == Rational(2) * r1 + Rational(-3) * r2);
    }
}

TEST_CASE("translate and symmetrization") {
    // gcCom K3 relation under (12): m o12 m - m o13 m (the paper's remark)
    Alphabet a;
    int m = a.add_character("m", 0, +1);
    Graph k3 = complete_graph(3);
    Element rel = Element::monomial(mono2(k3, 0b011, m, m, a)) -
                  Element::monomial(mono2(k3, 0b110, m, m, a));
    Perm swap{0, 2, 1, 3};
    Element tr = translate(rel, swap, a);
    Element expect = Element::monomial(mono2(k3, 0b011, m, m, a)) -
                     Element::monomial(mono2(k3, 0b101, m, m, a));
    CHECK(tr == expect);

    // the path flip sends the P3 relation to minus itself
    Graph p3 = path_graph(3);
    Element prel = Element::monomial(mono2(p3, 0b011, m, m, a)) -
                   Element::monomial(mono2(p3, 0b110, m, m, a));
    Perm flip{0, 3, 2, 1};
    CHECK(translate(prel, flip, a) == Rational(-1) * prel);

    // the gcLie Jacobi element is fixed up to sign by every automorphism
    auto lie = preset("gcLie");
    const Element& jac = lie.relations.at(complete_graph(3).key())[0];
    for (const Perm& p : automorphisms(k3)) {
        Element t = translate(jac, p, lie.alphabet);
        CHECK((t == jac || t == Rational(-1) * jac));
    }
}

TEST_CASE("koszul signs square to the identity") {
    auto ger = preset("gcGerst");
    const Alphabet& a = ger.alphabet;
    int b = a.find("b");
    Graph k3 = complete_graph(3);
    for (const Perm& p : automorphisms(k3)) {
        // applying an automorphism twice with its inverse restores everything
        Perm inv(4);
        for (int v = 1; v <= 3; ++v) inv[p[v]] = v;
        Tree t = mono2(k3, 0b011, b, b, a);
        auto once = translate(t, p, a);
        auto back = translate(once.tree, inv, a);
        CHECK(back.tree == t);
        CHECK(once.sign * back.sign == 1);
    }
}

TEST_CASE("parallel and sequential axioms on random decorated trees") {
    auto ger = preset("gcGerst");
    const Alphabet& a = ger.alphabet;
    int m = a.find("m"), b = a.find("b");
    std::mt19937_64 rng(20240811);
    std::vector<Graph> pool;
    for (int n = 4; n <= 5; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) pool.push_back(g);
    int parallel_tests = 0, sequential_tests = 0;

    for (int it = 0; it < 4000; ++it) {
        const Graph& g = pool[rng() % pool.size()];
        auto tubes = enumerate_tubes(g);
        auto rl = [&]() { return (rng() & 1) ? m : b; };

        // parallel: disjoint tubes s, t with binary pieces
        std::vector<std::pair<VMask, VMask>> pairs;
        for (VMask s : tubes)
            for (VMask t : tubes)
                if (popcount(s) == 2 && popcount(t) == 2 && !(s & t)) pairs.push_back({s, t});
        if (!pairs.empty()) {
            auto [s, t] = pairs[rng() % pairs.size()];
            auto con_s = contract_tube(g, s);
            VMask t_in_s = 0;
            for (std::size_t i = 0; i < con_s.blocks.size(); ++i)
                if (con_s.blocks[i] & t) t_in_s |= vbit(int(i) + 1);
            auto con_t = contract_tube(g, t);
            VMask s_in_t = 0;
            for (std::size_t i = 0; i < con_t.blocks.size(); ++i)
                if (con_t.blocks[i] & s) s_in_t |= vbit(int(i) + 1);
            auto con_st = contract_tube(con_s.graph, t_in_s);
            auto con_ts = contract_tube(con_t.graph, s_in_t);
            REQUIRE(con_st.graph == con_ts.graph);
            int ymax = int(enumerate_monomials(a, con_st.graph, con_st.graph.n() - 1).size());
            if (ymax > 0) {
                auto xs = enumerate_monomials(a, con_st.graph, con_st.graph.n() - 1);
                Tree x = xs[rng() % xs.size()];
                Tree y = Tree::corolla(path_graph(2), rl());
                Tree z = Tree::corolla(path_graph(2), rl());
                auto xz = compose(con_s.graph, t_in_s, x, z, a);
                auto r1 = compose(g, s, xz.tree, y, a);
                auto xy = compose(con_t.graph, s_in_t, x, y, a);
                auto r2 = compose(g, t, xy.tree, z, a);
                int koszul =
                    (a.degree(y.node(0).letter) * a.degree(z.node(0).letter)) % 2 ? -1 : 1;
                CHECK(r1.tree == r2.tree);
                CHECK(xz.sign * r1.sign == koszul * xy.sign * r2.sign);
                ++parallel_tests;
            }
        }

        // sequential: nested tubes G c H
        std::vector<std::pair<VMask, VMask>> nested;
        for (VMask G : tubes)
            for (VMask H : tubes)
                if (popcount(G) == 2 && (G & H) == G && popcount(H) == popcount(G) + 1)
                    nested.push_back({G, H});
        if (!nested.empty()) {
            auto [G, H] = nested[rng() % nested.size()];
            auto indH = induced_subgraph(g, H);
            VMask G_in_H = 0;
            for (int v : mask_vertices(G)) G_in_H |= vbit(indH.old_to_new[v]);
            Tree z = Tree::corolla(path_graph(2), rl());
            Tree y = Tree::corolla(contract_tube(indH.graph, G_in_H).graph, rl());
            // x on g/H
            auto conH = contract_tube(g, H);
            auto xs = enumerate_monomials(a, conH.graph, conH.graph.n() - 1);
            if (!xs.empty()) {
                Tree x = xs[rng() % xs.size()];
                // route 1: x o_H (y o_G z)
                auto yz = compose(indH.graph, G_in_H, y, z, a);
                auto lhs = compose(g, H, x, yz.tree, a);
                // route 2: (x o_{H/G} y) o_G z
                auto conG = contract_tube(g, G);
                VMask H_img = 0;
                for (std::size_t i = 0; i < conG.blocks.size(); ++i)
                    if (conG.blocks[i] & H) H_img |= vbit(int(i) + 1);
                auto xy = compose(conG.graph, H_img, x, y, a);
                auto rhs = compose(g, G, xy.tree, z, a);
                CHECK(lhs.tree == rhs.tree);
                CHECK(yz.sign * lhs.sign == xy.sign * rhs.sign);
                ++sequential_tests;
            }
        }
    }
    CHECK(parallel_tests > 1000);
    CHECK(sequential_tests > 1000);
}

TEST_CASE("composition is canonical and additive in weight and degree") {
    auto ger = preset("gcGerst");
    const Alphabet& a = ger.alphabet;
    Graph c4 = cycle_graph(4);
    for (VMask G : enumerate_tubes(c4)) {
        if (popcount(G) < 2 || popcount(G) == c4.n()) continue;
        auto oh = contract_tube(c4, G).graph;
        auto ih = induced_subgraph(c4, G).graph;
        for (const Tree& o : enumerate_monomials(a, oh, oh.n() - 1))
            for (const Tree& i : enumerate_monomials(a, ih, ih.n() - 1)) {
                auto st = compose(c4, G, o, i, a);
                validate_monomial(st.tree, a);  // canonical by construction
                CHECK(st.tree.weight() == o.weight() + i.weight());
                CHECK(monomial_degree(st.tree, a) ==
                      monomial_degree(o, a) + monomial_degree(i, a));
                CHECK((st.sign == 1 || st.sign == -1));
            }
    }
}

TEST_CASE("element json") {
    Alphabet a;
    int m = a.add_character("m", 0, +1);
    Tree t = mono2(path_graph(3), 0b011, m, m, a);
    Element e = Element::monomial(t, Rational(1) / 3);
    auto j = element_to_json(e, a);
    CHECK(j[0]["coefficient"] == "1/3");
    CHECK(j[0]["tree"]["d"] == "m");
}
