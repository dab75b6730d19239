#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gc/grobner.hpp"
#include "gc/orders.hpp"
#include "gc/presets.hpp"

using namespace gc;

namespace {

Tree mono2(const Graph& h, VMask G, int outer, int inner, const Alphabet& a) {
    return compose(h, G, Tree::corolla(contract_tube(h, G).graph, outer),
                   Tree::corolla(induced_subgraph(h, G).graph, inner), a)
        .tree;
}

}  // namespace

TEST_CASE("graphpermlex chain on three-vertex trees") {
    // ((a,aa,aa),123) < ((aa,a,aa),132) < ((aa,aa,a),123)
    Alphabet a;
    int x = a.add_character("a", 0, +1);
    Graph k3 = complete_graph(3);
    Tree t1 = mono2(k3, 0b110, x, x, a);  // a(1,a(2,3))
    Tree t2 = mono2(k3, 0b101, x, x, a);  // a(a(1,3),2)
    Tree t3 = mono2(k3, 0b011, x, x, a);  // a(a(1,2),3)
    auto o = MonomialOrder::graphpermlex(a);
    CHECK(compare(o, t1, t2) < 0);
    CHECK(compare(o, t2, t3) < 0);
    CHECK(compare(o, t1, t1) == 0);
    auto r = MonomialOrder::reverse_graphpermlex(a);
    CHECK(compare(r, t1, t2) > 0);
    CHECK(compare(r, t2, t3) > 0);
}

TEST_CASE("quantum monoid canonical forms") {
    CHECK(qm_canonical("bm") == QuantumMonomial{1, 1, 1});
    CHECK(qm_canonical("mb") == QuantumMonomial{1, 1, 0});
    CHECK(qm_canonical("bbm") == QuantumMonomial{1, 2, 2});
    CHECK(qm_canonical("") == QuantumMonomial{0, 0, 0});
    CHECK_THROWS(qm_canonical("xz"));
    // confluence spot check: normalizing letter by letter agrees with the
    // rewriting system bm -> mbq on longer words
    CHECK(qm_canonical("bmbm") == QuantumMonomial{2, 2, 3});
}

TEST_CASE("quantum order four-term chain") {
    auto ger = preset("gcGerst");
    const Alphabet& a = ger.alphabet;
    int m = a.find("m"), b = a.find("b");
    Graph p3 = path_graph(3);
    Tree q1 = mono2(p3, 0b011, b, b, a);  // (0,(bb,bb,b),123)
    Tree q2 = mono2(p3, 0b011, m, b, a);  // (1,(mb,mb,m),123)
    Tree q3 = mono2(p3, 0b011, b, m, a);  // (1,(mbq,mbq,b),123)
    Tree q4 = mono2(p3, 0b011, m, m, a);  // (2,(mm,mm,m),123)
    auto q = MonomialOrder::quantum(a);
    CHECK(compare(q, q1, q2) < 0);
    CHECK(compare(q, q2, q3) < 0);
    CHECK(compare(q, q3, q4) < 0);
    // all-b vs all-m of the same shape: all-b is smaller
    CHECK(compare(q, q1, q4) < 0);
    CHECK(compare(q, q4, q4) == 0);
}

TEST_CASE("totality and antisymmetry on enumerated components") {
    auto ger = preset("gcGerst");
    const Alphabet& a = ger.alphabet;
    std::vector<MonomialOrder> orders{MonomialOrder::graphpermlex(a),
                                      MonomialOrder::reverse_graphpermlex(a),
                                      MonomialOrder::quantum(a)};
    for (int n = 3; n <= 4; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            auto monos = enumerate_monomials(a, g, n - 1);
            for (const auto& o : orders)
                for (std::size_t i = 0; i < monos.size(); ++i)
                    for (std::size_t j = 0; j < monos.size(); ++j) {
                        int c = compare(o, monos[i], monos[j]);
                        CHECK(c == -compare(o, monos[j], monos[i]));
                        CHECK((c == 0) == (i == j));
                    }
        }
}

TEST_CASE("composition monotonicity on random triples") {
    auto ger = preset("gcGerst");
    const Alphabet& a = ger.alphabet;
    std::vector<MonomialOrder> orders{MonomialOrder::graphpermlex(a),
                                      MonomialOrder::quantum(a)};
    std::mt19937_64 rng(777);
    std::vector<Graph> pool;
    for (int n = 4; n <= 5; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) pool.push_back(g);
    long long tested = 0;
    while (tested < 10000) {
        const Graph& g = pool[rng() % pool.size()];
        auto tubes = enumerate_tubes(g);
        std::vector<VMask> big;
        for (VMask t : tubes)
            if (popcount(t) >= 2 && popcount(t) < g.n()) big.push_back(t);
        if (big.empty()) continue;
        VMask G = big[rng() % big.size()];
        auto outer_host = contract_tube(g, G).graph;
        auto inner_host = induced_subgraph(g, G).graph;
        auto outs = enumerate_monomials(a, outer_host, outer_host.n() - 1);
        auto ins = enumerate_monomials(a, inner_host, inner_host.n() - 1);
        if (outs.size() < 2 || ins.empty()) continue;
        const Tree& o1 = outs[rng() % outs.size()];
        const Tree& o2 = outs[rng() % outs.size()];
        const Tree& i1 = ins[rng() % ins.size()];
        const Tree& i2 = ins[rng() % ins.size()];
        for (const auto& ord : orders) {
            // outer comparison preserved under composing a fixed inner
            int c = compare(ord, o1, o2);
            Tree l = compose(g, G, o1, i1, a).tree;
            Tree r = compose(g, G, o2, i1, a).tree;
            CHECK(compare(ord, l, r) == c);
            // inner comparison preserved under a fixed outer
            int ci = compare(ord, i1, i2);
            Tree li = compose(g, G, o1, i1, a).tree;
            Tree ri = compose(g, G, o1, i2, a).tree;
            CHECK(compare(ord, li, ri) == ci);
        }
        ++tested;
    }
    CHECK(tested == 10000);
}

TEST_CASE("leading terms of the preset relations") {
    // gcCom under reverse graphpermlex: the five displayed leading terms
    auto com = symmetrize_presentation(preset("gcCom"));
    auto co = MonomialOrder::reverse_graphpermlex(com.alphabet);
    auto lt_set = [&](const Presentation& p, const MonomialOrder& o, const Graph& h) {
        std::set<std::string> out;
        GrobnerBasis tmp;
        tmp.order = o;
        tmp.alphabet = p.alphabet;
        for (const Element& r : *p.relations_on(h)) {
            Element nf = normal_form(r, tmp, false);
            if (!nf.zero()) tmp.insert(nf);
        }
        for (const auto& ge : *tmp.on(h)) out.insert(to_string(ge.lt, p.alphabet));
        return out;
    };
    CHECK(lt_set(com, co, path_graph(3)) == std::set<std::string>{"m(1,m(2,3))"});
    CHECK(lt_set(com, co, Graph(3, {{1, 3}, {2, 3}})) == std::set<std::string>{"m(1,m(2,3))"});
    CHECK(lt_set(com, co, Graph(3, {{1, 2}, {1, 3}})) == std::set<std::string>{"m(m(1,3),2)"});
    CHECK(lt_set(com, co, complete_graph(3)) ==
          std::set<std::string>{"m(1,m(2,3))", "m(m(1,3),2)"});

    // gcLie under graphpermlex: the displayed set
    auto lie = symmetrize_presentation(preset("gcLie"));
    auto lo = MonomialOrder::graphpermlex(lie.alphabet);
    CHECK(lt_set(lie, lo, path_graph(3)) == std::set<std::string>{"b(b(1,2),3)"});
    CHECK(lt_set(lie, lo, Graph(3, {{1, 3}, {2, 3}})) == std::set<std::string>{"b(b(1,3),2)"});
    CHECK(lt_set(lie, lo, Graph(3, {{1, 2}, {1, 3}})) == std::set<std::string>{"b(b(1,2),3)"});
    CHECK(lt_set(lie, lo, complete_graph(3)) == std::set<std::string>{"b(b(1,2),3)"});

    // gcAss under the quantum order: LT(R_gcAss) = LT(gcCom) u LT(gcLie) u {b o_e m}
    auto ass = symmetrize_presentation(preset("gcAss-mb"));
    auto qo = MonomialOrder::quantum(ass.alphabet);
    auto ger = symmetrize_presentation(preset("gcGerst"));
    auto qg = MonomialOrder::quantum(ger.alphabet);
    for (const Graph& h : all_connected_graphs(3)) {
        std::set<std::string> expect;
        {
            auto cl = lt_set(com, co, h);
            for (auto s : cl) expect.insert(s);
            auto ll = lt_set(lie, lo, h);
            for (auto s : ll) expect.insert(s);
            for (auto [u, v] : h.edges()) {
                VMask e = VMask(vbit(u) | vbit(v));
                int b = ass.alphabet.find("b");
                int m = ass.alphabet.find("m");
                expect.insert(to_string(mono2(h, e, b, m, ass.alphabet), ass.alphabet));
            }
        }
        // rename gcCom/gcLie letters to the shared {m, b} names
        std::set<std::string> expect_renamed;
        for (std::string s : expect) expect_renamed.insert(s);
        CHECK(lt_set(ass, qo, h) == expect_renamed);
        CHECK(lt_set(ger, qg, h) == expect_renamed);  // LT(gcGerst) = LT(gcAss)
    }
}
