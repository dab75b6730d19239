#include <catch2/catch_amalgamated.hpp>

#include "gc/graph.hpp"
#include "gc/json_io.hpp"

using namespace gc;

namespace {

// independent brute-force tube oracle: subset connectivity by edge BFS
std::vector<VMask> tube_oracle(const Graph& g) {
    std::vector<VMask> out;
    for (VMask s = 1; s < (1u << g.n()); ++s) {
        std::vector<int> vs = mask_vertices(s);
        std::vector<char> seen(g.n() + 1, 0);
        std::vector<int> q{vs[0]};
        seen[vs[0]] = 1;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (int w : vs)
                if (!seen[w] && g.has_edge(q[i], w)) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        if (q.size() == vs.size()) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("graph families") {
    CHECK(path_graph(3).edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(cycle_graph(4).edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    // diamond: K2 on {1,2} joined with {3,4}
    Graph dia = make_family("K", {1, 1});
    CHECK(dia.n() == 2);
    Graph d2 = join_complete_discrete(2, 2);
    CHECK(d2.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(star_graph(3).n() == 4);
    CHECK(star_graph(3).has_edge(1, 4));
    CHECK_THROWS(cycle_graph(2));
    CHECK_THROWS(path_graph(0));
}

TEST_CASE("graph parsing") {
    CHECK(parse_graph("P3") == path_graph(3));
    CHECK(parse_graph("edges:1-2,2-3,3-1") == complete_graph(3));
    CHECK(parse_graph("K(1^2,2)") == join_complete_discrete(2, 2));
    CHECK(parse_graph("St3") == star_graph(3));
    CHECK_THROWS_WITH(parse_graph("edges:1-2,3-4"), Catch::Matchers::ContainsSubstring("not connected"));
    CHECK_THROWS(parse_graph("Q7"));
    CHECK_THROWS(parse_graph("edges:1-"));
}

TEST_CASE("tube enumeration matches the brute-force oracle") {
    for (const Graph& g : {path_graph(3), cycle_graph(4), complete_graph(4), star_graph(3),
                           join_complete_discrete(2, 2)}) {
        auto got = enumerate_tubes(g);
        auto want = tube_oracle(g);
        std::sort(want.begin(), want.end());
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == want);
    }
    CHECK(enumerate_tubes(path_graph(3)).size() == 6);
    CHECK(enumerate_tubes(complete_graph(4)).size() == 15);  // 2^4 - 1
    CHECK(enumerate_tubes(cycle_graph(4)).size() == 13);
    // deterministic order: size then lexicographic
    auto p3 = enumerate_tubes(path_graph(3));
    CHECK(p3.front() == vbit(1));
    CHECK(p3.back() == path_graph(3).vertices());
}

TEST_CASE("induced subgraphs and relabeling") {
    Graph c4 = cycle_graph(4);
    auto r = induced_subgraph(c4, VMask(0b0111));
    CHECK(r.graph == path_graph(3));
    CHECK(r.old_to_new[1] == 1);
    CHECK(r.old_to_new[3] == 3);
    auto k2 = induced_subgraph(complete_graph(4), VMask(vbit(2) | vbit(4)));
    CHECK(k2.graph == path_graph(2));
    CHECK(k2.old_to_new[2] == 1);
    CHECK(k2.old_to_new[4] == 2);
    CHECK_THROWS(induced_subgraph(c4, VMask(vbit(1) | vbit(3))));  // not a tube
}

TEST_CASE("contractions") {
    // P5 / {12|3|45} = P3
    Graph p5 = path_graph(5);
    auto c = contract(p5, {VMask(0b00011), vbit(3), VMask(0b11000)});
    CHECK(c.graph == path_graph(3));
    // C6 / {156|2|3|4} = C4
    Graph c6 = cycle_graph(6);
    auto c2 = contract(c6, {VMask(vbit(1) | vbit(5) | vbit(6)), vbit(2), vbit(3), vbit(4)});
    CHECK(c2.graph == cycle_graph(4));
    // identity contraction
    std::vector<VMask> singletons;
    for (int v = 1; v <= 4; ++v) singletons.push_back(vbit(v));
    CHECK(contract(cycle_graph(4), singletons).graph == cycle_graph(4));
    // full contraction is the one-vertex graph
    CHECK(contract(cycle_graph(4), {cycle_graph(4).vertices()}).graph.n() == 1);
}

TEST_CASE("automorphisms") {
    auto a = automorphisms(path_graph(3));
    REQUIRE(a.size() == 2);
    CHECK(a[0][1] == 1);  // identity first
    CHECK(automorphisms(complete_graph(4)).size() == 24);
    CHECK(automorphisms(star_graph(3)).size() == 6);
}

TEST_CASE("orderings and isomorphism classes") {
    CHECK(all_connected_graphs(4).size() == 38);
    CHECK(orderings_of(path_graph(4)).size() == 12);
    CHECK(orderings_of(star_graph(3)).size() == 4);
    CHECK(orderings_of(cycle_graph(4)).size() == 3);
    CHECK(orderings_of(complete_graph(4)).size() == 1);
    CHECK(connected_graphs_up_to_iso(4).size() == 6);
    CHECK(connected_graphs_up_to_iso(5).size() == 21);
    CHECK(isomorphic(parse_graph("edges:1-3,3-2"), path_graph(3)));
}

TEST_CASE("json round trip") {
    Graph g = join_complete_discrete(2, 2);
    auto j = graph_to_json(g);
    CHECK(j["n"] == 4);
    CHECK(j["edges"][0][0] == 1);
    CHECK(graph_from_json(j) == g);
}
