#include <catch2/catch_amalgamated.hpp>

#include "gc/lattice.hpp"

using namespace gc;

TEST_CASE("partition counts") {
    CHECK(enumerate_partitions(path_graph(3)).size() == 4);
    // triangle with a pendant vertex: 10 partitions. Note the partition
    // {pendant edge | opposite triangle edge} is easy to miss when drawing
    // the Hasse diagram by hand; the brute-force enumeration is the oracle.
    Graph tri_tail(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto parts = enumerate_partitions(tri_tail);
    CHECK(parts.size() == 10);
    GraphPartition two_edges{{VMask(0b0011), VMask(0b1100)}};
    CHECK(std::find(parts.begin(), parts.end(), two_edges) != parts.end());
    // complete graph: all set partitions (Bell number)
    CHECK(enumerate_partitions(complete_graph(4)).size() == 15);
}

TEST_CASE("lattice structure") {
    PartitionLattice lat(path_graph(3));
    CHECK(lat.size() == 4);
    CHECK(lat.elements()[lat.bottom()].size() == 3);
    CHECK(lat.elements()[lat.top()].size() == 1);
    for (int i = 0; i < lat.size(); ++i) {
        CHECK(lat.leq(lat.bottom(), i));
        CHECK(lat.leq(i, lat.top()));
    }
    CHECK_THROWS(PartitionLattice(path_graph(3), 2));  // bound exceeded
}

TEST_CASE("moebius values") {
    CHECK(moebius(path_graph(2)) == -1);
    for (int n = 3; n <= 6; ++n) CHECK(abs_moebius(cycle_graph(n)) == n - 1);
    long long fact = 1;
    for (int n = 2; n <= 5; ++n) {
        fact *= n - 1;
        CHECK(abs_moebius(complete_graph(n)) == fact);
    }
    // trees have |mu| = 1
    CHECK(abs_moebius(path_graph(5)) == 1);
    CHECK(abs_moebius(star_graph(4)) == 1);
}

TEST_CASE("moebius recursion and multiplicativity") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            PartitionLattice lat(g);
            auto mu = lat.moebius_from_bottom();
            long long total = 0;
            for (int i = 0; i < lat.size(); ++i) total += mu[i];
            CHECK(total == 0);
            // mu(0,I) = product of mu over the blocks of I
            for (int i = 0; i < lat.size(); ++i) {
                long long prod = 1;
                for (VMask b : lat.elements()[i].blocks)
                    prod *= moebius(induced_subgraph(g, b).graph);
                CHECK(mu[i] == prod);
            }
        }
}

TEST_CASE("interval factorization") {
    // [0,I] = product of lattices of the blocks; [I,1] = lattice of g/I,
    // witnessed by an explicit order isomorphism
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            PartitionLattice lat(g);
            for (int i = 0; i < lat.size(); ++i) {
                const auto& I = lat.elements()[i];
                long long prod = 1;
                for (VMask b : I.blocks)
                    prod *= (long long)enumerate_partitions(induced_subgraph(g, b).graph).size();
                CHECK((long long)lat.interval(lat.bottom(), i).size() == prod);

                // upper interval: map J >= I to the partition J/I of g/I
                auto con = contract(g, I.blocks);
                PartitionLattice upper(con.graph);
                auto interval = lat.interval(i, lat.top());
                REQUIRE(interval.size() == std::size_t(upper.size()));
                std::vector<int> image;
                for (int j : interval) {
                    GraphPartition q;
                    for (VMask big : lat.elements()[j].blocks) {
                        VMask blk = 0;
                        for (std::size_t b = 0; b < con.blocks.size(); ++b)
                            if (con.blocks[b] & big) blk |= vbit(int(b) + 1);
                        q.blocks.push_back(blk);
                    }
                    q.blocks = sorted_blocks(q.blocks);
                    image.push_back(upper.index_of(q));
                }
                // bijective and order-preserving in both directions
                auto sorted = image;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                CHECK(sorted.size() == image.size());
                for (std::size_t x = 0; x < interval.size(); ++x)
                    for (std::size_t y = 0; y < interval.size(); ++y)
                        CHECK(lat.leq(interval[x], interval[y]) ==
                              upper.leq(image[x], image[y]));
            }
        }
}

TEST_CASE("whitney dimension formula") {
    CHECK(whitney_dimension(path_graph(3)) == 4);
    CHECK(whitney_dimension(cycle_graph(4)) == 14);
    CHECK(whitney_dimension(complete_graph(4)) == 24);
    CHECK(whitney_dimension(complete_graph(3)) == 6);
}
