#pragma once

// The lattice of graph partitions Pi_gr(Gamma): all partitions of the vertex
// set into tubes, ordered by refinement, stored explicitly with its full
// order matrix. Moebius values via the standard recursion.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gc/graph.hpp"

namespace gc {

struct GraphPartition {
    std::vector<VMask> blocks;  // sorted by minimal vertex

    int size() const { return int(blocks.size()); }
    bool operator==(const GraphPartition&) const = default;
    bool operator<(const GraphPartition& o) const { return blocks < o.blocks; }
};

inline GraphPartition bottom_partition(const Graph& g) {
    GraphPartition p;
    for (int v = 1; v <= g.n(); ++v) p.blocks.push_back(vbit(v));
    return p;
}

inline GraphPartition top_partition(const Graph& g) { return {{g.vertices()}}; }

// I <= J iff every block of I is contained in a block of J
inline bool refines(const GraphPartition& a, const GraphPartition& b) {
    for (VMask x : a.blocks) {
        bool found = false;
        for (VMask y : b.blocks)
            if ((x & y) == x) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

inline std::vector<GraphPartition> enumerate_partitions(const Graph& g) {
    std::vector<GraphPartition> out;
    std::vector<VMask> acc;
    // always assign the lowest unplaced vertex to the next block
    auto rec = [&](auto&& self, VMask rest) -> void {
        if (!rest) {
            out.push_back({acc});
            return;
        }
        int v = min_vertex(rest);
        // enumerate tubes within rest containing v
        for (VMask s = rest; s; s = VMask((s - 1) & rest)) {
            if (!(s & vbit(v))) continue;
            if (!g.connected_subset(s)) continue;
            acc.push_back(s);
            self(self, VMask(rest & ~s));
            acc.pop_back();
        }
    };
    rec(rec, g.vertices());
    for (auto& p : out) p.blocks = sorted_blocks(p.blocks);
    std::sort(out.begin(), out.end());
    return out;
}

class PartitionLattice {
public:
    explicit PartitionLattice(const Graph& g, int max_vertices = 8) : graph_(g) {
        if (g.n() > max_vertices)
            throw std::runtime_error("partition_lattice: vertex bound exceeded");
        elements_ = enumerate_partitions(g);
        int m = int(elements_.size());
        leq_.assign(m, std::vector<char>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                leq_[i][j] = refines(elements_[i], elements_[j]);
        for (int i = 0; i < m; ++i) {
            if (elements_[i].size() == g.n()) bottom_ = i;
            if (elements_[i].size() == 1) top_ = i;
        }
    }

    const Graph& graph() const { return graph_; }
    const std::vector<GraphPartition>& elements() const { return elements_; }
    int size() const { return int(elements_.size()); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    bool leq(int i, int j) const { return leq_[i][j]; }
    int index_of(const GraphPartition& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || !(*it == p))
            throw std::invalid_argument("partition not in lattice");
        return int(it - elements_.begin());
    }
    int rank(int i) const { return graph_.n() - elements_[i].size(); }

    std::vector<int> interval(int lo, int hi) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (leq(lo, i) && leq(i, hi)) out.push_back(i);
        return out;
    }

    // mu(0^, I) for every I, by the defining recursion
    std::vector<long long> moebius_from_bottom() const {
        std::vector<long long> mu(size(), 0);
        // process in refinement-compatible order: decreasing block count
        std::vector<int> order(size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return elements_[a].size() > elements_[b].size();
        });
        for (int i : order) {
            if (i == bottom_) {
                mu[i] = 1;
                continue;
            }
            long long s = 0;
            for (int j = 0; j < size(); ++j)
                if (j != i && leq(bottom_, j) && leq(j, i)) s += mu[j];
            mu[i] = -s;
        }
        return mu;
    }

private:
    Graph graph_;
    std::vector<GraphPartition> elements_;
    std::vector<std::vector<char>> leq_;
    int bottom_ = -1, top_ = -1;
};

// mu(0^,1^) of Pi_gr(g); signed
inline long long moebius(const Graph& g) {
    if (g.n() == 1) return 1;
    PartitionLattice lat(g);
    return lat.moebius_from_bottom()[lat.top()];
}

inline long long abs_moebius(const Graph& g) {
    long long m = moebius(g);
    return m < 0 ? -m : m;
}

// memoized |mu| on isomorphism classes, used all over the dimension formulas
inline long long abs_moebius_cached(const Graph& g) {
    static std::map<std::pair<int, EMask>, long long> cache;
    static std::mutex lock;
    auto key = std::make_pair(g.n(), canonical_edge_mask(g));
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long long v = abs_moebius(g);
    std::lock_guard<std::mutex> guard(lock);
    cache.emplace(key, v);
    return v;
}

// sum over partitions of the product of |mu| over blocks; this is the
// dimension of the degree-zero homology of the little-intervals contractad
inline long long whitney_dimension(const Graph& g) {
    long long total = 0;
    for (const auto& p : enumerate_partitions(g)) {
        long long prod = 1;
        for (VMask b : p.blocks) prod *= abs_moebius_cached(induced_subgraph(g, b).graph);
        total += prod;
    }
    return total;
}

}  // namespace gc
