#pragma once

// Presentations of (shuffle) contractads: a graded generator alphabet plus
// relation elements per ordered-graph component. Symmetric presentations list
// relations on one host per isomorphism class; symmetrization expands them
// through all vertex relabelings onto every ordered component.

#include <map>
#include <string>
#include <vector>

#include "gc/algebra.hpp"

namespace gc {

struct Presentation {
    std::string name;
    Alphabet alphabet;
    // relations per ordered-graph component, keyed by Graph::key()
    std::map<std::uint64_t, std::vector<Element>> relations;
    std::map<std::uint64_t, Graph> components;

    void add_relation(const Graph& host, const Element& r) {
        if (r.zero()) return;
        components.emplace(host.key(), host);
        relations[host.key()].push_back(r);
    }
    const std::vector<Element>* relations_on(const Graph& host) const {
        auto it = relations.find(host.key());
        return it == relations.end() ? nullptr : &it->second;
    }
    int max_relation_weight() const {
        int w = 0;
        for (const auto& [k, rs] : relations)
            for (const auto& r : rs) w = std::max(w, r.weight());
        return w;
    }
    bool quadratic() const { return max_relation_weight() <= 2; }
};

// Expand a symmetric presentation into its shuffle version: for each
// relation on host Gamma and each relabeling of Gamma, emit the translate
// into the matching ordered component; exact duplicates are dropped.
inline Presentation symmetrize_presentation(const Presentation& sym) {
    Presentation out;
    out.name = sym.name;
    out.alphabet = sym.alphabet;
    for (const auto& [key, rels] : sym.relations) {
        const Graph& host = sym.components.at(key);
        if (host.n() > 5)
            throw std::invalid_argument("symmetrize_presentation: relation host too large");
        std::vector<int> perm(host.n());
        std::iota(perm.begin(), perm.end(), 1);
        do {
            Perm p(host.n() + 1);
            for (int i = 0; i < host.n(); ++i) p[i + 1] = perm[i];
            for (const Element& r : rels) {
                Element tr = translate(r, p, sym.alphabet);
                if (tr.zero()) continue;
                Graph h = tr.host();
                auto& list = out.relations[h.key()];
                out.components.emplace(h.key(), h);
                if (std::find(list.begin(), list.end(), tr) == list.end()) list.push_back(tr);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace gc
