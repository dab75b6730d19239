#pragma once

// Monomial orders on tree monomials: graphpermlex (path sequence word by
// word under deglex, ties broken by the leaf permutation), its reverse, and
// the quantum-monoid order used for gcAss / gcGerst.

#include <stdexcept>
#include <vector>

#include "gc/algebra.hpp"
#include "gc/trees.hpp"

namespace gc {

enum class OrderKind { GraphPermLex, ReverseGraphPermLex, Quantum };

struct MonomialOrder {
    OrderKind kind = OrderKind::GraphPermLex;
    std::vector<int> letter_rank;  // rank per letter id (smaller = smaller letter)
    int m_letter = -1;             // quantum order only
    int b_letter = -1;

    static MonomialOrder graphpermlex(const Alphabet& a) {
        MonomialOrder o;
        o.kind = OrderKind::GraphPermLex;
        o.letter_rank.resize(a.letters.size());
        for (std::size_t i = 0; i < a.letters.size(); ++i) o.letter_rank[i] = int(i);
        return o;
    }
    static MonomialOrder reverse_graphpermlex(const Alphabet& a) {
        MonomialOrder o = graphpermlex(a);
        o.kind = OrderKind::ReverseGraphPermLex;
        return o;
    }
    static MonomialOrder quantum(const Alphabet& a) {
        MonomialOrder o;
        o.kind = OrderKind::Quantum;
        o.m_letter = a.find("m");
        // the bracket letter is the other generator (named b, or c for the
        // higher-disc presets)
        for (int i = 0; i < int(a.letters.size()); ++i)
            if (i != o.m_letter && a.letters[i].flip_to == i) o.b_letter = i;
        if (o.b_letter < 0) throw std::invalid_argument("quantum order: no bracket letter");
        return o;
    }
};

// canonical form m^k b^l q^j of a word in the quantum monoid
// QM = < m, b, q | mq = qm, bq = qb, bm = mbq >
struct QuantumMonomial {
    int k = 0, l = 0, j = 0;
    bool operator==(const QuantumMonomial&) const = default;
};

// letters: 'm', 'b', 'q'
inline QuantumMonomial qm_canonical(const std::string& word) {
    QuantumMonomial q;
    for (char c : word) {
        switch (c) {
            case 'm':
                q.j += q.l;  // each b already seen jumps over this m
                ++q.k;
                break;
            case 'b': ++q.l; break;
            case 'q': ++q.j; break;
            default: throw std::invalid_argument("qm_canonical: letters must be m/b/q");
        }
    }
    return q;
}

// quantum-monoid order: more m's means smaller, then fewer b's, then fewer q's
inline int qm_compare(const QuantumMonomial& a, const QuantumMonomial& b) {
    if (a.k != b.k) return a.k > b.k ? -1 : 1;
    if (a.l != b.l) return a.l < b.l ? -1 : 1;
    if (a.j != b.j) return a.j < b.j ? -1 : 1;
    return 0;
}

namespace detail {

// deglex on words of letter ids
inline int word_compare_deglex(const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& rank) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (rank[a[i]] != rank[b[i]]) return rank[a[i]] < rank[b[i]] ? -1 : 1;
    return 0;
}

inline int seq_compare(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace detail

// -1 / 0 / +1 for a < b, a == b, a > b. Hosts and weights must agree.
inline int compare(const MonomialOrder& o, const Tree& a, const Tree& b) {
    if (!(a.host() == b.host())) throw std::invalid_argument("compare: host mismatch");
    if (a.weight() != b.weight()) throw std::invalid_argument("compare: weight mismatch");
    PlanarForm pa = canonical_planar(a), pb = canonical_planar(b);

    auto base = [&]() -> int {
        switch (o.kind) {
            case OrderKind::GraphPermLex:
            case OrderKind::ReverseGraphPermLex: {
                for (std::size_t i = 0; i < pa.path_sequence.size(); ++i) {
                    int c = detail::word_compare_deglex(pa.path_sequence[i],
                                                        pb.path_sequence[i], o.letter_rank);
                    if (c) return c;
                }
                return detail::seq_compare(pa.leaf_permutation, pb.leaf_permutation);
            }
            case OrderKind::Quantum: {
                auto mcount = [&](const Tree& t) {
                    int k = 0;
                    for (const auto& nd : t.nodes())
                        if (nd.letter == o.m_letter) ++k;
                        else if (nd.letter != o.b_letter)
                            throw std::invalid_argument(
                                "quantum order: decorations must be m or b");
                    return k;
                };
                int ka = mcount(a), kb = mcount(b);
                if (ka != kb) return ka < kb ? -1 : 1;  // more m-vertices = larger
                for (std::size_t i = 0; i < pa.path_sequence.size(); ++i) {
                    auto canon = [&](const std::vector<int>& w) {
                        QuantumMonomial q;
                        for (int l : w) {
                            if (l == o.m_letter) {
                                q.j += q.l;
                                ++q.k;
                            } else {
                                ++q.l;
                            }
                        }
                        return q;
                    };
                    int c = qm_compare(canon(pa.path_sequence[i]), canon(pb.path_sequence[i]));
                    if (c) return c;
                }
                return detail::seq_compare(pa.leaf_permutation, pb.leaf_permutation);
            }
        }
        return 0;
    };
    int c = base();
    if (o.kind == OrderKind::ReverseGraphPermLex) c = -c;
    return c;
}

inline bool less(const MonomialOrder& o, const Tree& a, const Tree& b) {
    return compare(o, a, b) < 0;
}

// leading term of a nonzero element
inline std::pair<Tree, Rational> leading_term(const Element& e, const MonomialOrder& o) {
    if (e.zero()) throw std::invalid_argument("leading_term: zero element");
    auto it = e.terms().begin();
    Tree best = it->first;
    Rational c = it->second;
    for (++it; it != e.terms().end(); ++it)
        if (compare(o, it->first, best) > 0) {
            best = it->first;
            c = it->second;
        }
    return {best, c};
}

}  // namespace gc
