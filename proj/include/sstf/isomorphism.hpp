#pragma once

#include "sstf/graph.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace sstf {

namespace detail {

// Multiset of labeled directed edge counts between an ordered vertex pair.
struct PairKey {
    VertexId a, b;
    bool operator<(const PairKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

inline std::map<PairKey, std::array<int, 4>> edge_table(const LabeledDigraph& g) {
    std::map<PairKey, std::array<int, 4>> table;
    for (const Edge& e : g.edges()) {
        auto& cell = table[PairKey{e.tail, e.head}];
        cell[e.label == EdgeLabel::Sphere ? 0 : 1]++;
    }
    return table;
}

}  // namespace detail

// Labeled-digraph isomorphism by backtracking with profile pruning. Heights
// only matter through the orientation they induce, so two graphs with the
// same shape but different height values compare equal. Inputs are small by
// design; no attempt is made to be clever.
inline bool isomorphic(const LabeledDigraph& g1, const LabeledDigraph& g2) {
    const std::size_t n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    if (n == 0) return true;

    std::vector<VertexProfile> p1(n), p2(n);
    for (VertexId v = 0; v < n; ++v) {
        p1[v] = vertex_profile(g1, v);
        p2[v] = vertex_profile(g2, v);
    }
    {
        auto key = [](const VertexProfile& p) {
            return std::array<int, 4>{p.in_spheres, p.in_tori, p.out_spheres, p.out_tori};
        };
        std::vector<std::array<int, 4>> k1, k2;
        for (VertexId v = 0; v < n; ++v) {
            k1.push_back(key(p1[v]));
            k2.push_back(key(p2[v]));
        }
        std::sort(k1.begin(), k1.end());
        std::sort(k2.begin(), k2.end());
        if (k1 != k2) return false;
    }

    const auto t1 = detail::edge_table(g1);
    const auto t2 = detail::edge_table(g2);

    std::vector<VertexId> map(n, no_vertex);
    std::vector<char> used(n, 0);

    // Checks all edge multiplicities between v and already-mapped vertices.
    auto consistent = [&](VertexId v, VertexId image) {
        for (VertexId w = 0; w < n; ++w) {
            if (map[w] == no_vertex) continue;
            for (bool forward : {true, false}) {
                const detail::PairKey k1v = forward ? detail::PairKey{v, w} : detail::PairKey{w, v};
                const detail::PairKey k2v =
                    forward ? detail::PairKey{image, map[w]} : detail::PairKey{map[w], image};
                const auto it1 = t1.find(k1v);
                const auto it2 = t2.find(k2v);
                const std::array<int, 4> empty{};
                const auto& c1 = it1 == t1.end() ? empty : it1->second;
                const auto& c2 = it2 == t2.end() ? empty : it2->second;
                if (c1 != c2) return false;
            }
        }
        return true;
    };

    auto search = [&](auto&& self, VertexId v) -> bool {
        if (v == n) return true;
        for (VertexId image = 0; image < n; ++image) {
            if (used[image] || !(p1[v] == p2[image])) continue;
            if (!consistent(v, image)) continue;
            map[v] = image;
            used[image] = 1;
            if (self(self, v + 1)) return true;
            map[v] = no_vertex;
            used[image] = 0;
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace sstf
