#pragma once

#include "sstf/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sstf {

using VertexId = std::uint32_t;
constexpr VertexId no_vertex = static_cast<VertexId>(-1);

enum class EdgeLabel : std::uint8_t { Sphere, Torus };

inline char label_char(EdgeLabel l) { return l == EdgeLabel::Sphere ? 'S' : 'T'; }

// Thrown when an operation is called outside its contract (unknown vertex,
// disconnected input, bad surplus map, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown for malformed values produced at runtime (inconsistent blueprints,
// illegal handle moves, parse failures carry their own subtype).
struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A failed self-check that should be unreachable through the public API.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct Edge {
    VertexId tail;  // lower endpoint
    VertexId head;  // higher endpoint
    EdgeLabel label;
};

// Finite digraph with rational vertex heights and sphere/torus edge labels.
// Orientation is induced by the heights (edges run strictly upward), so
// self-loops cannot exist while parallel edges are fine. Values are built
// once and then treated as immutable; all operations below are pure.
class LabeledDigraph {
public:
    VertexId add_vertex(Rational height, std::string name = {}) {
        heights_.push_back(std::move(height));
        names_.push_back(std::move(name));
        out_.emplace_back();
        in_.emplace_back();
        return static_cast<VertexId>(heights_.size() - 1);
    }

    // Stores the edge oriented from the lower endpoint to the higher one,
    // whichever order the endpoints were given in.
    std::size_t add_edge(VertexId a, VertexId b, EdgeLabel label) {
        check_vertex(a);
        check_vertex(b);
        if (heights_[a] == heights_[b])
            throw graph_error("edge endpoints must have distinct heights");
        if (heights_[a] > heights_[b]) std::swap(a, b);
        edges_.push_back(Edge{a, b, label});
        const std::size_t idx = edges_.size() - 1;
        out_[a].push_back(idx);
        in_[b].push_back(idx);
        return idx;
    }

    std::size_t vertex_count() const { return heights_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Rational& height(VertexId v) const {
        check_vertex(v);
        return heights_[v];
    }

    std::string name(VertexId v) const {
        check_vertex(v);
        if (!names_[v].empty()) return names_[v];
        return std::to_string(v);
    }

    VertexId find_vertex(std::string_view name) const {
        for (VertexId v = 0; v < names_.size(); ++v)
            if (names_[v] == name) return v;
        return no_vertex;
    }

    const Edge& edge(std::size_t e) const {
        if (e >= edges_.size()) throw precondition_error("unknown edge index");
        return edges_[e];
    }
    const std::vector<Edge>& edges() const { return edges_; }

    // Edge indices incident from below / above.
    const std::vector<std::size_t>& out_edges(VertexId v) const {
        check_vertex(v);
        return out_[v];
    }
    const std::vector<std::size_t>& in_edges(VertexId v) const {
        check_vertex(v);
        return in_[v];
    }

    std::size_t degree(VertexId v) const {
        check_vertex(v);
        return out_[v].size() + in_[v].size();
    }

    bool is_connected() const {
        if (heights_.empty()) return true;
        std::vector<char> seen(heights_.size(), 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t visited = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            auto visit = [&](VertexId w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
            };
            for (std::size_t e : out_[v]) visit(edges_[e].head);
            for (std::size_t e : in_[v]) visit(edges_[e].tail);
        }
        return visited == heights_.size();
    }

    LabeledDigraph with_edge_label(std::size_t e, EdgeLabel label) const {
        if (e >= edges_.size()) throw precondition_error("unknown edge index");
        LabeledDigraph copy = *this;
        copy.edges_[e].label = label;
        return copy;
    }

private:
    void check_vertex(VertexId v) const {
        if (v >= heights_.size()) throw precondition_error("unknown vertex id");
    }

    std::vector<Rational> heights_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

// Incoming/outgoing edge counts at a vertex split by label.
struct VertexProfile {
    int in_spheres = 0;
    int in_tori = 0;
    int out_spheres = 0;
    int out_tori = 0;

    int degree() const { return in_spheres + in_tori + out_spheres + out_tori; }
    int in_degree() const { return in_spheres + in_tori; }
    int out_degree() const { return out_spheres + out_tori; }

    bool operator==(const VertexProfile&) const = default;
};

// (a, b, c): cycle rank, degree-2 sphere-sphere vertex count, torus edge count.
struct InvariantTriple {
    int a = 0;
    int b = 0;
    int c = 0;

    bool operator==(const InvariantTriple&) const = default;
};

enum class Extremality { LocalMin, LocalMax, NotExtremal };

inline VertexProfile vertex_profile(const LabeledDigraph& g, VertexId v) {
    VertexProfile p;
    for (std::size_t e : g.in_edges(v))
        (g.edge(e).label == EdgeLabel::Sphere ? p.in_spheres : p.in_tori)++;
    for (std::size_t e : g.out_edges(v))
        (g.edge(e).label == EdgeLabel::Sphere ? p.out_spheres : p.out_tori)++;
    return p;
}

// Isolated vertices read as minima here; the validator rejects them anyway.
inline Extremality is_extremal(const LabeledDigraph& g, VertexId v) {
    const std::size_t in = g.in_edges(v).size();
    const std::size_t out = g.out_edges(v).size();
    if (in == 0) return Extremality::LocalMin;
    if (out == 0) return Extremality::LocalMax;
    return Extremality::NotExtremal;
}

inline int betti_number(const LabeledDigraph& g) {
    if (!g.is_connected()) throw precondition_error("betti_number requires a connected graph");
    return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

// b is purely combinatorial (degree 2, both incident labels Sphere) and in
// particular still counts extremal vertices; on validator-accepted graphs the
// two readings agree because degree-2 extrema are rejected there.
inline InvariantTriple invariant_triple(const LabeledDigraph& g) {
    InvariantTriple t;
    t.a = betti_number(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        const VertexProfile p = vertex_profile(g, v);
        if (p.in_tori == 0 && p.out_tori == 0) ++t.b;
    }
    for (const Edge& e : g.edges())
        if (e.label == EdgeLabel::Torus) ++t.c;
    return t;
}

}  // namespace sstf
