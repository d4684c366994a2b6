#pragma once

#include "sstf/moves.hpp"

#include <utility>
#include <vector>

namespace sstf {

enum class RealizabilityIssue : std::uint8_t {
    ExtremalTorus,       // degree-1 vertex whose edge carries a torus fiber
    ExtremalHighDegree,  // local extremum of degree >= 2
    NoIncoming,
    NoOutgoing,
};

inline const char* issue_name(RealizabilityIssue i) {
    switch (i) {
        case RealizabilityIssue::ExtremalTorus: return "ExtremalTorus";
        case RealizabilityIssue::ExtremalHighDegree: return "ExtremalHighDegree";
        case RealizabilityIssue::NoIncoming: return "NoIncoming";
        case RealizabilityIssue::NoOutgoing: return "NoOutgoing";
    }
    return "?";
}

struct RealizabilityResult {
    bool accepted = false;
    std::vector<RealizabilityIssue> issues;

    explicit operator bool() const { return accepted; }
};

// Per-vertex realizability. A local extremum must sit at a degree-1 vertex
// whose edge carries the allowed label (a regular level just past a birth or
// death is a sphere, so Sphere is the only legal choice in this theory);
// any other vertex only needs at least one edge on each side. The profile
// (1,0,1,0) is accepted here and picks up its k >= 1 requirement at
// scheduling time.
inline RealizabilityResult vertex_realizable(const VertexProfile& p,
                                             EdgeLabel deg1_allowed_label = EdgeLabel::Sphere) {
    RealizabilityResult r;
    if (p.degree() == 0) {
        r.issues = {RealizabilityIssue::NoIncoming, RealizabilityIssue::NoOutgoing};
        return r;
    }
    if (p.in_degree() == 0 || p.out_degree() == 0) {  // extremal
        if (p.degree() != 1) {
            r.issues.push_back(RealizabilityIssue::ExtremalHighDegree);
        }
        const int allowed = (deg1_allowed_label == EdgeLabel::Sphere)
                                ? p.in_spheres + p.out_spheres
                                : p.in_tori + p.out_tori;
        if (allowed != p.degree()) r.issues.push_back(RealizabilityIssue::ExtremalTorus);
        r.accepted = r.issues.empty();
        return r;
    }
    r.accepted = true;
    return r;
}

inline bool is_pass_through_profile(const VertexProfile& p) {
    return p == VertexProfile{1, 0, 1, 0};
}

// Number of critical points a vertex with profile p contributes when given
// k surplus handle pairs. Extrema contribute a single birth or death; the
// sphere-in/sphere-out pass-through vertex owns exactly its 2k surplus
// points and therefore needs k >= 1; every other vertex needs
// 2*in_tori + in_spheres + 2*out_tori + out_spheres - 2 points plus 2k.
inline int singular_count(const VertexProfile& p, int surplus) {
    if (surplus < 0) throw precondition_error("surplus must be non-negative");
    if (!vertex_realizable(p).accepted)
        throw precondition_error("profile is not realizable");
    if (p.in_degree() == 0 || p.out_degree() == 0) {
        if (surplus != 0) throw precondition_error("extremal vertices take no surplus pairs");
        return 1;
    }
    if (is_pass_through_profile(p)) {
        if (surplus < 1)
            throw precondition_error("profile (1,0,1,0) requires at least one surplus pair");
        return 2 * surplus;
    }
    return 2 * p.in_tori + p.in_spheres + 2 * p.out_tori + p.out_spheres - 2 + 2 * surplus;
}

struct VertexSchedule {
    VertexId owner = no_vertex;
    std::vector<HandleMove> moves;
    int surplus = 0;
};

// Ordered handle moves realizing one vertex, acting on the inventory of its
// incoming edges. Targets follow the lowest-eligible-position rule in the
// canonical component order, which keeps schedules reproducible.
//
// Phases for a general interior vertex:
//   1. in_tori GenusDown moves             (tori -> spheres)
//   2. in-degree - 1 Merge moves           (down to one sphere)
//      + k alternating (Split, Merge) pairs at the single-sphere stage
//   3. out-degree - 1 Split moves          (up to out-degree spheres)
//   4. out_tori GenusUp moves              (spheres -> tori)
//
// The pass-through profile (1,0,1,0) instead gets its k 2-handles first and
// the k reconnecting 1-handles afterwards: k Splits, then k Merges.
inline VertexSchedule expand_vertex(const VertexProfile& p, int surplus,
                                    VertexId owner = no_vertex) {
    const int total = singular_count(p, surplus);  // validates the arguments
    VertexSchedule sched;
    sched.owner = owner;
    sched.surplus = surplus;
    sched.moves.reserve(static_cast<std::size_t>(total));

    if (p.in_degree() == 0) {
        sched.moves.push_back(HandleMove::birth());
        return sched;
    }
    if (p.out_degree() == 0) {
        sched.moves.push_back(HandleMove::death(0));
        return sched;
    }
    if (is_pass_through_profile(p)) {
        for (int i = 0; i < surplus; ++i) sched.moves.push_back(HandleMove::split(0));
        for (int i = 0; i < surplus; ++i) sched.moves.push_back(HandleMove::merge(0, 1));
        return sched;
    }

    for (int i = 0; i < p.in_tori; ++i) sched.moves.push_back(HandleMove::genus_down(0));
    for (int i = 0; i < p.in_degree() - 1; ++i) sched.moves.push_back(HandleMove::merge(0, 1));
    for (int i = 0; i < surplus; ++i) {
        sched.moves.push_back(HandleMove::split(0));
        sched.moves.push_back(HandleMove::merge(0, 1));
    }
    for (int i = 0; i < p.out_degree() - 1; ++i) sched.moves.push_back(HandleMove::split(0));
    // Tori made so far occupy the leading positions, so the j-th genus-up
    // targets the sphere at position j.
    for (int j = 0; j < p.out_tori; ++j) sched.moves.push_back(HandleMove::genus_up(j));
    return sched;
}

// Closed-form (spheres, tori) inventory of the j-th regular interval of an
// interior vertex's local model with no surplus pairs. Interval 0 sits below
// the first critical value, interval singular_count(p, 0) above the last.
inline std::pair<int, int> inventory_formula(const VertexProfile& p, int j) {
    if (p.in_degree() == 0 || p.out_degree() == 0)
        throw precondition_error("inventory_formula applies to interior vertices only");
    if (!vertex_realizable(p).accepted)
        throw precondition_error("profile is not realizable");
    const int i_s = p.in_spheres, i_t = p.in_tori;
    const int o_s = p.out_spheres, o_t = p.out_tori;
    const int last = 2 * i_t + i_s + 2 * o_t + o_s - 2;
    if (j < 0 || j > last) throw precondition_error("interval index out of range");

    if (j <= i_t) return {i_s + j, i_t - j};
    if (j <= 2 * i_t + i_s - 1) return {i_s + 2 * i_t - j, 0};
    if (j <= 2 * i_t + i_s + o_s + o_t - 2) return {j - 2 * i_t - i_s + 2, 0};
    const int tori = j - 2 * i_t - i_s - o_s - o_t + 2;
    return {o_s + o_t - tori, tori};
}

}  // namespace sstf
