#pragma once

#include "sstf/moves.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sstf {

// SstfOnly refuses any move that would produce a component of genus >= 2;
// AllowAnyGenus is for negative tests against the general-genus world.
enum class GenusPolicy { SstfOnly, AllowAnyGenus };

struct simulation_error : graph_error {
    explicit simulation_error(const std::string& what, std::size_t step = static_cast<std::size_t>(-1))
        : graph_error(what), step(step) {}
    std::size_t step;
};

// Applies one handle move to an inventory, checking the move's local rule.
inline SurfaceInventory apply_move(const SurfaceInventory& inv, const HandleMove& m,
                                   GenusPolicy policy = GenusPolicy::SstfOnly) {
    auto check_target = [&](int t) {
        if (t < 0 || t >= inv.size())
            throw simulation_error(std::string(move_name(m.kind)) + ": missing target component " +
                                   std::to_string(t));
    };
    auto check_genus = [&](int genus) {
        if (policy == GenusPolicy::SstfOnly && genus >= 2)
            throw simulation_error(std::string(move_name(m.kind)) +
                                   " would produce a genus-" + std::to_string(genus) +
                                   " component (not a sphere or torus)");
        return genus;
    };

    switch (m.kind) {
        case MoveKind::Birth:
            return inv.inserted(0);
        case MoveKind::Death: {
            check_target(m.target());
            if (inv.genus(m.target()) != 0)
                throw simulation_error("Death requires a genus-0 target");
            return inv.erased(m.target());
        }
        case MoveKind::Merge: {
            check_target(m.target());
            check_target(m.target2());
            if (m.target() == m.target2())
                throw simulation_error("Merge requires two distinct components");
            const int g = check_genus(inv.genus(m.target()) + inv.genus(m.target2()));
            const int hi = std::max(m.target(), m.target2());
            const int lo = std::min(m.target(), m.target2());
            return inv.erased(hi).erased(lo).inserted(g);
        }
        case MoveKind::GenusUp: {
            check_target(m.target());
            const int g = check_genus(inv.genus(m.target()) + 1);
            return inv.erased(m.target()).inserted(g);
        }
        case MoveKind::Split: {
            check_target(m.target());
            return inv.inserted(0);
        }
        case MoveKind::GenusDown: {
            check_target(m.target());
            if (inv.genus(m.target()) < 1)
                throw simulation_error("GenusDown requires a target of genus >= 1");
            return inv.erased(m.target()).inserted(inv.genus(m.target()) - 1);
        }
    }
    throw internal_error("unhandled move kind");
}

struct TraceStep {
    SurfaceInventory before;
    HandleMove move;
    SurfaceInventory after;
};

struct Trace {
    SurfaceInventory start;
    std::vector<TraceStep> steps;

    const SurfaceInventory& final_inventory() const {
        return steps.empty() ? start : steps.back().after;
    }
};

inline Trace run_schedule(SurfaceInventory start, std::span<const HandleMove> moves,
                          GenusPolicy policy = GenusPolicy::SstfOnly) {
    Trace trace;
    trace.start = std::move(start);
    SurfaceInventory current = trace.start;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        SurfaceInventory next;
        try {
            next = apply_move(current, moves[i], policy);
        } catch (const simulation_error& e) {
            throw simulation_error("step " + std::to_string(i) + ": " + e.what(), i);
        }
        trace.steps.push_back(TraceStep{current, moves[i], next});
        current = std::move(next);
    }
    return trace;
}

// Signed count of critical points; zero for any closed-manifold schedule.
inline int euler_sum(std::span<const HandleMove> moves) {
    int sum = 0;
    for (const HandleMove& m : moves) sum += (morse_index(m.kind) % 2 == 0) ? 1 : -1;
    return sum;
}

}  // namespace sstf
