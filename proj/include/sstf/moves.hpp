#pragma once

#include "sstf/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sstf {

// The six elementary level-set transitions a handle attachment can cause on
// a closed orientable surface inventory, with their Morse indices:
//   Birth      0-handle, a sphere appears
//   Merge      1-handle joining two components (genera add)
//   GenusUp    1-handle on one component, genus + 1
//   Split      2-handle along a separating circle, component -> {sphere, rest}
//   GenusDown  2-handle along a non-separating circle, genus - 1
//   Death      3-handle capping a sphere off
enum class MoveKind : std::uint8_t { Birth, Merge, GenusUp, Split, GenusDown, Death };

constexpr int morse_index(MoveKind k) {
    switch (k) {
        case MoveKind::Birth: return 0;
        case MoveKind::Merge:
        case MoveKind::GenusUp: return 1;
        case MoveKind::Split:
        case MoveKind::GenusDown: return 2;
        case MoveKind::Death: return 3;
    }
    return -1;
}

// Change in the Euler characteristic of the level set across the move.
constexpr int chi_delta(MoveKind k) {
    switch (k) {
        case MoveKind::Birth:
        case MoveKind::Split:
        case MoveKind::GenusDown: return +2;
        case MoveKind::Merge:
        case MoveKind::GenusUp:
        case MoveKind::Death: return -2;
    }
    return 0;
}

constexpr int target_arity(MoveKind k) {
    switch (k) {
        case MoveKind::Birth: return 0;
        case MoveKind::Merge: return 2;
        default: return 1;
    }
}

inline const char* move_name(MoveKind k) {
    switch (k) {
        case MoveKind::Birth: return "Birth";
        case MoveKind::Merge: return "Merge";
        case MoveKind::GenusUp: return "GenusUp";
        case MoveKind::Split: return "Split";
        case MoveKind::GenusDown: return "GenusDown";
        case MoveKind::Death: return "Death";
    }
    return "?";
}

// A handle move plus its target components. Targets are positions in the
// canonically sorted inventory (genus descending, older components first):
// two for Merge, one for most moves, none for Birth.
struct HandleMove {
    MoveKind kind = MoveKind::Birth;
    std::array<int, 2> targets{-1, -1};

    static HandleMove birth() { return {MoveKind::Birth, {-1, -1}}; }
    static HandleMove merge(int a, int b) { return {MoveKind::Merge, {a, b}}; }
    static HandleMove genus_up(int a) { return {MoveKind::GenusUp, {a, -1}}; }
    static HandleMove split(int a) { return {MoveKind::Split, {a, -1}}; }
    static HandleMove genus_down(int a) { return {MoveKind::GenusDown, {a, -1}}; }
    static HandleMove death(int a) { return {MoveKind::Death, {a, -1}}; }

    int target() const { return targets[0]; }
    int target2() const { return targets[1]; }

    bool operator==(const HandleMove&) const = default;
};

inline std::string to_string(const HandleMove& m) {
    std::string s = move_name(m.kind);
    const int n = target_arity(m.kind);
    if (n >= 1) s += "(" + std::to_string(m.targets[0]);
    if (n == 2) s += "," + std::to_string(m.targets[1]);
    if (n >= 1) s += ")";
    return s;
}

// Multiset of component genera of a regular level set, kept sorted genus
// descending so that positions are canonical.
class SurfaceInventory {
public:
    SurfaceInventory() = default;

    explicit SurfaceInventory(std::vector<int> genera) : genera_(std::move(genera)) {
        for (int g : genera_)
            if (g < 0) throw precondition_error("component genus must be non-negative");
        std::sort(genera_.begin(), genera_.end(), std::greater<int>());
    }

    static SurfaceInventory spheres_tori(int spheres, int tori) {
        if (spheres < 0 || tori < 0) throw precondition_error("negative component count");
        std::vector<int> g(static_cast<std::size_t>(spheres + tori), 0);
        std::fill(g.begin(), g.begin() + tori, 1);
        return SurfaceInventory(std::move(g));
    }

    int size() const { return static_cast<int>(genera_.size()); }
    bool empty() const { return genera_.empty(); }
    int genus(int i) const { return genera_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& genera() const { return genera_; }

    int spheres() const { return count_genus(0); }
    int tori() const { return count_genus(1); }
    int max_genus() const { return genera_.empty() ? -1 : genera_.front(); }

    int euler_characteristic() const {
        int chi = 0;
        for (int g : genera_) chi += 2 - 2 * g;
        return chi;
    }

    SurfaceInventory erased(int i) const {
        auto g = genera_;
        g.erase(g.begin() + i);
        SurfaceInventory out;
        out.genera_ = std::move(g);
        return out;
    }

    SurfaceInventory inserted(int genus) const {
        auto g = genera_;
        g.insert(std::upper_bound(g.begin(), g.end(), genus, std::greater<int>()), genus);
        SurfaceInventory out;
        out.genera_ = std::move(g);
        return out;
    }

    bool operator==(const SurfaceInventory&) const = default;

private:
    int count_genus(int target) const {
        int n = 0;
        for (int g : genera_) n += (g == target);
        return n;
    }

    std::vector<int> genera_;  // sorted descending
};

inline std::string to_string(const SurfaceInventory& inv) {
    std::string s = "{";
    for (int i = 0; i < inv.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(inv.genus(i));
    }
    return s + "}";
}

}  // namespace sstf
