// SPDX-License-Identifier: Apache-2.0

#include "netdesign/fattree.hpp"

#include <fmt/format.h>

#include <limits>
#include <optional>
#include <vector>

#include "netdesign/errors.hpp"
#include "netdesign/metrics.hpp"

namespace netdesign {

namespace {

// Above this the wiring loom is impractical and the search stops caring.
constexpr std::int64_t kMaxCoreSwitches = 64;

void validate(std::int64_t nodes, const Rational& blocking) {
    if (nodes < 1) throw ValidationError(fmt::format("node count must be positive, got {}", nodes));
    if (!blocking.positive()) throw ValidationError("blocking factor must be positive");
}

std::optional<FatTreeDesign> star_from_roles(std::int64_t nodes,
                                             const EquipmentCatalog& catalog,
                                             RoleMask roles) {
    const SwitchConfig* best = nullptr;
    for (const SwitchConfig& sw : catalog.switches()) {
        if ((sw.roles & roles) == 0) continue;
        if (static_cast<std::int64_t>(sw.ports) < nodes) continue;
        const bool wins = best == nullptr || sw.cost < best->cost ||
                          (sw.cost == best->cost && sw.ports < best->ports) ||
                          (sw.cost == best->cost && sw.ports == best->ports && sw.model < best->model);
        if (wins) best = &sw;
    }
    if (best == nullptr) return std::nullopt;

    FatTreeDesign design;
    design.structure = FatTreeStructure::Star;
    design.core = *best;
    design.core_count = 1;
    design.cable_count = nodes;
    design.resulting_blocking = Rational(1);
    return design;
}

// (total cost, switch count, power) lexicographic minimum.
bool improves(const DesignMetrics& candidate, const FatTreeDesign& candidate_design,
              const DesignMetrics& best, const FatTreeDesign& best_design) {
    if (candidate.total_cost != best.total_cost) return candidate.total_cost < best.total_cost;
    if (candidate_design.total_switches() != best_design.total_switches())
        return candidate_design.total_switches() < best_design.total_switches();
    return candidate.power_w < best.power_w;
}

}  // namespace

const char* to_string(FatTreeStructure s) {
    switch (s) {
        case FatTreeStructure::Star: return "star";
        case FatTreeStructure::TwoLevel: return "two-level";
    }
    return "?";
}

const char* to_string(CoreMode m) {
    switch (m) {
        case CoreMode::Modular: return "modular";
        case CoreMode::EdgeClass: return "edge36";
    }
    return "?";
}

EdgeSplit edge_split(int edge_ports, const Rational& blocking) {
    if (edge_ports < 2) throw ValidationError("edge switch needs at least 2 ports");
    if (!blocking.positive()) throw ValidationError("blocking factor must be positive");
    const __int128 numer = static_cast<__int128>(edge_ports) * blocking.num();
    const __int128 denom = static_cast<__int128>(blocking.num()) + blocking.den();
    EdgeSplit split;
    split.down = static_cast<int>(numer / denom);
    split.up = edge_ports - split.down;
    if (split.down < 1 || split.up < 1)
        throw InfeasibleError(fmt::format("blocking factor {} cannot split {} edge ports",
                                          blocking.to_string(), edge_ports));
    return split;
}

std::optional<FatTreeDesign> design_star(std::int64_t nodes, const EquipmentCatalog& catalog) {
    validate(nodes, Rational(1));
    return star_from_roles(nodes, catalog, role_bit(Role::FatTreeEdge) | role_bit(Role::FatTreeCore));
}

std::optional<FatTreeDesign> design_two_level(std::int64_t nodes,
                                              const Rational& blocking,
                                              const EquipmentCatalog& catalog,
                                              CoreMode core_mode) {
    validate(nodes, blocking);

    std::optional<FatTreeDesign> best;
    DesignMetrics best_metrics;

    for (const SwitchConfig& edge : catalog.configs_for_role(Role::FatTreeEdge)) {
        EdgeSplit split;
        try {
            split = edge_split(edge.ports, blocking);
        } catch (const InfeasibleError&) {
            continue;
        }
        const std::int64_t edge_count = (nodes + split.down - 1) / split.down;
        const __int128 uplinks_wide = static_cast<__int128>(edge_count) * split.up;
        if (uplinks_wide > std::numeric_limits<std::int64_t>::max()) continue;
        const auto uplinks = static_cast<std::int64_t>(uplinks_wide);

        std::vector<SwitchConfig> core_choices;
        if (core_mode == CoreMode::Modular)
            core_choices = catalog.configs_for_role(Role::FatTreeCore);
        else
            core_choices.push_back(edge);

        const SwitchConfig* core = nullptr;
        std::int64_t core_count = 0;
        __int128 core_cost = 0;
        for (const SwitchConfig& c : core_choices) {
            // Every edge switch wires to every core switch, so the core must
            // offer one port per edge switch. This is the constraint that caps
            // node counts at edge_ports * core_ports / 2 for non-blocking trees.
            if (edge_count > c.ports) continue;
            const std::int64_t k = (uplinks + c.ports - 1) / c.ports;
            if (k > kMaxCoreSwitches) continue;
            const __int128 cost = static_cast<__int128>(k) * c.cost;
            const bool wins = core == nullptr || cost < core_cost ||
                              (cost == core_cost && k < core_count) ||
                              (cost == core_cost && k == core_count && c.ports < core->ports) ||
                              (cost == core_cost && k == core_count && c.ports == core->ports &&
                               c.model < core->model);
            if (wins) {
                core = &c;
                core_count = k;
                core_cost = cost;
            }
        }
        if (core == nullptr) continue;

        FatTreeDesign candidate;
        candidate.structure = FatTreeStructure::TwoLevel;
        candidate.edge = edge;
        candidate.edge_count = edge_count;
        candidate.core = *core;
        candidate.core_count = core_count;
        candidate.down_ports = split.down;
        candidate.up_ports = split.up;
        candidate.cable_count = nodes + uplinks;
        candidate.resulting_blocking = Rational(split.down, split.up);

        const DesignMetrics metrics = metrics_for_fattree(candidate, catalog, nodes);
        if (!best || improves(metrics, candidate, best_metrics, *best)) {
            best = std::move(candidate);
            best_metrics = metrics;
        }
    }
    return best;
}

FatTreeDesign design_fattree(std::int64_t nodes,
                             const Rational& blocking,
                             const EquipmentCatalog& catalog,
                             CoreMode core_mode) {
    validate(nodes, blocking);

    std::optional<FatTreeDesign> best;
    DesignMetrics best_metrics;
    const auto consider = [&](std::optional<FatTreeDesign> candidate) {
        if (!candidate) return;
        const DesignMetrics metrics = metrics_for_fattree(*candidate, catalog, nodes);
        if (!best || improves(metrics, *candidate, best_metrics, *best)) {
            best = std::move(candidate);
            best_metrics = metrics;
        }
    };

    if (blocking == Rational(1)) {
        // A single crossbar is only non-blocking, so a star never satisfies a
        // deliberately oversubscribed request. Edge-class builds draw the star
        // from edge-capable models only.
        const RoleMask roles = core_mode == CoreMode::Modular
                                   ? role_bit(Role::FatTreeEdge) | role_bit(Role::FatTreeCore)
                                   : role_bit(Role::FatTreeEdge);
        consider(star_from_roles(nodes, catalog, roles));
    }
    consider(design_two_level(nodes, blocking, catalog, core_mode));

    if (!best)
        throw InfeasibleError(fmt::format("no {} fat-tree covers {} nodes at blocking {}",
                                          to_string(core_mode), nodes, blocking.to_string()));
    return *best;
}

}  // namespace netdesign
