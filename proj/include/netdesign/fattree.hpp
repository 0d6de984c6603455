// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "netdesign/catalog.hpp"
#include "netdesign/rational.hpp"

namespace netdesign {

/// Which switch models may serve as the core tier.
enum class CoreMode {
    Modular,    // configs tagged fattree_core (modular chassis switches)
    EdgeClass,  // the edge model itself, top and bottom tiers alike
};

enum class FatTreeStructure { Star, TwoLevel };

const char* to_string(FatTreeStructure s);
const char* to_string(CoreMode m);

/// A priced fat-tree (or degenerate single-switch star) candidate. A star
/// occupies the core slot alone: edge_count = 0, core_count = 1.
struct FatTreeDesign {
    FatTreeStructure structure = FatTreeStructure::Star;
    std::optional<SwitchConfig> edge;
    std::int64_t edge_count = 0;
    std::optional<SwitchConfig> core;
    std::int64_t core_count = 0;
    int down_ports = 0;  // per edge switch, to nodes
    int up_ports = 0;    // per edge switch, to the core tier
    std::int64_t cable_count = 0;
    Rational resulting_blocking = Rational(1);

    std::int64_t total_switches() const { return edge_count + core_count; }
};

struct EdgeSplit {
    int down = 0;
    int up = 0;
};

/// Same floor rule as the torus port split, applied to an edge switch.
/// Throws InfeasibleError if either side collapses to zero ports.
EdgeSplit edge_split(int edge_ports, const Rational& blocking);

/// Cheapest single switch with enough ports for every node, from all
/// edge- or core-capable configs. Empty when no chassis is big enough;
/// the caller is expected to fall through to a two-level build.
std::optional<FatTreeDesign> design_star(std::int64_t nodes, const EquipmentCatalog& catalog);

/// Two-level build: the designated edge config fans out to k identical core
/// switches chosen for minimum cost. Every edge switch links to every core
/// switch, so only cores with at least edge_count ports qualify; that wiring
/// rule is what caps non-blocking trees at edge_ports * core_ports / 2 nodes.
/// Empty when no core selection satisfies the uplink demand.
std::optional<FatTreeDesign> design_two_level(std::int64_t nodes,
                                              const Rational& blocking,
                                              const EquipmentCatalog& catalog,
                                              CoreMode core_mode);

/// Evaluates the admissible candidates (a star only for non-blocking
/// requests) and returns the cheapest by total cost including cables;
/// ties break to fewer switches, then lower power. Throws InfeasibleError
/// when nothing fits.
FatTreeDesign design_fattree(std::int64_t nodes,
                             const Rational& blocking,
                             const EquipmentCatalog& catalog,
                             CoreMode core_mode);

}  // namespace netdesign
