// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "netdesign/rational.hpp"

namespace netdesign {

/// What the caller wants interconnected: N compute nodes through identical
/// switches with `switch_ports` ports each, at the given blocking factor
/// (node-facing ports : fabric-facing ports; 1 means non-blocking).
struct DesignRequest {
    std::int64_t nodes = 0;
    Rational blocking = Rational(1);
    int switch_ports = 36;
};

/// How one switch's ports divide between compute nodes and the fabric.
struct PortSplit {
    int to_nodes = 0;
    int to_switches = 0;
    Rational resulting_blocking;
};

enum class TopologyKind { Star, Ring, Torus };

const char* to_string(TopologyKind kind);

/// A sized switch lattice: everything needed to order hardware and cables.
struct TorusDesign {
    TopologyKind topology = TopologyKind::Star;
    int dim_count = 1;              // D; 1 for star and ring
    std::vector<int> dims;          // switches per dimension; empty for star
    std::int64_t switch_count = 1;  // E
    PortSplit split;
    std::int64_t cable_count = 0;   // L, node cables included
    int bundle_size = 0;            // parallel links per neighbour pair
    std::int64_t max_nodes = 0;     // node capacity of the built plant
    int unused_ports_per_switch = 0;
};

/// Integer port split: to_nodes = floor(P * Bl / (1 + Bl)), remainder to the
/// fabric. Throws InfeasibleError when the blocking factor rounds the
/// node-facing share down to zero.
PortSplit split_ports(const DesignRequest& request);

/// ceil(nodes / ports_to_nodes).
std::int64_t min_switch_count(std::int64_t nodes, int ports_to_nodes);

/// Dimension-count lookup, by switch count: 2-3 -> 1 (ring), up to 36 -> 2,
/// up to 125 -> 3, up to 2401 -> 4, beyond -> 5.
int dim_count_heuristic(std::int64_t switch_count);

struct DimensionLayout {
    std::vector<int> dims;
    std::int64_t switch_count = 0;  // product of dims; >= the requested minimum
};

/// Near-cubic layout: the first D-1 dimensions get round(min_switches^(1/D))
/// switches (halves away from zero, computed in integer arithmetic), the last
/// takes the ceiling that restores capacity. Dimensions are clamped to >= 2.
DimensionLayout dimension_layout(std::int64_t min_switches, int dim_count);

/// nodes + floor(switches * fabric_ports / 2); one port systemwide stays dark
/// when the product is odd.
std::int64_t cable_count(std::int64_t nodes, std::int64_t switch_count, int ports_to_switches);

/// floor(fabric_ports / (2 * dims)): parallel links per neighbour direction.
int bundle_size(int ports_to_switches, int dim_count);

/// Node capacity of the built plant: switches * node-facing ports.
std::int64_t expandability(std::int64_t switch_count, int ports_to_nodes);

/// Full synthesis: star when one switch suffices, else ring or torus sized
/// by the heuristic. Pure and deterministic.
TorusDesign design_torus(const DesignRequest& request);

}  // namespace netdesign
