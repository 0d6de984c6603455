// SPDX-License-Identifier: Apache-2.0

#include "netdesign/torus.hpp"

#include <fmt/format.h>

#include <limits>

#include "netdesign/errors.hpp"

namespace netdesign {

namespace {

// Generous guard rails; the formulas stay inside int64 under these.
constexpr std::int64_t kMaxNodes = 1'000'000'000'000;
constexpr int kMaxPorts = 1'000'000;

void validate(const DesignRequest& request) {
    if (request.nodes < 1)
        throw ValidationError(fmt::format("node count must be positive, got {}", request.nodes));
    if (request.nodes > kMaxNodes)
        throw ValidationError(fmt::format("node count {} exceeds supported maximum", request.nodes));
    if (request.switch_ports < 2 || request.switch_ports > kMaxPorts)
        throw ValidationError(fmt::format("switch port count {} out of range", request.switch_ports));
    if (!request.blocking.positive())
        throw ValidationError("blocking factor must be positive");
}

std::int64_t checked(__int128 value, const char* what) {
    if (value > std::numeric_limits<std::int64_t>::max())
        throw ValidationError(fmt::format("{} overflows", what));
    return static_cast<std::int64_t>(value);
}

// floor(value^(1/degree)) by bisection on f^degree <= value.
std::int64_t floor_root(std::int64_t value, int degree) {
    std::int64_t lo = 1;
    std::int64_t hi = value;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        __int128 power = 1;
        bool over = false;
        for (int i = 0; i < degree && !over; ++i) {
            power *= mid;
            if (power > value) over = true;
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    return lo;
}

// round(value^(1/degree)), halves away from zero, in exact integer
// arithmetic: round up iff value^(1/degree) >= f + 1/2, i.e.
// 2^degree * value >= (2f + 1)^degree.
std::int64_t nearest_root(std::int64_t value, int degree) {
    const std::int64_t f = floor_root(value, degree);
    __int128 lhs = value;
    for (int i = 0; i < degree; ++i) lhs *= 2;
    __int128 rhs = 1;
    for (int i = 0; i < degree; ++i) rhs *= 2 * f + 1;
    return lhs >= rhs ? f + 1 : f;
}

}  // namespace

const char* to_string(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::Star: return "star";
        case TopologyKind::Ring: return "ring";
        case TopologyKind::Torus: return "torus";
    }
    return "?";
}

PortSplit split_ports(const DesignRequest& request) {
    validate(request);
    const std::int64_t p = request.blocking.num();
    const std::int64_t q = request.blocking.den();
    // floor(P * Bl / (1 + Bl)) == floor(P * p / (p + q)), exactly.
    const __int128 numer = static_cast<__int128>(request.switch_ports) * p;
    const __int128 denom = static_cast<__int128>(p) + q;
    const auto to_nodes = static_cast<std::int64_t>(numer / denom);
    if (to_nodes < 1)
        throw InfeasibleError(
            fmt::format("blocking factor {} leaves no node-facing ports on a {}-port switch",
                        request.blocking.to_string(), request.switch_ports));
    PortSplit split;
    split.to_nodes = static_cast<int>(to_nodes);
    split.to_switches = request.switch_ports - split.to_nodes;
    split.resulting_blocking = Rational(split.to_nodes, split.to_switches);
    return split;
}

std::int64_t min_switch_count(std::int64_t nodes, int ports_to_nodes) {
    if (nodes < 1 || ports_to_nodes < 1) throw ValidationError("min_switch_count needs positive inputs");
    return (nodes + ports_to_nodes - 1) / ports_to_nodes;
}

int dim_count_heuristic(std::int64_t switch_count) {
    if (switch_count <= 3) return 1;
    if (switch_count <= 36) return 2;
    if (switch_count <= 125) return 3;
    if (switch_count <= 2401) return 4;
    return 5;
}

DimensionLayout dimension_layout(std::int64_t min_switches, int dim_count) {
    if (min_switches < 1) throw ValidationError("dimension_layout needs a positive switch count");
    if (dim_count < 1 || dim_count > 16) throw ValidationError("dimension count out of range");

    DimensionLayout layout;
    std::int64_t base = nearest_root(min_switches, dim_count);
    if (base < 2) base = 2;

    __int128 head = 1;
    for (int i = 0; i + 1 < dim_count; ++i) {
        layout.dims.push_back(static_cast<int>(base));
        head *= base;
    }
    __int128 last = (min_switches + head - 1) / head;
    if (last < 2) last = 2;
    layout.dims.push_back(static_cast<int>(checked(last, "dimension size")));
    layout.switch_count = checked(head * last, "switch count");
    return layout;
}

std::int64_t cable_count(std::int64_t nodes, std::int64_t switch_count, int ports_to_switches) {
    const __int128 fabric = static_cast<__int128>(switch_count) * ports_to_switches / 2;
    return checked(static_cast<__int128>(nodes) + fabric, "cable count");
}

int bundle_size(int ports_to_switches, int dim_count) {
    if (dim_count < 1) throw ValidationError("bundle_size needs a positive dimension count");
    return ports_to_switches / (2 * dim_count);
}

std::int64_t expandability(std::int64_t switch_count, int ports_to_nodes) {
    return checked(static_cast<__int128>(switch_count) * ports_to_nodes, "node capacity");
}

TorusDesign design_torus(const DesignRequest& request) {
    validate(request);

    TorusDesign design;
    if (request.switch_ports >= request.nodes) {
        design.topology = TopologyKind::Star;
        design.dim_count = 1;
        design.switch_count = 1;
        design.split.to_nodes = request.switch_ports;
        design.split.to_switches = 0;
        design.split.resulting_blocking = Rational(1);
        design.cable_count = request.nodes;
        design.bundle_size = 0;
        design.max_nodes = request.switch_ports;
        design.unused_ports_per_switch = static_cast<int>(request.switch_ports - request.nodes);
        return design;
    }

    design.split = split_ports(request);
    const std::int64_t min_switches = min_switch_count(request.nodes, design.split.to_nodes);
    design.dim_count = dim_count_heuristic(min_switches);
    if (design.dim_count == 1) {
        // Ring: the minimal count is used as-is, no near-cubic shaping.
        design.topology = TopologyKind::Ring;
        design.dims = {static_cast<int>(min_switches)};
        design.switch_count = min_switches;
    } else {
        DimensionLayout layout = dimension_layout(min_switches, design.dim_count);
        design.topology = TopologyKind::Torus;
        design.dims = std::move(layout.dims);
        design.switch_count = layout.switch_count;
    }
    design.cable_count = cable_count(request.nodes, design.switch_count, design.split.to_switches);
    design.bundle_size = bundle_size(design.split.to_switches, design.dim_count);
    design.max_nodes = expandability(design.switch_count, design.split.to_nodes);
    design.unused_ports_per_switch =
        design.split.to_switches - 2 * design.dim_count * design.bundle_size;
    return design;
}

}  // namespace netdesign
