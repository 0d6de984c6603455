// SPDX-License-Identifier: Apache-2.0

#include "netdesign/graph.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <utility>

#include "netdesign/errors.hpp"

namespace netdesign {

SwitchGraph SwitchGraph::build(const TorusDesign& design) {
    if (design.topology == TopologyKind::Star)
        throw ValidationError("a star has no switch lattice to materialize");
    return build_lattice(design.dims, design.bundle_size);
}

SwitchGraph SwitchGraph::build_lattice(const std::vector<int>& dims, int bundle_size) {
    if (dims.empty()) throw ValidationError("lattice needs at least one dimension");
    for (int d : dims)
        if (d < 2) throw ValidationError(fmt::format("dimension of size {} cannot wrap", d));
    if (bundle_size < 0) throw ValidationError("negative bundle size");

    SwitchGraph graph;
    graph.dims_ = dims;
    graph.switch_count_ = 1;
    for (int d : dims) {
        graph.switch_count_ *= d;
        if (graph.switch_count_ > 2'000'000)
            throw ValidationError("lattice too large to materialize");
    }

    // Mixed-radix ids, least significant dimension first. Each switch emits
    // its +1 neighbour per dimension; a dimension of size 2 emits the same
    // canonical pair from both ends, doubling the bundle, as in the real loom.
    // A zero bundle leaves the lattice dark: no edges at all.
    std::map<std::pair<std::int64_t, std::int64_t>, int> bundles;
    for (std::int64_t id = 0; bundle_size > 0 && id < graph.switch_count_; ++id) {
        std::int64_t stride = 1;
        std::int64_t rest = id;
        for (int d : dims) {
            const int coord = static_cast<int>(rest % d);
            rest /= d;
            const int next = (coord + 1) % d;
            const std::int64_t neighbour = id + static_cast<std::int64_t>(next - coord) * stride;
            bundles[{std::min(id, neighbour), std::max(id, neighbour)}] += bundle_size;
            stride *= d;
        }
    }

    graph.adjacency_.resize(static_cast<std::size_t>(graph.switch_count_));
    graph.incident_.assign(static_cast<std::size_t>(graph.switch_count_), 0);
    for (const auto& [pair, multiplicity] : bundles) {
        graph.edges_.push_back(Edge{pair.first, pair.second, multiplicity});
        graph.adjacency_[static_cast<std::size_t>(pair.first)].push_back(pair.second);
        graph.adjacency_[static_cast<std::size_t>(pair.second)].push_back(pair.first);
        graph.incident_[static_cast<std::size_t>(pair.first)] += multiplicity;
        graph.incident_[static_cast<std::size_t>(pair.second)] += multiplicity;
    }
    return graph;
}

std::int64_t SwitchGraph::total_link_count() const {
    std::int64_t total = 0;
    for (const Edge& e : edges_) total += e.multiplicity;
    return total;
}

int SwitchGraph::max_incident_multiplicity() const {
    std::int64_t max = 0;
    for (std::int64_t v : incident_) max = std::max(max, v);
    return static_cast<int>(max);
}

int SwitchGraph::distinct_neighbour_count(std::int64_t id) const {
    return static_cast<int>(adjacency_.at(static_cast<std::size_t>(id)).size());
}

std::vector<int> SwitchGraph::coord_of(std::int64_t id) const {
    std::vector<int> coord;
    coord.reserve(dims_.size());
    std::int64_t rest = id;
    for (int d : dims_) {
        coord.push_back(static_cast<int>(rest % d));
        rest /= d;
    }
    return coord;
}

std::int64_t SwitchGraph::bfs_eccentricity(std::int64_t from) const {
    std::vector<std::int64_t> dist(static_cast<std::size_t>(switch_count_), -1);
    std::deque<std::int64_t> queue;
    dist[static_cast<std::size_t>(from)] = 0;
    queue.push_back(from);
    std::int64_t farthest = 0;
    while (!queue.empty()) {
        const std::int64_t u = queue.front();
        queue.pop_front();
        farthest = std::max(farthest, dist[static_cast<std::size_t>(u)]);
        for (std::int64_t v : adjacency_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] != -1) continue;
            dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
            queue.push_back(v);
        }
    }
    for (std::int64_t d : dist)
        if (d == -1) throw ValidationError("lattice is not connected");
    return farthest;
}

void SwitchGraph::write_edge_list(std::ostream& out) const {
    for (const Edge& e : edges_) out << e.u << ' ' << e.v << ' ' << e.multiplicity << '\n';
}

std::int64_t oracle_cable_count(const SwitchGraph& graph, std::int64_t nodes) {
    return nodes + graph.total_link_count();
}

std::int64_t lattice_diameter(const std::vector<int>& dims) {
    std::int64_t total = 0;
    for (int d : dims) total += d / 2;
    return total;
}

}  // namespace netdesign
