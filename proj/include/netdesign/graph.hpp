// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "netdesign/torus.hpp"

namespace netdesign {

/// Explicit switch-level multigraph of a ring or torus design. Serves as the
/// independent oracle for cable counts, per-switch port budgets and hop
/// distances; the design formulas never feed back into it.
class SwitchGraph {
public:
    struct Edge {
        std::int64_t u = 0;
        std::int64_t v = 0;  // u < v, or u == v never (self loops cannot arise)
        int multiplicity = 0;
    };

    /// Materializes the lattice: every switch links to both neighbours in
    /// every dimension with `bundle_size` parallel cables. For a dimension of
    /// size 2 the two directions reach the same switch and the bundle widths
    /// add. Throws ValidationError for star designs (no lattice to build).
    static SwitchGraph build(const TorusDesign& design);

    /// Direct lattice construction, used by tests that probe shapes the
    /// synthesis path would not emit.
    static SwitchGraph build_lattice(const std::vector<int>& dims, int bundle_size);

    std::int64_t switch_count() const { return switch_count_; }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sum of edge multiplicities == number of inter-switch cables.
    std::int64_t total_link_count() const;

    /// Cables incident to the busiest switch; must stay within the fabric
    /// port budget.
    int max_incident_multiplicity() const;

    int distinct_neighbour_count(std::int64_t id) const;

    std::vector<int> coord_of(std::int64_t id) const;

    /// Longest hop distance from `from` (equals the graph diameter here:
    /// the lattice is vertex-transitive).
    std::int64_t bfs_eccentricity(std::int64_t from) const;

    /// "u v multiplicity" lines, ascending (u, v).
    void write_edge_list(std::ostream& out) const;

private:
    std::vector<int> dims_;
    std::int64_t switch_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::int64_t>> adjacency_;  // distinct neighbours
    std::vector<std::int64_t> incident_;                // cables per switch
};

/// nodes + every inter-switch cable the graph actually contains.
std::int64_t oracle_cable_count(const SwitchGraph& graph, std::int64_t nodes);

/// Shortest-path diameter of an ideal torus: sum of floor(d_i / 2).
std::int64_t lattice_diameter(const std::vector<int>& dims);

}  // namespace netdesign
