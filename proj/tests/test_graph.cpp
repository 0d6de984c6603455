// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "netdesign/errors.hpp"
#include "netdesign/graph.hpp"
#include "netdesign/torus.hpp"

using netdesign::Rational;
using netdesign::SwitchGraph;
using netdesign::TorusDesign;
using netdesign::ValidationError;

TEST_CASE("a 4x4x4 lattice at bundle 3 wires up as expected") {
    const SwitchGraph g = SwitchGraph::build_lattice({4, 4, 4}, 3);
    CHECK(g.switch_count() == 64);
    for (std::int64_t id = 0; id < g.switch_count(); ++id) {
        CHECK(g.distinct_neighbour_count(id) == 6);
    }
    for (const SwitchGraph::Edge& e : g.edges()) CHECK(e.multiplicity == 3);
    CHECK(g.total_link_count() == 64 * 18 / 2);
    CHECK(g.max_incident_multiplicity() == 18);
}

TEST_CASE("a two-switch ring folds both directions into one bundle") {
    const SwitchGraph g = SwitchGraph::build_lattice({2}, 9);
    CHECK(g.switch_count() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges().front().multiplicity == 18);
    CHECK(netdesign::oracle_cable_count(g, 19) == 37);
}

TEST_CASE("size-2 dimensions double up inside larger lattices") {
    const SwitchGraph g = SwitchGraph::build_lattice({2, 3}, 4);
    // brute force: dimension 0 folds (3 pairs x 8 links), dimension 1 is a
    // 3-cycle per column (6 edges x 4 links)
    CHECK(g.switch_count() == 6);
    CHECK(g.total_link_count() == 3 * 8 + 6 * 4);
    CHECK(g.max_incident_multiplicity() == 2 * 8);
}

TEST_CASE("build consumes a real design and matches its formulas") {
    const TorusDesign design = netdesign::design_torus({1000, Rational(1), 36});
    const SwitchGraph g = SwitchGraph::build(design);
    CHECK(g.switch_count() == design.switch_count);
    CHECK(netdesign::oracle_cable_count(g, 1000) == design.cable_count);
    CHECK(g.max_incident_multiplicity() <= design.split.to_switches);
}

TEST_CASE("stars cannot be materialized") {
    const TorusDesign star = netdesign::design_torus({10, Rational(1), 36});
    CHECK_THROWS_AS(SwitchGraph::build(star), ValidationError);
}

TEST_CASE("degenerate lattice inputs are rejected") {
    CHECK_THROWS_AS(SwitchGraph::build_lattice({}, 3), ValidationError);
    CHECK_THROWS_AS(SwitchGraph::build_lattice({1, 4}, 3), ValidationError);
    CHECK_THROWS_AS(SwitchGraph::build_lattice({4, 4}, -1), ValidationError);
}

TEST_CASE("a dark lattice still answers the oracle") {
    const SwitchGraph g = SwitchGraph::build_lattice({3, 3}, 0);
    CHECK(g.edges().empty());
    CHECK(g.total_link_count() == 0);
    CHECK(netdesign::oracle_cable_count(g, 42) == 42);
}

TEST_CASE("coordinates decode mixed-radix ids") {
    const SwitchGraph g = SwitchGraph::build_lattice({4, 3, 2}, 1);
    CHECK(g.coord_of(0) == std::vector<int>{0, 0, 0});
    CHECK(g.coord_of(1) == std::vector<int>{1, 0, 0});
    CHECK(g.coord_of(4) == std::vector<int>{0, 1, 0});
    CHECK(g.coord_of(23) == std::vector<int>{3, 2, 1});
}

TEST_CASE("lattice_diameter sums the per-dimension radii") {
    CHECK(netdesign::lattice_diameter({4, 4, 4}) == 6);
    CHECK(netdesign::lattice_diameter({2}) == 1);
    CHECK(netdesign::lattice_diameter({5, 5, 5, 5}) == 8);
    CHECK(netdesign::lattice_diameter({}) == 0);
}

TEST_CASE("BFS agrees with the diameter formula on published shapes") {
    for (const std::vector<int>& dims :
         {std::vector<int>{4, 4, 4}, std::vector<int>{2}, std::vector<int>{3, 5},
          std::vector<int>{2, 2, 2, 2}, std::vector<int>{6, 6, 6, 5}}) {
        CAPTURE(dims);
        const SwitchGraph g = SwitchGraph::build_lattice(dims, 1);
        CHECK(g.bfs_eccentricity(0) == netdesign::lattice_diameter(dims));
    }
}

TEST_CASE("edge list export is sorted and complete") {
    const SwitchGraph g = SwitchGraph::build_lattice({2, 2}, 2);
    std::ostringstream out;
    g.write_edge_list(out);
    CHECK(out.str() ==
          "0 1 4\n"
          "0 2 4\n"
          "1 3 4\n"
          "2 3 4\n");
}
