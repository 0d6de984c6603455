// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "netdesign/catalog.hpp"
#include "netdesign/fattree.hpp"
#include "netdesign/metrics.hpp"
#include "netdesign/torus.hpp"

using netdesign::CoreMode;
using netdesign::DesignMetrics;
using netdesign::EquipmentCatalog;
using netdesign::Rational;
using netdesign::Role;
using netdesign::SwitchConfig;
using netdesign::TorusDesign;

namespace {

const EquipmentCatalog& catalog() { return EquipmentCatalog::default_catalog(); }

const SwitchConfig& torus_switch() { return *catalog().find(Role::Torus, 36); }

}  // namespace

TEST_CASE("torus metrics: thousand-node fabric") {
    const TorusDesign design = netdesign::design_torus({1000, Rational(1), 36});
    const DesignMetrics m = netdesign::metrics_for_torus(design, torus_switch(), catalog(), 1000);
    CHECK(m.equipment_cost == 69248000);  // 64 switches
    CHECK(m.cable_cost == 12608000);      // 1576 cables
    CHECK(m.total_cost == 81856000);
    CHECK(m.per_port_usd == doctest::Approx(818.56).epsilon(1e-9));
    CHECK(m.power_w == doctest::Approx(64 * 202.0));
    CHECK(m.weight_kg == doctest::Approx(64 * 7.7));
    CHECK(m.size_u == 64);
}

TEST_CASE("torus metrics: star and zero-cable identities") {
    const TorusDesign star = netdesign::design_torus({10, Rational(1), 36});
    const DesignMetrics m = netdesign::metrics_for_torus(star, torus_switch(), catalog(), 10);
    CHECK(m.total_cost == 1082000 + 10 * 8000);

    TorusDesign no_cables = star;
    no_cables.cable_count = 0;
    const DesignMetrics m0 = netdesign::metrics_for_torus(no_cables, torus_switch(), catalog(), 10);
    CHECK(m0.total_cost == m0.equipment_cost);
}

TEST_CASE("fat-tree metrics: published 150-node pair") {
    const auto star = netdesign::design_fattree(150, Rational(1), catalog(), CoreMode::Modular);
    const DesignMetrics ms = netdesign::metrics_for_fattree(star, catalog(), 150);
    CHECK(ms.equipment_cost == 21750000);
    CHECK(ms.cable_cost == 150 * 8000);
    CHECK(ms.total_cost == 22950000);
    CHECK(ms.power_w == doctest::Approx(1236.0));
    CHECK(ms.weight_kg == doctest::Approx(137.7));
    CHECK(ms.size_u == 10);

    const auto tree = netdesign::design_fattree(150, Rational(2), catalog(), CoreMode::Modular);
    const DesignMetrics mt = netdesign::metrics_for_fattree(tree, catalog(), 150);
    CHECK(mt.equipment_cost == 7 * 1082000 + 12450000);
    CHECK(mt.cable_cost == 234 * 8000);
    CHECK(mt.total_cost == 21896000);
    CHECK(mt.power_w == doctest::Approx(2290.0));
    CHECK(mt.weight_kg == doctest::Approx(140.0));
    CHECK(mt.size_u == 14);

    // the 2:1 tree wins on price by a sliver and loses big on power
    CHECK(static_cast<double>(ms.total_cost) / mt.total_cost - 1.0 <= 0.05);
    CHECK(mt.power_w / ms.power_w >= 1.85);
}

TEST_CASE("fat-tree metrics: edge-class per-port anchor") {
    const auto tree = netdesign::design_fattree(648, Rational(1), catalog(), CoreMode::EdgeClass);
    const DesignMetrics m = netdesign::metrics_for_fattree(tree, catalog(), 648);
    CHECK(m.total_cost == 68796000);
    CHECK(m.per_port_usd == doctest::Approx(687960.0 / 648.0).epsilon(1e-12));
}

TEST_CASE("objective projects total cost") {
    const auto tree = netdesign::design_fattree(150, Rational(2), catalog(), CoreMode::Modular);
    const DesignMetrics m = netdesign::metrics_for_fattree(tree, catalog(), 150);
    CHECK(netdesign::objective(m) == m.total_cost);
}

TEST_CASE("metrics are additive over switch instances") {
    const TorusDesign design = netdesign::design_torus({500, Rational(1), 36});
    const SwitchConfig& sw = torus_switch();
    const DesignMetrics m = netdesign::metrics_for_torus(design, sw, catalog(), 500);
    CHECK(m.equipment_cost == design.switch_count * sw.cost);
    CHECK(m.cable_cost == design.cable_count * catalog().cable_cost());
    CHECK(m.total_cost == m.equipment_cost + m.cable_cost);
    CHECK(m.power_w == doctest::Approx(design.switch_count * sw.power_w));
    CHECK(m.size_u == design.switch_count * sw.size_u);
}

TEST_CASE("scaling every price scales the objective linearly") {
    std::vector<SwitchConfig> scaled = catalog().switches();
    for (SwitchConfig& sw : scaled) sw.cost *= 3;
    const EquipmentCatalog tripled(std::move(scaled), catalog().cable_cost() * 3);

    const auto base_design = netdesign::design_fattree(648, Rational(1), catalog(), CoreMode::Modular);
    const auto scaled_design = netdesign::design_fattree(648, Rational(1), tripled, CoreMode::Modular);
    const auto base = netdesign::metrics_for_fattree(base_design, catalog(), 648);
    const auto big = netdesign::metrics_for_fattree(scaled_design, tripled, 648);
    CHECK(big.total_cost == 3 * base.total_cost);
    // argmin unchanged: same structure picked
    CHECK(scaled_design.core->ports == base_design.core->ports);
    CHECK(scaled_design.edge_count == base_design.edge_count);
}
