// SPDX-License-Identifier: Apache-2.0

#include "netdesign/metrics.hpp"

#include "netdesign/errors.hpp"

namespace netdesign {

namespace {

double per_port(Cents total, std::int64_t nodes) {
    return static_cast<double>(total) / 100.0 / static_cast<double>(nodes);
}

}  // namespace

DesignMetrics metrics_for_torus(const TorusDesign& design,
                                const SwitchConfig& config,
                                const EquipmentCatalog& catalog,
                                std::int64_t nodes) {
    if (nodes < 1) throw ValidationError("metrics need a positive node count");
    DesignMetrics m;
    m.equipment_cost = design.switch_count * config.cost;
    m.cable_cost = design.cable_count * catalog.cable_cost();
    m.total_cost = m.equipment_cost + m.cable_cost;
    m.power_w = static_cast<double>(design.switch_count) * config.power_w;
    m.weight_kg = static_cast<double>(design.switch_count) * config.weight_kg;
    m.size_u = design.switch_count * config.size_u;
    m.per_port_usd = per_port(m.total_cost, nodes);
    return m;
}

DesignMetrics metrics_for_fattree(const FatTreeDesign& design,
                                  const EquipmentCatalog& catalog,
                                  std::int64_t nodes) {
    if (nodes < 1) throw ValidationError("metrics need a positive node count");
    if (design.structure == FatTreeStructure::TwoLevel && (!design.edge || !design.core))
        throw ValidationError("two-level design missing a tier config");
    if (design.structure == FatTreeStructure::Star && !design.core)
        throw ValidationError("star design without its switch config");

    DesignMetrics m;
    if (design.edge) {
        m.equipment_cost = design.edge_count * design.edge->cost;
        m.power_w = static_cast<double>(design.edge_count) * design.edge->power_w;
        m.weight_kg = static_cast<double>(design.edge_count) * design.edge->weight_kg;
        m.size_u = design.edge_count * design.edge->size_u;
    }
    if (design.core) {
        m.equipment_cost += design.core_count * design.core->cost;
        m.power_w += static_cast<double>(design.core_count) * design.core->power_w;
        m.weight_kg += static_cast<double>(design.core_count) * design.core->weight_kg;
        m.size_u += design.core_count * design.core->size_u;
    }
    m.cable_cost = design.cable_count * catalog.cable_cost();
    m.total_cost = m.equipment_cost + m.cable_cost;
    m.per_port_usd = per_port(m.total_cost, nodes);
    return m;
}

Cents objective(const DesignMetrics& metrics) { return metrics.total_cost; }

}  // namespace netdesign
