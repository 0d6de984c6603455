// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "netdesign/catalog.hpp"
#include "netdesign/fattree.hpp"
#include "netdesign/torus.hpp"

namespace netdesign {

/// Capital cost, power draw, weight and rack footprint of one design.
struct DesignMetrics {
    Cents equipment_cost = 0;
    Cents cable_cost = 0;
    Cents total_cost = 0;  // equipment + cables
    double power_w = 0.0;
    double weight_kg = 0.0;
    std::int64_t size_u = 0;
    double per_port_usd = 0.0;  // total cost / attached nodes
};

DesignMetrics metrics_for_torus(const TorusDesign& design,
                                const SwitchConfig& config,
                                const EquipmentCatalog& catalog,
                                std::int64_t nodes);

DesignMetrics metrics_for_fattree(const FatTreeDesign& design,
                                  const EquipmentCatalog& catalog,
                                  std::int64_t nodes);

/// The objective the selection layer minimizes. Capital cost only; richer
/// criteria (TCO, reliability) would plug in here.
Cents objective(const DesignMetrics& metrics);

}  // namespace netdesign
