// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netdesign/money.hpp"

namespace netdesign {

/// Where a switch model may be deployed.
enum class Role : unsigned {
    Torus       = 1u << 0,  // torus / ring lattice member
    FatTreeEdge = 1u << 1,  // bottom tier of a two-level fat-tree
    FatTreeCore = 1u << 2,  // top tier of a two-level fat-tree
};

using RoleMask = unsigned;

constexpr RoleMask role_bit(Role r) { return static_cast<RoleMask>(r); }

/// One purchasable switch configuration. Modular chassis switches appear
/// once per line-card configuration, each with its own price and ratings.
struct SwitchConfig {
    std::string model;
    RoleMask roles = 0;
    int ports = 0;
    int size_u = 0;
    double weight_kg = 0.0;
    double power_w = 0.0;
    Cents cost = 0;

    bool has_role(Role r) const { return (roles & role_bit(r)) != 0; }

    friend bool operator==(const SwitchConfig&, const SwitchConfig&) = default;
};

/// Validated price list: switch configurations plus the flat per-cable cost.
/// Immutable after construction, so catalogs can be shared freely across
/// sweep workers.
class EquipmentCatalog {
public:
    static constexpr Cents kDefaultCableCost = 80 * 100;

    EquipmentCatalog(std::vector<SwitchConfig> switches, Cents cable_cost);

    /// Parses the catalog text format (see file docs in the repo README).
    /// Parse errors carry the 1-based line number.
    static EquipmentCatalog load(std::istream& in);
    static EquipmentCatalog load_file(const std::string& path);

    /// The built-in QDR price list compiled into the library; identical to
    /// the shipped catalogs/qdr-default.csv.
    static const EquipmentCatalog& default_catalog();

    void save(std::ostream& out) const;

    const std::vector<SwitchConfig>& switches() const { return switches_; }
    Cents cable_cost() const { return cable_cost_; }

    /// All configs carrying the role, by ascending ports then ascending cost.
    std::vector<SwitchConfig> configs_for_role(Role r) const;

    /// The config playing `role` with exactly `ports` ports, or nullptr.
    const SwitchConfig* find(Role role, int ports) const;

    friend bool operator==(const EquipmentCatalog&, const EquipmentCatalog&) = default;

private:
    std::vector<SwitchConfig> switches_;
    Cents cable_cost_ = kDefaultCableCost;
};

}  // namespace netdesign
