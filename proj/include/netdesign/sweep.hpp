// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "netdesign/catalog.hpp"
#include "netdesign/money.hpp"

namespace netdesign {

/// One node count compared across the four design families. Infeasible
/// cells stay empty; they are emitted as empty CSV fields, never zeros.
struct SweepRow {
    std::int64_t nodes = 0;
    std::optional<Cents> torus_cost;      // torus, non-blocking
    std::optional<Cents> ft_nb_cost;      // fat-tree, non-blocking, modular core
    std::optional<Cents> ft_2to1_cost;    // fat-tree, 2:1 blocking, modular core
    std::optional<Cents> ft_edge36_cost;  // fat-tree, non-blocking, edge-class core
    std::optional<double> torus_per_port;
    std::optional<double> ft_nb_per_port;
    std::optional<double> ft_2to1_per_port;
    std::optional<double> ft_edge36_per_port;
};

inline constexpr const char* kSweepCsvHeader =
    "n,torus_cost,ft_nb_cost,ft_2to1_cost,ft_edge36_cost,"
    "torus_per_port,ft_nb_per_port,ft_2to1_per_port,ft_edge36_per_port";

/// Every cell recomputes through the public single-design operations; the
/// sweep adds no design logic of its own.
SweepRow sweep_row(std::int64_t nodes, const EquipmentCatalog& catalog, int torus_ports);

std::vector<SweepRow> run_sweep(std::int64_t n_min,
                                std::int64_t n_max,
                                std::int64_t step,
                                const EquipmentCatalog& catalog,
                                int torus_ports);

/// Costs with two decimals, no locale separators; bit-stable across runs.
/// A whitespace delimiter yields gnuplot-friendly output.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out, char delimiter = ',');

}  // namespace netdesign
