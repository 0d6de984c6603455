// SPDX-License-Identifier: Apache-2.0

#include "netdesign/sweep.hpp"

#include <fmt/format.h>

#include <ostream>
#include <string>

#include "netdesign/errors.hpp"
#include "netdesign/fattree.hpp"
#include "netdesign/metrics.hpp"
#include "netdesign/torus.hpp"

namespace netdesign {

namespace {

struct Cell {
    std::optional<Cents> cost;
    std::optional<double> per_port;
};

Cell fattree_cell(std::int64_t nodes,
                  const Rational& blocking,
                  const EquipmentCatalog& catalog,
                  CoreMode mode) {
    try {
        const FatTreeDesign design = design_fattree(nodes, blocking, catalog, mode);
        const DesignMetrics metrics = metrics_for_fattree(design, catalog, nodes);
        return Cell{metrics.total_cost, metrics.per_port_usd};
    } catch (const InfeasibleError&) {
        return Cell{};
    }
}

Cell torus_cell(std::int64_t nodes, const EquipmentCatalog& catalog, int torus_ports) {
    const SwitchConfig* config = catalog.find(Role::Torus, torus_ports);
    if (config == nullptr) return Cell{};
    try {
        const TorusDesign design = design_torus({nodes, Rational(1), torus_ports});
        const DesignMetrics metrics = metrics_for_torus(design, *config, catalog, nodes);
        return Cell{metrics.total_cost, metrics.per_port_usd};
    } catch (const InfeasibleError&) {
        return Cell{};
    }
}

}  // namespace

SweepRow sweep_row(std::int64_t nodes, const EquipmentCatalog& catalog, int torus_ports) {
    SweepRow row;
    row.nodes = nodes;

    const Cell torus = torus_cell(nodes, catalog, torus_ports);
    row.torus_cost = torus.cost;
    row.torus_per_port = torus.per_port;

    const Cell nb = fattree_cell(nodes, Rational(1), catalog, CoreMode::Modular);
    row.ft_nb_cost = nb.cost;
    row.ft_nb_per_port = nb.per_port;

    const Cell blocked = fattree_cell(nodes, Rational(2), catalog, CoreMode::Modular);
    row.ft_2to1_cost = blocked.cost;
    row.ft_2to1_per_port = blocked.per_port;

    const Cell edge_class = fattree_cell(nodes, Rational(1), catalog, CoreMode::EdgeClass);
    row.ft_edge36_cost = edge_class.cost;
    row.ft_edge36_per_port = edge_class.per_port;
    return row;
}

std::vector<SweepRow> run_sweep(std::int64_t n_min,
                                std::int64_t n_max,
                                std::int64_t step,
                                const EquipmentCatalog& catalog,
                                int torus_ports) {
    if (n_min < 1) throw ValidationError("sweep start must be positive");
    if (n_max < n_min) throw ValidationError("sweep end precedes its start");
    if (step < 1) throw ValidationError("sweep step must be positive");

    std::vector<SweepRow> rows;
    for (std::int64_t n = n_min; n <= n_max; n += step) rows.push_back(sweep_row(n, catalog, torus_ports));
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out, char delimiter) {
    std::string header(kSweepCsvHeader);
    for (char& c : header)
        if (c == ',') c = delimiter;
    out << header << '\n';

    const auto cost = [](const std::optional<Cents>& c) {
        return c ? format_usd_fixed(*c) : std::string();
    };
    const auto per_port = [](const std::optional<double>& p) {
        return p ? fmt::format("{:.2f}", *p) : std::string();
    };
    for (const SweepRow& row : rows) {
        out << row.nodes << delimiter << cost(row.torus_cost) << delimiter << cost(row.ft_nb_cost)
            << delimiter << cost(row.ft_2to1_cost) << delimiter << cost(row.ft_edge36_cost)
            << delimiter << per_port(row.torus_per_port) << delimiter << per_port(row.ft_nb_per_port)
            << delimiter << per_port(row.ft_2to1_per_port) << delimiter
            << per_port(row.ft_edge36_per_port) << '\n';
    }
}

}  // namespace netdesign
