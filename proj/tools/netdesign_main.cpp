// SPDX-License-Identifier: Apache-2.0

#include <fmt/format.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netdesign/catalog.hpp"
#include "netdesign/errors.hpp"
#include "netdesign/fattree.hpp"
#include "netdesign/graph.hpp"
#include "netdesign/metrics.hpp"
#include "netdesign/money.hpp"
#include "netdesign/rational.hpp"
#include "netdesign/sweep.hpp"
#include "netdesign/torus.hpp"

namespace nd = netdesign;

namespace {

constexpr const char* kCatalogEnvVar = "NETDESIGN_CATALOG";

// "1234567.89" -> "1,234,567.89"; leaves the fraction untouched.
std::string group_digits(const std::string& text) {
    const std::size_t dot = text.find('.');
    const std::size_t whole = dot == std::string::npos ? text.size() : dot;
    std::string out;
    out.reserve(text.size() + whole / 3);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i > 0 && i < whole && (whole - i) % 3 == 0) out += ',';
        out += text[i];
    }
    return out;
}

std::string usd(nd::Cents cents) { return "$" + group_digits(nd::format_usd(cents)); }

std::string usd(double amount) { return "$" + group_digits(fmt::format("{:.2f}", amount)); }

std::string dims_string(const std::vector<int>& dims) {
    if (dims.empty()) return "-";
    std::string out;
    for (int d : dims) {
        if (!out.empty()) out += 'x';
        out += fmt::format("{}", d);
    }
    return out;
}

nd::EquipmentCatalog resolve_catalog(const std::string& flag_path) {
    if (!flag_path.empty()) return nd::EquipmentCatalog::load_file(flag_path);
    if (const char* env = std::getenv(kCatalogEnvVar); env != nullptr && *env != '\0')
        return nd::EquipmentCatalog::load_file(env);
    return nd::EquipmentCatalog::default_catalog();
}

int write_sink(const std::string& text, const std::string& path) {
    if (path.empty()) {
        fmt::print("{}", text);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fmt::print(stderr, "error: cannot open '{}' for writing\n", path);
        return 1;
    }
    out << text;
    out.flush();
    if (!out.good()) {
        fmt::print(stderr, "error: failed writing '{}'\n", path);
        return 1;
    }
    return 0;
}

struct TorusArgs {
    std::int64_t nodes = 0;
    std::string blocking = "1";
    int ports = 36;
    std::string catalog;
    std::string format = "table";
    std::string export_graph;
};

struct FatTreeArgs {
    std::int64_t nodes = 0;
    std::string blocking = "1";
    std::string core_mode = "modular";
    std::string catalog;
    std::string format = "table";
};

struct CompareArgs {
    std::int64_t min = 36;
    std::int64_t max = 3888;
    std::int64_t step = 36;
    int ports = 36;
    std::string catalog;
    std::string format = "csv";
    std::string output;
    bool gnuplot = false;
};

std::string render_torus_table(const nd::DesignRequest& request,
                               const nd::TorusDesign& design,
                               const nd::SwitchConfig& config,
                               const nd::DesignMetrics& metrics) {
    std::string out = fmt::format("torus design for {} nodes (blocking {}, {}-port switches)\n",
                                  request.nodes, request.blocking.to_string(), request.switch_ports);
    const auto line = [&out](const char* label, const std::string& value) {
        out += fmt::format("  {:<22}{}\n", label, value);
    };
    line("topology", nd::to_string(design.topology));
    line("dimensions", dims_string(design.dims));
    line("switches", fmt::format("{} x {}", design.switch_count, config.model));
    line("ports per switch", fmt::format("{} to nodes, {} to fabric", design.split.to_nodes,
                                         design.split.to_switches));
    line("resulting blocking", design.split.resulting_blocking.to_string());
    line("bundle width", fmt::format("{}", design.bundle_size));
    line("unused fabric ports", fmt::format("{} per switch", design.unused_ports_per_switch));
    line("cables", fmt::format("{}", design.cable_count));
    if (design.topology != nd::TopologyKind::Star)
        line("diameter", fmt::format("{} hops", nd::lattice_diameter(design.dims)));
    // Both capacity readings: ports actually cabled to nodes, and the raw
    // bound that pretends every switch port could host a node.
    line("expandable to", fmt::format("{} nodes ({} by raw port count)", design.max_nodes,
                                      design.switch_count * request.switch_ports));
    line("equipment cost", usd(metrics.equipment_cost));
    line("cable cost", usd(metrics.cable_cost));
    line("total cost", usd(metrics.total_cost));
    line("per-port cost", usd(metrics.per_port_usd));
    line("power", fmt::format("{} W", metrics.power_w));
    line("weight", fmt::format("{} kg", metrics.weight_kg));
    line("rack space", fmt::format("{} U", metrics.size_u));
    return out;
}

nlohmann::ordered_json metrics_json(const nd::DesignMetrics& metrics) {
    return {{"equipment_cost_usd", nd::format_usd(metrics.equipment_cost)},
            {"cable_cost_usd", nd::format_usd(metrics.cable_cost)},
            {"total_cost_usd", nd::format_usd(metrics.total_cost)},
            {"total_cost_cents", metrics.total_cost},
            {"per_port_usd", metrics.per_port_usd},
            {"power_w", metrics.power_w},
            {"weight_kg", metrics.weight_kg},
            {"size_u", metrics.size_u}};
}

std::string render_torus_json(const nd::DesignRequest& request,
                              const nd::TorusDesign& design,
                              const nd::SwitchConfig& config,
                              const nd::DesignMetrics& metrics) {
    nlohmann::ordered_json j;
    j["request"] = {{"nodes", request.nodes},
                    {"blocking", request.blocking.to_string()},
                    {"ports", request.switch_ports}};
    j["topology"] = nd::to_string(design.topology);
    j["dims"] = design.dims;
    j["switch_count"] = design.switch_count;
    j["switch_model"] = config.model;
    j["ports_to_nodes"] = design.split.to_nodes;
    j["ports_to_switches"] = design.split.to_switches;
    j["resulting_blocking"] = design.split.resulting_blocking.to_string();
    j["bundle_size"] = design.bundle_size;
    j["unused_ports_per_switch"] = design.unused_ports_per_switch;
    j["cable_count"] = design.cable_count;
    j["max_nodes"] = design.max_nodes;
    j["max_nodes_raw_port_bound"] = design.switch_count * request.switch_ports;
    j["metrics"] = metrics_json(metrics);
    return j.dump(2) + "\n";
}

std::string render_torus_csv(const nd::TorusDesign& design, const nd::DesignMetrics& metrics) {
    std::string out =
        "topology,dims,switch_count,ports_to_nodes,ports_to_switches,resulting_blocking,"
        "bundle_size,unused_ports_per_switch,cable_count,max_nodes,equipment_cost,cable_cost,"
        "total_cost,per_port_cost,power_w,weight_kg,size_u\n";
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{:.2f},{},{},{}\n",
                       nd::to_string(design.topology), dims_string(design.dims),
                       design.switch_count, design.split.to_nodes, design.split.to_switches,
                       design.split.resulting_blocking.to_string(), design.bundle_size,
                       design.unused_ports_per_switch, design.cable_count, design.max_nodes,
                       nd::format_usd_fixed(metrics.equipment_cost),
                       nd::format_usd_fixed(metrics.cable_cost),
                       nd::format_usd_fixed(metrics.total_cost), metrics.per_port_usd,
                       metrics.power_w, metrics.weight_kg, metrics.size_u);
    return out;
}

int run_torus(const TorusArgs& args) {
    nd::Rational blocking;
    try {
        blocking = nd::Rational::parse(args.blocking);
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: --blocking: {}\n", e.what());
        return 2;
    }

    std::optional<nd::EquipmentCatalog> catalog;
    try {
        catalog.emplace(resolve_catalog(args.catalog));
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }

    try {
        const nd::DesignRequest request{args.nodes, blocking, args.ports};
        const nd::TorusDesign design = nd::design_torus(request);
        const nd::SwitchConfig* config = catalog->find(nd::Role::Torus, args.ports);
        if (config == nullptr)
            throw nd::InfeasibleError(
                fmt::format("catalog offers no {}-port torus switch", args.ports));
        const nd::DesignMetrics metrics = nd::metrics_for_torus(design, *config, *catalog, args.nodes);

        if (!args.export_graph.empty()) {
            if (design.topology == nd::TopologyKind::Star) {
                fmt::print(stderr, "error: a star has no switch lattice to export\n");
                return 1;
            }
            std::ostringstream edges;
            nd::SwitchGraph::build(design).write_edge_list(edges);
            if (const int rc = write_sink(edges.str(), args.export_graph); rc != 0) return rc;
        }

        std::string report;
        if (args.format == "json")
            report = render_torus_json(request, design, *config, metrics);
        else if (args.format == "csv")
            report = render_torus_csv(design, metrics);
        else
            report = render_torus_table(request, design, *config, metrics);
        return write_sink(report, "");
    } catch (const nd::InfeasibleError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    } catch (const nd::ValidationError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}

std::string tier_string(const nd::SwitchConfig& config, std::int64_t count) {
    return fmt::format("{} x {} ({} ports)", count, config.model, config.ports);
}

std::string render_fattree_table(std::int64_t nodes,
                                 const nd::Rational& blocking,
                                 nd::CoreMode mode,
                                 const nd::FatTreeDesign& design,
                                 const nd::DesignMetrics& metrics) {
    std::string out = fmt::format("fat-tree design for {} nodes (blocking {}, core mode {})\n",
                                  nodes, blocking.to_string(), nd::to_string(mode));
    const auto line = [&out](const char* label, const std::string& value) {
        out += fmt::format("  {:<22}{}\n", label, value);
    };
    line("structure", nd::to_string(design.structure));
    if (design.structure == nd::FatTreeStructure::Star) {
        line("switch", tier_string(*design.core, design.core_count));
    } else {
        line("edge switches", fmt::format("{}, {} down / {} up", tier_string(*design.edge, design.edge_count),
                                          design.down_ports, design.up_ports));
        line("core switches", tier_string(*design.core, design.core_count));
    }
    line("resulting blocking", design.resulting_blocking.to_string());
    line("cables", fmt::format("{}", design.cable_count));
    line("equipment cost", usd(metrics.equipment_cost));
    line("cable cost", usd(metrics.cable_cost));
    line("total cost", usd(metrics.total_cost));
    line("per-port cost", usd(metrics.per_port_usd));
    line("power", fmt::format("{} W", metrics.power_w));
    line("weight", fmt::format("{} kg", metrics.weight_kg));
    line("rack space", fmt::format("{} U", metrics.size_u));
    return out;
}

std::string render_fattree_json(std::int64_t nodes,
                                const nd::Rational& blocking,
                                nd::CoreMode mode,
                                const nd::FatTreeDesign& design,
                                const nd::DesignMetrics& metrics) {
    nlohmann::ordered_json j;
    j["request"] = {{"nodes", nodes},
                    {"blocking", blocking.to_string()},
                    {"core_mode", nd::to_string(mode)}};
    j["structure"] = nd::to_string(design.structure);
    if (design.edge) {
        j["edge"] = {{"model", design.edge->model},
                     {"ports", design.edge->ports},
                     {"count", design.edge_count},
                     {"down_ports", design.down_ports},
                     {"up_ports", design.up_ports}};
    }
    if (design.core)
        j["core"] = {{"model", design.core->model},
                     {"ports", design.core->ports},
                     {"count", design.core_count}};
    j["resulting_blocking"] = design.resulting_blocking.to_string();
    j["cable_count"] = design.cable_count;
    j["metrics"] = metrics_json(metrics);
    return j.dump(2) + "\n";
}

std::string render_fattree_csv(const nd::FatTreeDesign& design, const nd::DesignMetrics& metrics) {
    std::string out =
        "structure,edge_model,edge_ports,edge_count,core_model,core_ports,core_count,"
        "down_ports,up_ports,resulting_blocking,cable_count,equipment_cost,cable_cost,"
        "total_cost,per_port_cost,power_w,weight_kg,size_u\n";
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{:.2f},{},{},{}\n", nd::to_string(design.structure),
        design.edge ? design.edge->model : "", design.edge ? fmt::format("{}", design.edge->ports) : "",
        design.edge_count, design.core ? design.core->model : "",
        design.core ? fmt::format("{}", design.core->ports) : "", design.core_count,
        design.down_ports, design.up_ports, design.resulting_blocking.to_string(),
        design.cable_count, nd::format_usd_fixed(metrics.equipment_cost),
        nd::format_usd_fixed(metrics.cable_cost), nd::format_usd_fixed(metrics.total_cost),
        metrics.per_port_usd, metrics.power_w, metrics.weight_kg, metrics.size_u);
    return out;
}

int run_fattree(const FatTreeArgs& args) {
    nd::Rational blocking;
    try {
        blocking = nd::Rational::parse(args.blocking);
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: --blocking: {}\n", e.what());
        return 2;
    }
    const nd::CoreMode mode = args.core_mode == "edge36" ? nd::CoreMode::EdgeClass : nd::CoreMode::Modular;

    std::optional<nd::EquipmentCatalog> catalog;
    try {
        catalog.emplace(resolve_catalog(args.catalog));
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }

    try {
        const nd::FatTreeDesign design = nd::design_fattree(args.nodes, blocking, *catalog, mode);
        const nd::DesignMetrics metrics = nd::metrics_for_fattree(design, *catalog, args.nodes);

        std::string report;
        if (args.format == "json")
            report = render_fattree_json(args.nodes, blocking, mode, design, metrics);
        else if (args.format == "csv")
            report = render_fattree_csv(design, metrics);
        else
            report = render_fattree_table(args.nodes, blocking, mode, design, metrics);
        return write_sink(report, "");
    } catch (const nd::InfeasibleError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    } catch (const nd::ValidationError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}

std::string render_compare_table(const std::vector<nd::SweepRow>& rows) {
    std::string out = fmt::format("{:>8}  {:>14}  {:>14}  {:>14}  {:>14}\n", "n", "torus",
                                  "ft nb", "ft 2:1", "ft edge36");
    const auto cell = [](const std::optional<nd::Cents>& cost) {
        return cost ? usd(*cost) : std::string("-");
    };
    for (const nd::SweepRow& row : rows)
        out += fmt::format("{:>8}  {:>14}  {:>14}  {:>14}  {:>14}\n", row.nodes,
                           cell(row.torus_cost), cell(row.ft_nb_cost), cell(row.ft_2to1_cost),
                           cell(row.ft_edge36_cost));
    return out;
}

std::string render_compare_json(const std::vector<nd::SweepRow>& rows) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    const auto cost = [](const std::optional<nd::Cents>& c) {
        return c ? nlohmann::ordered_json(nd::format_usd_fixed(*c)) : nlohmann::ordered_json(nullptr);
    };
    const auto per_port = [](const std::optional<double>& p) {
        return p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json(nullptr);
    };
    for (const nd::SweepRow& row : rows) {
        nlohmann::ordered_json j;
        j["n"] = row.nodes;
        j["torus_cost"] = cost(row.torus_cost);
        j["ft_nb_cost"] = cost(row.ft_nb_cost);
        j["ft_2to1_cost"] = cost(row.ft_2to1_cost);
        j["ft_edge36_cost"] = cost(row.ft_edge36_cost);
        j["torus_per_port"] = per_port(row.torus_per_port);
        j["ft_nb_per_port"] = per_port(row.ft_nb_per_port);
        j["ft_2to1_per_port"] = per_port(row.ft_2to1_per_port);
        j["ft_edge36_per_port"] = per_port(row.ft_edge36_per_port);
        list.push_back(std::move(j));
    }
    return list.dump(2) + "\n";
}

int run_compare(const CompareArgs& args) {
    std::optional<nd::EquipmentCatalog> catalog;
    try {
        catalog.emplace(resolve_catalog(args.catalog));
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }

    try {
        const std::vector<nd::SweepRow> rows =
            nd::run_sweep(args.min, args.max, args.step, *catalog, args.ports);
        std::string text;
        if (args.format == "table") {
            text = render_compare_table(rows);
        } else if (args.format == "json") {
            text = render_compare_json(rows);
        } else {
            std::ostringstream csv;
            nd::write_sweep_csv(rows, csv, args.gnuplot ? ' ' : ',');
            text = csv.str();
        }
        return write_sink(text, args.output);
    } catch (const nd::ValidationError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interconnect designer: torus lattices and fat-trees priced from an equipment catalog"};
    app.require_subcommand(1);

    TorusArgs torus_args;
    CLI::App* torus = app.add_subcommand("torus", "Size a torus or ring interconnect");
    torus->add_option("--nodes", torus_args.nodes, "Compute node count")
        ->required()
        ->check(CLI::PositiveNumber);
    torus->add_option("--blocking", torus_args.blocking, "Blocking factor: 1, 2, 5/4 or 1.25")
        ->capture_default_str();
    torus->add_option("--ports", torus_args.ports, "Ports per torus switch")
        ->capture_default_str()
        ->check(CLI::Range(2, 1'000'000));
    torus->add_option("--catalog", torus_args.catalog,
                      fmt::format("Equipment catalog file (default built-in; ${} overrides)", kCatalogEnvVar));
    torus->add_option("--format", torus_args.format, "Report format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    torus->add_option("--export-graph", torus_args.export_graph,
                      "Write the switch lattice as 'u v multiplicity' lines to this file");

    FatTreeArgs fattree_args;
    CLI::App* fattree = app.add_subcommand("fattree", "Size a star or two-level fat-tree");
    fattree->add_option("--nodes", fattree_args.nodes, "Compute node count")
        ->required()
        ->check(CLI::PositiveNumber);
    fattree->add_option("--blocking", fattree_args.blocking, "Blocking factor: 1, 2, 5/4 or 1.25")
        ->capture_default_str();
    fattree->add_option("--core-mode", fattree_args.core_mode,
                        "Core tier source: modular chassis or the 36-port edge class")
        ->check(CLI::IsMember({"modular", "edge36"}))
        ->capture_default_str();
    fattree->add_option("--catalog", fattree_args.catalog,
                        fmt::format("Equipment catalog file (default built-in; ${} overrides)", kCatalogEnvVar));
    fattree->add_option("--format", fattree_args.format, "Report format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();

    CompareArgs compare_args;
    CLI::App* compare = app.add_subcommand(
        "compare", "Sweep node counts and compare torus against fat-tree variants");
    compare->add_option("--min", compare_args.min, "First node count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    compare->add_option("--max", compare_args.max, "Last node count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    compare->add_option("--step", compare_args.step, "Node count increment")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    compare->add_option("--ports", compare_args.ports, "Ports per torus switch")
        ->capture_default_str()
        ->check(CLI::Range(2, 1'000'000));
    compare->add_option("--catalog", compare_args.catalog,
                        fmt::format("Equipment catalog file (default built-in; ${} overrides)", kCatalogEnvVar));
    compare->add_option("--format", compare_args.format, "Report format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    compare->add_option("--output", compare_args.output, "Write the report to this file instead of stdout");
    compare->add_flag("--gnuplot-friendly", compare_args.gnuplot,
                      "Use whitespace instead of commas in CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (torus->parsed()) return run_torus(torus_args);
    if (fattree->parsed()) return run_fattree(fattree_args);
    return run_compare(compare_args);
}
