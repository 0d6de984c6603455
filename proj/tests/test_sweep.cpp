// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "netdesign/catalog.hpp"
#include "netdesign/errors.hpp"
#include "netdesign/fattree.hpp"
#include "netdesign/metrics.hpp"
#include "netdesign/sweep.hpp"
#include "netdesign/torus.hpp"

using netdesign::CoreMode;
using netdesign::EquipmentCatalog;
using netdesign::Rational;
using netdesign::Role;
using netdesign::SweepRow;
using netdesign::ValidationError;

namespace {

const EquipmentCatalog& catalog() { return EquipmentCatalog::default_catalog(); }

std::string csv_of(const std::vector<SweepRow>& rows, char delimiter = ',') {
    std::ostringstream out;
    netdesign::write_sweep_csv(rows, out, delimiter);
    return out.str();
}

}  // namespace

TEST_CASE("rows recompute from the single-design operations") {
    const SweepRow row = netdesign::sweep_row(648, catalog(), 36);

    const auto torus = netdesign::design_torus({648, Rational(1), 36});
    const auto torus_metrics =
        netdesign::metrics_for_torus(torus, *catalog().find(Role::Torus, 36), catalog(), 648);
    CHECK(row.torus_cost == torus_metrics.total_cost);

    const auto nb = netdesign::design_fattree(648, Rational(1), catalog(), CoreMode::Modular);
    CHECK(row.ft_nb_cost == netdesign::metrics_for_fattree(nb, catalog(), 648).total_cost);

    const auto blocked = netdesign::design_fattree(648, Rational(2), catalog(), CoreMode::Modular);
    CHECK(row.ft_2to1_cost == netdesign::metrics_for_fattree(blocked, catalog(), 648).total_cost);

    const auto edge_class = netdesign::design_fattree(648, Rational(1), catalog(), CoreMode::EdgeClass);
    CHECK(row.ft_edge36_cost == netdesign::metrics_for_fattree(edge_class, catalog(), 648).total_cost);
}

TEST_CASE("the 648-node anchors match the published per-port costs") {
    const SweepRow row = netdesign::sweep_row(648, catalog(), 36);
    REQUIRE(row.ft_edge36_per_port.has_value());
    REQUIRE(row.ft_nb_per_port.has_value());
    CHECK(*row.ft_edge36_per_port == doctest::Approx(1060.0).epsilon(0.01));
    CHECK(*row.ft_nb_per_port == doctest::Approx(1930.0).epsilon(0.01));
    CHECK(*row.ft_edge36_cost == 68796000);
    CHECK(*row.ft_nb_cost == 124920000);
}

TEST_CASE("a degenerate sweep emits the star cost") {
    const auto rows = netdesign::run_sweep(10, 10, 1, catalog(), 36);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows.front().torus_cost.has_value());
    CHECK(*rows.front().torus_cost == 1082000 + 10 * 8000);
}

TEST_CASE("the full grid yields 108 rows with caps respected") {
    const auto rows = netdesign::run_sweep(36, 3888, 36, catalog(), 36);
    REQUIRE(rows.size() == 108);
    for (const SweepRow& row : rows) {
        CAPTURE(row.nodes);
        CHECK(row.torus_cost.has_value());
        CHECK(row.ft_nb_cost.has_value());
        CHECK(row.ft_2to1_cost.has_value());
        CHECK(row.ft_edge36_cost.has_value() == (row.nodes <= 648));
    }
}

TEST_CASE("infeasible cells serialize as empty fields") {
    const auto rows = netdesign::run_sweep(3889, 3889, 1, catalog(), 36);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows.front().ft_nb_cost.has_value());
    CHECK(rows.front().torus_cost.has_value());

    const std::string csv = csv_of(rows);
    const std::string line = csv.substr(csv.find('\n') + 1);
    CHECK(line.find(",,") != std::string::npos);
    CHECK(line.find("3889,") == 0);
}

TEST_CASE("CSV header is fixed and the delimiter swap is total") {
    const auto rows = netdesign::run_sweep(36, 72, 36, catalog(), 36);
    const std::string csv = csv_of(rows);
    CHECK(csv.rfind("n,torus_cost,ft_nb_cost,ft_2to1_cost,ft_edge36_cost,"
                    "torus_per_port,ft_nb_per_port,ft_2to1_per_port,ft_edge36_per_port\n",
                    0) == 0);

    const std::string spaced = csv_of(rows, ' ');
    CHECK(spaced.find(',') == std::string::npos);
    std::string flattened = spaced;
    for (char& c : flattened)
        if (c == ' ') c = ',';
    CHECK(flattened == csv);
}

TEST_CASE("CSV output is bit-stable across runs") {
    const std::string a = csv_of(netdesign::run_sweep(36, 648, 36, catalog(), 36));
    const std::string b = csv_of(netdesign::run_sweep(36, 648, 36, catalog(), 36));
    CHECK(a == b);
}

TEST_CASE("costs carry two decimals and no grouping") {
    const auto rows = netdesign::run_sweep(150, 150, 1, catalog(), 36);
    const std::string csv = csv_of(rows);
    CHECK(csv.find("229500.00") != std::string::npos);  // non-blocking star
    CHECK(csv.find("218960.00") != std::string::npos);  // 2:1 tree
}

TEST_CASE("invalid ranges are rejected") {
    CHECK_THROWS_AS(netdesign::run_sweep(0, 10, 1, catalog(), 36), ValidationError);
    CHECK_THROWS_AS(netdesign::run_sweep(10, 5, 1, catalog(), 36), ValidationError);
    CHECK_THROWS_AS(netdesign::run_sweep(1, 10, 0, catalog(), 36), ValidationError);
}
