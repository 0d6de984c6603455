// SPDX-License-Identifier: Apache-2.0

#include "netdesign/catalog.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "netdesign/errors.hpp"

namespace netdesign {

namespace {

constexpr std::string_view kCableCostKey = "cable_cost_usd=";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_positive_int(std::string_view field, int line_no, std::string_view what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || value <= 0)
        throw ParseError(fmt::format("line {}: bad {} '{}'", line_no, what, field));
    return value;
}

double parse_positive_double(std::string_view field, int line_no, std::string_view what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || !(value > 0.0))
        throw ParseError(fmt::format("line {}: bad {} '{}'", line_no, what, field));
    return value;
}

RoleMask parse_roles(std::string_view field, int line_no) {
    RoleMask mask = 0;
    for (std::string_view tag : split(field, '|')) {
        tag = trim(tag);
        if (tag == "torus")
            mask |= role_bit(Role::Torus);
        else if (tag == "fattree_edge")
            mask |= role_bit(Role::FatTreeEdge);
        else if (tag == "fattree_core")
            mask |= role_bit(Role::FatTreeCore);
        else
            throw ParseError(fmt::format("line {}: unknown role '{}'", line_no, tag));
    }
    if (mask == 0) throw ParseError(fmt::format("line {}: empty role list", line_no));
    return mask;
}

std::string roles_to_string(RoleMask mask) {
    std::string out;
    const auto add = [&out](std::string_view tag) {
        if (!out.empty()) out += '|';
        out += tag;
    };
    if (mask & role_bit(Role::Torus)) add("torus");
    if (mask & role_bit(Role::FatTreeEdge)) add("fattree_edge");
    if (mask & role_bit(Role::FatTreeCore)) add("fattree_core");
    return out;
}

}  // namespace

EquipmentCatalog::EquipmentCatalog(std::vector<SwitchConfig> switches, Cents cable_cost)
    : switches_(std::move(switches)), cable_cost_(cable_cost) {
    if (switches_.empty()) throw ValidationError("catalog has no switches");
    if (cable_cost_ < 0) throw ValidationError("negative cable cost");

    std::set<std::pair<std::string, int>> seen;
    RoleMask coverage = 0;
    for (const SwitchConfig& sw : switches_) {
        if (sw.model.empty()) throw ValidationError("switch with empty model name");
        if (sw.ports < 2) throw ValidationError(fmt::format("{}: ports must be >= 2", sw.model));
        if (sw.size_u <= 0 || !(sw.weight_kg > 0.0) || !(sw.power_w > 0.0) || sw.cost <= 0)
            throw ValidationError(fmt::format("{}: non-positive rating", sw.model));
        if (sw.roles == 0) throw ValidationError(fmt::format("{}: no roles", sw.model));
        if (!seen.emplace(sw.model, sw.ports).second)
            throw ValidationError(fmt::format("duplicate switch config ({}, {} ports)", sw.model, sw.ports));
        coverage |= sw.roles;
    }
    for (Role r : {Role::Torus, Role::FatTreeEdge, Role::FatTreeCore}) {
        if ((coverage & role_bit(r)) == 0)
            throw ValidationError(fmt::format("no switch tagged {}", roles_to_string(role_bit(r))));
    }
}

EquipmentCatalog EquipmentCatalog::load(std::istream& in) {
    std::vector<SwitchConfig> switches;
    Cents cable_cost = kDefaultCableCost;
    bool cable_cost_seen = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.substr(0, kCableCostKey.size()) == kCableCostKey) {
            if (cable_cost_seen)
                throw ParseError(fmt::format("line {}: duplicate cable_cost_usd", line_no));
            if (!switches.empty())
                throw ParseError(fmt::format("line {}: cable_cost_usd must precede switch rows", line_no));
            try {
                cable_cost = parse_usd(trim(line.substr(kCableCostKey.size())));
            } catch (const ParseError& e) {
                throw ParseError(fmt::format("line {}: {}", line_no, e.what()));
            }
            cable_cost_seen = true;
            continue;
        }

        const auto fields = split(line, ',');
        if (fields.size() != 7)
            throw ParseError(fmt::format("line {}: expected 7 fields, got {}", line_no, fields.size()));

        SwitchConfig sw;
        sw.model = std::string(trim(fields[0]));
        if (sw.model.empty()) throw ParseError(fmt::format("line {}: empty model name", line_no));
        sw.roles = parse_roles(trim(fields[1]), line_no);
        sw.ports = parse_positive_int(trim(fields[2]), line_no, "port count");
        sw.size_u = parse_positive_int(trim(fields[3]), line_no, "size");
        sw.weight_kg = parse_positive_double(trim(fields[4]), line_no, "weight");
        sw.power_w = parse_positive_double(trim(fields[5]), line_no, "power");
        try {
            sw.cost = parse_usd(trim(fields[6]));
        } catch (const ParseError& e) {
            throw ParseError(fmt::format("line {}: {}", line_no, e.what()));
        }
        switches.push_back(std::move(sw));
    }
    return EquipmentCatalog(std::move(switches), cable_cost);
}

EquipmentCatalog EquipmentCatalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(fmt::format("cannot open catalog file '{}'", path));
    return load(in);
}

const EquipmentCatalog& EquipmentCatalog::default_catalog() {
    static const EquipmentCatalog catalog = [] {
        static const char* text =
#include "default_catalog.inc"
            ;
        std::istringstream in(text);
        return load(in);
    }();
    return catalog;
}

void EquipmentCatalog::save(std::ostream& out) const {
    out << kCableCostKey << format_usd(cable_cost_) << '\n';
    for (const SwitchConfig& sw : switches_) {
        out << sw.model << ',' << roles_to_string(sw.roles) << ',' << sw.ports << ',' << sw.size_u
            << ',' << fmt::format("{}", sw.weight_kg) << ',' << fmt::format("{}", sw.power_w) << ','
            << format_usd(sw.cost) << '\n';
    }
}

std::vector<SwitchConfig> EquipmentCatalog::configs_for_role(Role r) const {
    std::vector<SwitchConfig> out;
    for (const SwitchConfig& sw : switches_)
        if (sw.has_role(r)) out.push_back(sw);
    std::sort(out.begin(), out.end(), [](const SwitchConfig& a, const SwitchConfig& b) {
        if (a.ports != b.ports) return a.ports < b.ports;
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.model < b.model;
    });
    return out;
}

const SwitchConfig* EquipmentCatalog::find(Role role, int ports) const {
    const SwitchConfig* best = nullptr;
    for (const SwitchConfig& sw : switches_) {
        if (!sw.has_role(role) || sw.ports != ports) continue;
        if (best == nullptr || sw.cost < best->cost) best = &sw;
    }
    return best;
}

}  // namespace netdesign
