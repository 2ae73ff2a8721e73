#include "serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace heatfcs::cli {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

void write_csv(const std::filesystem::path& path, const Table& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
    write_text(path, os.str());
}

Table read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    Table t;
    std::string line;
    if (!std::getline(in, line)) return t;
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string atoms_to_json(const HeatDistribution& dist) {
    nlohmann::json j;
    j["omega_drive"] = dist.drive_frequency;
    j["omega_rabi"] = dist.rabi_frequency;
    j["t"] = dist.t;
    auto atoms = nlohmann::json::array();
    for (const auto& a : dist.atoms) atoms.push_back({{"n", a.n}, {"m", a.m}, {"w", a.weight}});
    j["atoms"] = std::move(atoms);
    return j.dump(1) + "\n";
}

void write_atoms(const std::filesystem::path& path, const HeatDistribution& dist) {
    write_text(path, atoms_to_json(dist));
}

HeatDistribution read_atoms(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    const auto j = nlohmann::json::parse(in);
    HeatDistribution d;
    d.drive_frequency = j.at("omega_drive").get<double>();
    d.rabi_frequency = j.at("omega_rabi").get<double>();
    d.t = j.at("t").get<double>();
    for (const auto& a : j.at("atoms"))
        d.atoms.push_back({a.at("n").get<long>(), a.at("m").get<int>(), a.at("w").get<double>()});
    return d;
}

} // namespace heatfcs::cli
