// serialize.hpp: CSV tables and JSON atom lists

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "heatfcs/distribution.hpp"

namespace heatfcs::cli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// 17 significant digits, so every value reparses to the same double.
std::string format_double(double x);

void write_csv(const std::filesystem::path& path, const Table& table);
Table read_csv(const std::filesystem::path& path);

// {"omega_drive", "omega_rabi", "t", "atoms": [{"n", "m", "w"}]}
std::string atoms_to_json(const HeatDistribution& dist);
void write_atoms(const std::filesystem::path& path, const HeatDistribution& dist);
HeatDistribution read_atoms(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace heatfcs::cli
