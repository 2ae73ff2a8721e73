// config.hpp: run configuration: key = value files plus command-line overrides

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heatfcs/bath.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/linalg.hpp"

namespace heatfcs::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class InitKind { dss, bare, floquet };
enum class SweepKind { none, detuning, temperature, phase };

struct RunConfig {
    RabiParameters model = RabiParameters::from_detuning(1.0, 0.1, 0.02);
    BathParameters bath = BathParameters::from_temperature(0.01, 0.1);
    std::string coupling{"sigma_x"};  // sigma_x | sigma_z | custom
    Mat2 coupling_matrix = pauli::sigma_x();
    InitKind init{InitKind::dss};
    double init_delta{0.0};
    double init_gamma{0.0};
    double init_p1{1.0};
    std::vector<double> times_tau{80.0, 700.0};
    std::size_t nu_grid{0};  // 0: chosen per time
    int k_max{2};
    bool monodromy{false};
    std::size_t floquet_grid{512};
    std::uint64_t seed{20240601};
    std::size_t mc_samples{100000};
    unsigned threads{0};
    SweepKind sweep{SweepKind::none};
    std::vector<double> sweep_values;
    std::size_t power_samples{101};
    std::size_t envelope_samples{401};
    bool inject_negative_rate{false};
    std::filesystem::path out_dir{"."};
};

// Ordered key -> (value, origin) table. Later assignments win.
class ConfigSource {
public:
    void load_file(const std::filesystem::path& path);
    void load_text(const std::string& text, const std::string& origin);
    // "key=value" from the command line
    void set(const std::string& assignment);

    RunConfig resolve() const;

private:
    struct Entry {
        std::string value;
        std::string origin;
    };
    void assign(const std::string& key, const std::string& value, const std::string& origin);
    std::map<std::string, Entry> entries_;
};

std::string sweep_name(SweepKind kind);

} // namespace heatfcs::cli
