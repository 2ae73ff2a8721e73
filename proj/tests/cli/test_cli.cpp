#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "heatfcs/heat_statistics.hpp"
#include "heatfcs/tilted.hpp"
#include "serialize.hpp"

using namespace heatfcs;
using namespace heatfcs::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("heatfcs_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "heatfcs");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

RunConfig fig1(const fs::path& out) {
    ConfigSource src;
    src.load_file(fs::path(HEATFCS_CONFIG_DIR) / "fig1.conf");
    src.set("out=" + out.string());
    return src.resolve();
}

} // namespace

TEST_CASE("config parsing") {
    ConfigSource src;
    src.load_text("g = 0.2  # amplitude\nkT = 0.3\ntimes_tau = 1, 2.5\nphi = 0.5*pi\n", "inline");
    src.set("g=0.05");
    const auto c = src.resolve();
    CHECK(c.model.drive_amplitude == 0.05);
    CHECK(c.model.drive_phase == doctest::Approx(kPi / 2));
    CHECK(c.bath.inverse_temperature == doctest::Approx(1 / 0.3));
    CHECK(c.times_tau == std::vector<double>{1.0, 2.5});

    auto error_of = [](const std::string& text) {
        try {
            ConfigSource s;
            s.load_text(text, "cfg");
            s.resolve();
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(error_of("g = abc\n").find("cfg:1: field 'g'") != std::string::npos);
    CHECK(error_of("\n\nbogus = 1\n").find("cfg:3: unknown key 'bogus'") != std::string::npos);
    CHECK(error_of("Omega = 0.9\ndetuning = 0.1\n").find("either Omega or detuning") != std::string::npos);
    CHECK(error_of("coupling = sigma_y\n").find("field 'coupling'") != std::string::npos);
    CHECK(error_of("nu_grid = 300\n").find("power of two") != std::string::npos);
    CHECK(error_of("sweep = phase\n").find("sweep_values") != std::string::npos);
    CHECK(error_of("g\n").find("cfg:1") != std::string::npos);
    CHECK(error_of("coupling = custom\ncoupling_matrix = 1, 0, 0\n").find("4 numbers") != std::string::npos);
}

TEST_CASE("csv and json round trip") {
    const auto dir = scratch("roundtrip");
    const auto config = fig1(dir);
    REQUIRE(cmd_cumulants(config) == kOk);
    REQUIRE(cmd_pdf(config) == kOk);
    REQUIRE(cmd_power(config) == kOk);

    const Table cum = read_csv(dir / "cumulants.csv");
    REQUIRE(cum.columns.front() == "detuning");
    REQUIRE(cum.rows.size() == 22);
    for (const auto& row : cum.rows) {
        const Pipeline p = build_pipeline(config, SweepKind::detuning, row[0]);
        const double t = row[1] * p.table.period();
        CHECK(row[2] == t);
        const auto exact = finite_time_cumulants(p.table, p.init, t);
        CHECK(close(row[3], exact.mean));
        CHECK(close(row[4], exact.variance));
        CHECK(close(row[5], exact.skewness));
    }

    const Pipeline p = build_pipeline(config);
    for (double periods : config.times_tau) {
        const double t = periods * p.table.period();
        const auto stored = read_atoms(dir / ("pdf_finite_" + time_tag(periods) + ".json"));
        const auto fresh = finite_time_pdf(p.table, p.init, t, suggested_grid(p.table, p.init, t));
        CHECK(stored.t == t);
        CHECK(stored.rabi_frequency == p.floquet.rabi_frequency);
        std::size_t matched = 0;
        for (const auto& a : fresh.atoms) {
            if (a.weight == 0.0) continue;
            const auto& b = stored.atoms[matched++];
            CHECK(a.n == b.n);
            CHECK(a.m == b.m);
            CHECK(a.weight == b.weight);
        }
        CHECK(matched == stored.atoms.size());
        const auto lt = read_atoms(dir / ("pdf_longtime_" + time_tag(periods) + ".json"));
        CHECK(lt.total() == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(fs::exists(dir / ("envelope_" + time_tag(periods) + ".csv")));
    }

    const Table power = read_csv(dir / "power.csv");
    CHECK(power.columns[4] == "heat_power");
    const double dss_power = mean_heat_power(p.table, dss(p.table));
    for (const auto& row : power.rows) {
        CHECK(row[6] == dss_power);
        CHECK(close(row[4], mean_heat_power(p.table, propagate_populations(p.table, p.init, row[1]))));
    }
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("power columns for special couplings") {
    const auto dir = scratch("power");
    CHECK(run_args({"power", "--set", "coupling=sigma_z", "--set", "init=bare", "--out", dir.string()}) == kOk);
    ConfigSource src;
    src.set("coupling=sigma_z");
    const Pipeline z = build_pipeline(src.resolve());
    const double scale = z.floquet.rabi_frequency * z.table.relaxation();
    for (const auto& row : read_csv(dir / "power.csv").rows) CHECK(std::abs(row[6]) <= 1e-14 * scale);
    CHECK(run_args({"power", "--set", "coupling=custom", "--set", "coupling_matrix=0,0,0,0", "--set",
                    "init=floquet", "--out", dir.string()}) == kOk);
    for (const auto& row : read_csv(dir / "power.csv").rows) {
        CHECK(row[4] == 0.0);
        CHECK(row[5] == 0.0);
        CHECK(row[6] == 0.0);
    }
}

TEST_CASE("pdf at t = 0 is a single atom") {
    const auto dir = scratch("pdf0");
    CHECK(run_args({"pdf", "--set", "times_tau=0", "--out", dir.string()}) == kOk);
    const auto d = read_atoms(dir / "pdf_finite_t0.json");
    REQUIRE(d.atoms.size() == 1);
    CHECK(d.atoms[0].n == 0);
    CHECK(d.atoms[0].m == 0);
    CHECK(d.atoms[0].weight == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exit codes") {
    const auto dir = scratch("exit");
    const std::string out = dir.string();
    CHECK(run_args({"power", "--set", "no_such_key=1", "--out", out}) == kConfigError);
    CHECK(run_args({"power", "--config", "/nonexistent.conf"}) == kConfigError);
    CHECK(run_args({"power", "--set", "g=-1", "--out", out}) == kConfigError);
    CHECK(run_args({"frobnicate"}) == kConfigError);
    CHECK(run_args({"pdf", "--set", "times_tau=5000", "--set", "nu_grid=256", "--out", out}) == kNumericalError);
    CHECK(run_args({"validate", "--set", "inject_negative_rate=true", "--set", "times_tau=10", "--out", out}) ==
          kValidationFailed);
    CHECK(slurp(dir / "report.json").find("\"passed\": false") != std::string::npos);
    CHECK(run_args({"validate", "--set", "times_tau=10", "--set", "mc_samples=20000", "--out", out}) == kOk);
}

TEST_CASE("validate is reproducible") {
    const auto a = scratch("det_a"), b = scratch("det_b");
    const std::vector<std::string> common = {"--config", std::string(HEATFCS_CONFIG_DIR) + "/fig1.conf",
                                             "--set", "mc_samples=30000", "--seed", "77"};
    auto with = [&](std::vector<std::string> extra, const fs::path& out) {
        std::vector<std::string> args{"validate"};
        args.insert(args.end(), common.begin(), common.end());
        args.insert(args.end(), extra.begin(), extra.end());
        args.push_back("--out");
        args.push_back(out.string());
        return run_args(args);
    };
    REQUIRE(with({"--threads", "1"}, a) == kOk);
    REQUIRE(with({"--threads", "4"}, b) == kOk);
    CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
    CHECK(slurp(a / "report.json").find("\"seed\": 77") != std::string::npos);
}

TEST_CASE("sweeps reproduce the figure trends") {
    const auto dir = scratch("sweeps");
    SUBCASE("phase sweep of the longitudinal case changes sign") {
        CHECK(run_args({"cumulants", "--config", std::string(HEATFCS_CONFIG_DIR) + "/fig2.conf", "--out",
                        dir.string()}) == kOk);
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& row : read_csv(dir / "cumulants.csv").rows) {
            lo = std::min(lo, row[3]);
            hi = std::max(hi, row[3]);
        }
        CHECK(lo < 0.0);
        CHECK(hi > 0.0);
    }
    SUBCASE("temperature sweep of the transverse case") {
        CHECK(run_args({"cumulants", "--set", "sweep=temperature", "--set", "sweep_values=0.1,1,3", "--set",
                        "times_tau=700", "--out", dir.string()}) == kOk);
        const auto rows = read_csv(dir / "cumulants.csv").rows;
        REQUIRE(rows.size() == 3);
        CHECK(rows[1][4] > rows[0][4]);
        CHECK(rows[2][4] > rows[1][4]);
    }
}
