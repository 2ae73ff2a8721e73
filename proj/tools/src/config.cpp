#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace heatfcs::cli {

namespace {

const std::set<std::string> kKeys = {
    "omega", "g", "Omega", "detuning", "phi", "eta", "beta", "kT", "coupling",
    "coupling_matrix", "init", "init_delta", "init_gamma", "init_p1", "times_tau", "nu_grid",
    "k_max", "floquet", "floquet_grid", "seed", "mc_samples", "threads", "sweep",
    "sweep_values", "power_samples", "envelope_samples", "inject_negative_rate", "out"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& key, const std::string& origin, const std::string& msg) {
    throw ConfigError(origin + ": field '" + key + "': " + msg);
}

double parse_double(const std::string& key, const std::string& text, const std::string& origin) {
    const std::string t = trim(text);
    // accept "pi" multiples for angles
    if (t == "pi") return kPi;
    if (t.size() > 3 && t.substr(t.size() - 3) == "*pi")
        return parse_double(key, t.substr(0, t.size() - 3), origin) * kPi;
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || !std::isfinite(v))
        fail(key, origin, "expected a finite number, got '" + text + "'");
    return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text,
                             const std::string& origin) {
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        fail(key, origin, "expected a non-negative integer, got '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text,
                               const std::string& origin) {
    std::vector<double> out;
    const std::string t = trim(text);
    // start:stop:count
    if (std::count(t.begin(), t.end(), ':') == 2) {
        const auto a = t.find(':'), b = t.find(':', a + 1);
        const double lo = parse_double(key, t.substr(0, a), origin);
        const double hi = parse_double(key, t.substr(a + 1, b - a - 1), origin);
        const auto n = parse_unsigned(key, t.substr(b + 1), origin);
        if (n < 2) fail(key, origin, "range needs at least 2 points");
        for (std::uint64_t i = 0; i < n; ++i)
            out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
        return out;
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item, origin));
    if (out.empty()) fail(key, origin, "empty list");
    return out;
}

bool parse_bool(const std::string& key, const std::string& text, const std::string& origin) {
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    fail(key, origin, "expected true or false, got '" + text + "'");
}

} // namespace

std::string sweep_name(SweepKind kind) {
    switch (kind) {
        case SweepKind::detuning: return "detuning";
        case SweepKind::temperature: return "temperature";
        case SweepKind::phase: return "phase";
        default: return "none";
    }
}

void ConfigSource::assign(const std::string& key, const std::string& value,
                          const std::string& origin) {
    if (!kKeys.count(key)) throw ConfigError(origin + ": unknown key '" + key + "'");
    entries_[key] = {trim(value), origin};
}

void ConfigSource::load_text(const std::string& text, const std::string& origin) {
    std::stringstream ss(text);
    std::string line;
    int number = 0;
    while (std::getline(ss, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(number);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        assign(trim(line.substr(0, eq)), line.substr(eq + 1), where);
    }
}

void ConfigSource::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    load_text(ss.str(), path.string());
}

void ConfigSource::set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--set " + assignment + ": expected key=value");
    assign(trim(assignment.substr(0, eq)), assignment.substr(eq + 1), "--set " + assignment);
}

RunConfig ConfigSource::resolve() const {
    RunConfig c;
    auto has = [&](const char* k) { return entries_.count(k) > 0; };
    auto num = [&](const char* k, double fallback) {
        const auto it = entries_.find(k);
        return it == entries_.end() ? fallback : parse_double(k, it->second.value, it->second.origin);
    };
    auto uns = [&](const char* k, std::uint64_t fallback) {
        const auto it = entries_.find(k);
        return it == entries_.end() ? fallback : parse_unsigned(k, it->second.value, it->second.origin);
    };
    auto str = [&](const char* k, const std::string& fallback) {
        const auto it = entries_.find(k);
        return it == entries_.end() ? fallback : it->second.value;
    };
    auto origin = [&](const char* k) {
        const auto it = entries_.find(k);
        return it == entries_.end() ? std::string("default") : it->second.origin;
    };

    if (has("Omega") && has("detuning"))
        fail("Omega", origin("Omega"), "give either Omega or detuning, not both (detuning from " +
                                           origin("detuning") + ")");
    const double omega = num("omega", 1.0);
    const double g = num("g", 0.1);
    const double phi = num("phi", 0.0);
    const double drive = num("Omega", 0.98), detuning = num("detuning", 0.02);
    try {
        c.model = has("Omega") ? RabiParameters{omega, g, drive, phi}
                               : RabiParameters::from_detuning(omega, g, detuning, phi);
        c.model.validate();
    } catch (const std::exception& e) {
        throw ConfigError("model parameters (" + origin("omega") + "): " + e.what());
    }

    if (has("beta") && has("kT"))
        fail("beta", origin("beta"), "give either beta or kT, not both");
    try {
        c.bath = has("beta") ? BathParameters{num("eta", 0.01), num("beta", 10.0)}
                             : BathParameters::from_temperature(num("eta", 0.01), num("kT", 0.1));
        c.bath.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("bath parameters: " + std::string(e.what()));
    }

    c.coupling = str("coupling", "sigma_x");
    if (c.coupling == "sigma_x") {
        c.coupling_matrix = pauli::sigma_x();
    } else if (c.coupling == "sigma_z") {
        c.coupling_matrix = pauli::sigma_z();
    } else if (c.coupling == "custom") {
        if (!has("coupling_matrix"))
            fail("coupling", origin("coupling"), "custom coupling requires coupling_matrix");
        const auto v = parse_list("coupling_matrix", str("coupling_matrix", ""), origin("coupling_matrix"));
        if (v.size() != 4)
            fail("coupling_matrix", origin("coupling_matrix"),
                 "expected 4 numbers: s00, Re s01, Im s01, s11");
        c.coupling_matrix << v[0], cplx(v[1], v[2]), cplx(v[1], -v[2]), v[3];
    } else {
        fail("coupling", origin("coupling"), "expected sigma_x, sigma_z or custom, got '" + c.coupling + "'");
    }

    const std::string init = str("init", "dss");
    if (init == "dss") c.init = InitKind::dss;
    else if (init == "bare") c.init = InitKind::bare;
    else if (init == "floquet") c.init = InitKind::floquet;
    else fail("init", origin("init"), "expected dss, bare or floquet, got '" + init + "'");
    c.init_delta = num("init_delta", 0.0);
    c.init_gamma = num("init_gamma", 0.0);
    c.init_p1 = num("init_p1", 1.0);
    if (c.init_p1 < 0.0 || c.init_p1 > 1.0) fail("init_p1", origin("init_p1"), "must lie in [0, 1]");

    if (has("times_tau")) {
        const auto it = entries_.find("times_tau");
        c.times_tau = parse_list("times_tau", it->second.value, it->second.origin);
    }
    for (double t : c.times_tau)
        if (t < 0.0) fail("times_tau", origin("times_tau"), "times must be >= 0");

    c.nu_grid = uns("nu_grid", 0);
    if (c.nu_grid != 0 && (c.nu_grid < 256 || (c.nu_grid & (c.nu_grid - 1)) != 0))
        fail("nu_grid", origin("nu_grid"), "must be 0 or a power of two >= 256");
    c.k_max = static_cast<int>(uns("k_max", 2));
    if (c.k_max < 1 || c.k_max > 64) fail("k_max", origin("k_max"), "must lie in 1..64");

    const std::string fl = str("floquet", "analytic");
    if (fl == "analytic") c.monodromy = false;
    else if (fl == "monodromy") c.monodromy = true;
    else fail("floquet", origin("floquet"), "expected analytic or monodromy");
    c.floquet_grid = uns("floquet_grid", 512);
    if (c.floquet_grid < 64 || c.floquet_grid < 4u * static_cast<unsigned>(c.k_max))
        fail("floquet_grid", origin("floquet_grid"), "must be >= 64 and >= 4 k_max");

    c.seed = uns("seed", c.seed);
    c.mc_samples = uns("mc_samples", c.mc_samples);
    if (c.mc_samples == 0) fail("mc_samples", origin("mc_samples"), "must be >= 1");
    c.threads = static_cast<unsigned>(uns("threads", 0));

    const std::string sw = str("sweep", "none");
    if (sw == "none") c.sweep = SweepKind::none;
    else if (sw == "detuning") c.sweep = SweepKind::detuning;
    else if (sw == "temperature") c.sweep = SweepKind::temperature;
    else if (sw == "phase") c.sweep = SweepKind::phase;
    else fail("sweep", origin("sweep"), "expected none, detuning, temperature or phase");
    if (c.sweep != SweepKind::none) {
        if (!has("sweep_values")) fail("sweep", origin("sweep"), "sweep requires sweep_values");
        const auto it = entries_.find("sweep_values");
        c.sweep_values = parse_list("sweep_values", it->second.value, it->second.origin);
    }

    c.power_samples = uns("power_samples", 101);
    if (c.power_samples < 2) fail("power_samples", origin("power_samples"), "must be >= 2");
    c.envelope_samples = uns("envelope_samples", 401);
    if (c.envelope_samples < 2) fail("envelope_samples", origin("envelope_samples"), "must be >= 2");
    if (has("inject_negative_rate")) {
        const auto it = entries_.find("inject_negative_rate");
        c.inject_negative_rate = parse_bool("inject_negative_rate", it->second.value, it->second.origin);
    }
    if (has("out")) c.out_dir = str("out", ".");
    return c;
}

} // namespace heatfcs::cli
