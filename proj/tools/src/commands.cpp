#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "heatfcs/errors.hpp"
#include "heatfcs/heat_statistics.hpp"
#include "heatfcs/mc_oracle.hpp"
#include "heatfcs/tilted.hpp"
#include "serialize.hpp"

namespace heatfcs::cli {

namespace {

InitialState initial_state(const RunConfig& c, const FloquetSolution& sol, const RateTable& table) {
    switch (c.init) {
        case InitKind::dss:
            if (!(table.relaxation() > 0.0))
                throw ConfigError("init = dss needs a coupling that relaxes the Floquet populations");
            return dss(table);
        case InitKind::bare:
            return bare_to_floquet_populations(c.init_delta, c.init_gamma, sol, c.model.drive_phase);
        case InitKind::floquet: return InitialState::from_p1(c.init_p1);
    }
    return {};
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::size_t grid_for(const RunConfig& c, const Pipeline& p, double t) {
    return c.nu_grid ? c.nu_grid : suggested_grid(p.table, p.init, t);
}

void say(const std::string& line) { std::cout << line << '\n'; }

} // namespace

std::string time_tag(double periods) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "t%g", periods);
    return buf;
}

Pipeline build_pipeline(const RunConfig& c) { return build_pipeline(c, SweepKind::none, 0.0); }

Pipeline build_pipeline(const RunConfig& c, SweepKind sweep, double value) {
    Pipeline p;
    p.model = c.model;
    p.bath = c.bath;
    switch (sweep) {
        case SweepKind::detuning:
            p.model = RabiParameters::from_detuning(c.model.bare_gap, c.model.drive_amplitude, value,
                                                    c.model.drive_phase);
            break;
        case SweepKind::temperature:
            p.bath = BathParameters::from_temperature(c.bath.coupling, value);
            break;
        case SweepKind::phase: p.model.drive_phase = value; break;
        case SweepKind::none: break;
    }
    p.model.validate();
    if (c.monodromy) {
        const auto model = p.model;
        p.floquet = monodromy_floquet([model](double t) { return model.hamiltonian(t); },
                                      model.drive_frequency, c.floquet_grid);
    } else {
        p.floquet = rabi_floquet(p.model, c.floquet_grid);
    }
    p.table = partial_rates(coupling_fourier(c.coupling_matrix, p.floquet, c.k_max), p.floquet, p.bath);
    if (c.inject_negative_rate && !p.table.channels.empty()) p.table.channels.front().rate = -1e-3;
    p.table.validate();
    RunConfig local = c;
    local.model = p.model;
    p.init = initial_state(local, p.floquet, p.table);
    return p;
}

int cmd_power(const RunConfig& c) {
    const Pipeline p = build_pipeline(c);
    const double tau = p.table.period();
    const double t_max = *std::max_element(c.times_tau.begin(), c.times_tau.end()) * tau;
    const bool relaxes = p.table.relaxation() > 0.0;
    const double dss_power = relaxes ? mean_heat_power(p.table, dss(p.table)) : 0.0;
    Table out{{"t_tau", "t", "rho11", "rho22", "heat_power", "mean_heat", "dss_heat_power"}, {}};
    for (std::size_t i = 0; i < c.power_samples; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(c.power_samples - 1);
        const InitialState pop = propagate_populations(p.table, p.init, t);
        out.rows.push_back({t / tau, t, pop.p1, pop.p2, mean_heat_power(p.table, pop),
                            mean_heat(p.table, p.init, t), dss_power});
    }
    write_csv(c.out_dir / "power.csv", out);
    say("dss_heat_power " + format_double(dss_power));
    return kOk;
}

int cmd_cumulants(const RunConfig& c) {
    std::vector<double> values = c.sweep_values;
    if (c.sweep == SweepKind::none) values = {0.0};
    const std::size_t nt = c.times_tau.size();
    std::vector<std::vector<double>> rows(values.size() * nt);
    parallel_for(values.size(), c.threads, [&](std::size_t i) {
        const Pipeline p = build_pipeline(c, c.sweep, values[i]);
        const double tau = p.table.period();
        const double power = mean_heat_power(p.table, dss(p.table));
        for (std::size_t j = 0; j < nt; ++j) {
            const double t = c.times_tau[j] * tau;
            const CumulantSet exact = finite_time_cumulants(p.table, p.init, t);
            const CumulantSet lt = longtime_cumulants(p.table, t);
            rows[i * nt + j] = {values[i], c.times_tau[j], t, exact.mean, exact.variance, exact.skewness,
                                lt.mean, lt.variance, lt.skewness, power};
        }
    });
    Table out{{sweep_name(c.sweep), "t_tau", "t", "mean", "variance", "third_cumulant",
               "longtime_mean", "longtime_variance", "longtime_third_cumulant", "dss_heat_power"},
              std::move(rows)};
    write_csv(c.out_dir / "cumulants.csv", out);
    say("wrote " + std::to_string(out.rows.size()) + " rows to " + (c.out_dir / "cumulants.csv").string());
    return kOk;
}

int cmd_pdf(const RunConfig& c) {
    const Pipeline p = build_pipeline(c);
    const double tau = p.table.period();
    for (double periods : c.times_tau) {
        const double t = periods * tau;
        const std::string tag = time_tag(periods);
        HeatDistribution exact = finite_time_pdf(p.table, p.init, t, grid_for(c, p, t));
        std::erase_if(exact.atoms, [](const Atom& a) { return a.weight == 0.0; });
        write_atoms(c.out_dir / ("pdf_finite_" + tag + ".json"), exact);
        say(tag + " finite-time atoms " + std::to_string(exact.atoms.size()));
        if (t <= 0.0) continue;
        try {
            const EnvelopeParameters env = envelope_parameters(p.table);
            const HeatDistribution lt = longtime_pdf(p.table, p.init, t);
            write_atoms(c.out_dir / ("pdf_longtime_" + tag + ".json"), lt);
            for (const auto& w : lt.warnings) std::cerr << "warning: " << tag << ": " << w << '\n';
            const double w0 = p.table.drive_frequency;
            const double mean = env.a * t * w0, sd = std::sqrt(2.0 * env.b * t) * w0;
            Table envelope{{"q", "density"}, {}};
            for (std::size_t i = 0; i < c.envelope_samples; ++i) {
                const double q = mean - 6.0 * sd +
                                 12.0 * sd * static_cast<double>(i) / static_cast<double>(c.envelope_samples - 1);
                envelope.rows.push_back({q, gaussian_envelope(q, t, env, w0)});
            }
            write_csv(c.out_dir / ("envelope_" + tag + ".csv"), envelope);
        } catch (const InvalidExpansionError& e) {
            std::cerr << "note: " << tag << ": no Gaussian envelope (" << e.what() << ")\n";
        }
    }
    return kOk;
}

namespace {

struct Check {
    std::string name;
    bool passed{false};
    double statistic{0.0};
    double threshold{0.0};
};

nlohmann::json to_json(const Check& c) {
    return {{"name", c.name}, {"passed", c.passed}, {"statistic", c.statistic}, {"threshold", c.threshold}};
}

} // namespace

int cmd_validate(const RunConfig& c) {
    nlohmann::json report;
    std::vector<Check> checks;
    auto finish = [&]() {
        bool ok = true;
        auto arr = nlohmann::json::array();
        for (const auto& ch : checks) {
            ok = ok && ch.passed;
            arr.push_back(to_json(ch));
            say(std::string(ch.passed ? "PASS " : "FAIL ") + ch.name + " statistic=" +
                format_double(ch.statistic) + " threshold=" + format_double(ch.threshold));
        }
        report["checks"] = arr;
        report["passed"] = ok;
        write_text(c.out_dir / "report.json", report.dump(1) + "\n");
        return ok ? kOk : kValidationFailed;
    };

    Pipeline p;
    try {
        p = build_pipeline(c);
    } catch (const InvariantError& e) {
        report["error"] = e.what();
        checks.push_back({"rate_table_invariants", false, 1.0, 0.0});
        return finish();
    }
    checks.push_back({"rate_table_invariants", true, 0.0, 0.0});

    const double tau = p.table.period();
    const double t = c.times_tau.front() * tau;
    report["seed"] = c.seed;
    report["samples"] = c.mc_samples;
    report["t"] = t;

    double norm_err = 0.0;
    for (double periods : {0.0, 1.0, 10.0, 700.0})
        norm_err = std::max(norm_err, std::abs(characteristic_function(p.table, p.init, 0.0, periods * tau) - 1.0));
    checks.push_back({"normalization", norm_err <= 1e-12, norm_err, 1e-12});

    const Mat2 a0 = tilted_generator(p.table, 0.0).entries;
    const double col = std::max(std::abs(a0(0, 0) + a0(1, 0)), std::abs(a0(0, 1) + a0(1, 1)));
    checks.push_back({"generator_column_sums", col <= 1e-14, col, 1e-14});

    const CumulantSet exact = finite_time_cumulants(p.table, p.init, t);
    const double integrated = mean_heat(p.table, p.init, t);
    const double mean_err = std::abs(exact.mean - integrated) / std::max(1.0, std::abs(integrated));
    checks.push_back({"mean_heat_vs_cumulant", mean_err <= 1e-8, mean_err, 1e-8});

    const HeatDistribution pdf = finite_time_pdf(p.table, p.init, t, grid_for(c, p, t));
    const double pdf_var_err =
        std::abs(pdf.central_moment(2) - exact.variance) / std::max(1.0, exact.variance);
    checks.push_back({"pdf_variance_vs_cumulant", pdf_var_err <= 1e-8, pdf_var_err, 1e-8});

    SamplerOptions opts;
    opts.threads = c.threads;
    const TrajectoryEnsemble ens = sample_heat(p.table, p.init, t, c.mc_samples, c.seed, opts);
    const double n = static_cast<double>(ens.size());
    const double se_mean = std::sqrt(std::max(exact.variance, 1e-300) / n);
    const double z_mean = std::abs(ens.mean() - exact.mean) / se_mean;
    checks.push_back({"mc_mean_zscore", z_mean <= 4.0, z_mean, 4.0});
    // standard error of the sample variance from the fourth central moment
    const double m4 = pdf.central_moment(4);
    const double se_var = std::sqrt(std::max(m4 - exact.variance * exact.variance, 1e-300) / n);
    const double z_var = std::abs(ens.variance() - exact.variance) / se_var;
    checks.push_back({"mc_variance_zscore", z_var <= 4.0, z_var, 4.0});

    HeatDistribution empirical;
    bool on_lattice = true;
    try {
        empirical = empirical_distribution(ens);
    } catch (const LatticeViolationError&) {
        on_lattice = false;
    }
    checks.push_back({"mc_on_lattice", on_lattice, on_lattice ? 0.0 : 1.0, 0.0});
    if (on_lattice) {
        // largest CDF gap over the merged support, against the worst-case binomial error
        std::vector<std::pair<double, double>> pts;
        for (const auto& a : pdf.atoms) pts.push_back({pdf.heat(a), a.weight});
        for (const auto& a : empirical.atoms) pts.push_back({empirical.heat(a), -a.weight});
        std::sort(pts.begin(), pts.end());
        double gap = 0.0, acc = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            acc += pts[i].second;
            if (i + 1 == pts.size() || pts[i + 1].first - pts[i].first > 1e-9)
                gap = std::max(gap, std::abs(acc));
        }
        const double bound = 4.0 * 0.5 / std::sqrt(n);
        checks.push_back({"mc_cdf_distance", gap <= bound, gap, bound});
    }
    return finish();
}

int run(int argc, char** argv) {
    CLI::App app{"Heat exchange statistics of a driven qubit coupled to an Ohmic bath"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path, out_dir;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--set", sets, "override a configuration key (key=value), repeatable");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--threads", threads, "worker threads (0: all cores)");
    auto* power = app.add_subcommand("power", "mean heat power along the relaxation and at steady state");
    auto* cumulants = app.add_subcommand("cumulants", "first three cumulants, optionally swept");
    auto* pdf = app.add_subcommand("pdf", "finite-time atoms, long-time comb and Gaussian envelope");
    auto* validate = app.add_subcommand("validate", "Monte Carlo and internal cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    RunConfig config;
    try {
        ConfigSource source;
        if (!config_path.empty()) source.load_file(config_path);
        for (const auto& s : sets) source.set(s);
        if (!out_dir.empty()) source.set("out=" + out_dir);
        if (seed) source.set("seed=" + std::to_string(*seed));
        if (threads) source.set("threads=" + std::to_string(*threads));
        config = source.resolve();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        std::filesystem::create_directories(config.out_dir);
        if (power->parsed()) return cmd_power(config);
        if (cumulants->parsed()) return cmd_cumulants(config);
        if (pdf->parsed()) return cmd_pdf(config);
        if (validate->parsed()) return cmd_validate(config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const heatfcs::Error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumericalError;
    }
    return kOk;
}

} // namespace heatfcs::cli
