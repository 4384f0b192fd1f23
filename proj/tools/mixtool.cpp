// command-line front end: run named check suites as JSON reports, print
// small CSV demonstrations, and validate scenario configuration files.
//
// exit codes: 0 success / all checks passed, 1 a check or validation failed,
// 2 usage or configuration errors.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixture/analytic.hpp"
#include "mixture/config.hpp"
#include "mixture/contour.hpp"
#include "mixture/electromag.hpp"
#include "mixture/errors.hpp"
#include "mixture/suite_report.hpp"
#include "mixture/suites.hpp"
#include "mixture/weakfield.hpp"

namespace {

using namespace mixture;

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// stdout by default; --out redirects the whole document to a file
void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw IOError("cannot open output file '" + out_path + "'");
    f << text;
    if (!f) throw IOError("failed writing output file '" + out_path + "'");
}

int do_run(const std::string& suite, const std::string& config_path,
           const std::string& out_path, bool has_seed, std::uint64_t seed, bool timing) {
    SuiteOptions opt;
    if (!config_path.empty()) {
        ScenarioConfig cfg = parse_config_file(config_path);
        validate_config(cfg);
        opt = suite_options_from_config(cfg);
    } else if (!has_seed) {
        throw ConfigError("a seed is required: pass --seed or a config file with a seed key");
    }
    if (has_seed) opt.seed = seed;

    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = run_suite_by_name(suite, opt);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_text(report_json(r, timing, wall).dump(2) + "\n", out_path);
    return r.passed() ? 0 : 1;
}

int do_validate(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot read config file '" << path << "'\n";
        return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        const ScenarioConfig cfg = parse_config_text(buf.str());
        validate_config(cfg);
        std::cout << "valid: " << path << " (" << cfg.entries.size() << " entries)\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "invalid: " << path << ": " << e.what() << "\n";
        return 1;
    }
}

// naive vs symmetrized path integral over rectangles of growing width
std::string demo_path_integral() {
    const Algebra nat = natural_algebra();
    const Fd fd{1e-3, 2};
    const MVField radius_sq = [](const Point4& p) {
        return mv_scalar(p[1] * p[1] + p[2] * p[2]);
    };
    const MVField cubic_field = [](const Point4& p) {
        MultiVector f;
        f[1] = p[1] * p[1] * p[1] / 3.0;
        f[2] = p[2] * p[2] * p[2] / 3.0;
        return f;
    };
    std::string out = "c,naive,naive_expected,corrected,corrected_expected\n";
    for (int i = 1; i <= 8; ++i) {
        const double c = 0.25 * i;
        const Contour path = detail::suite_rectangle_path(c);
        const double naive = path_integral(nat, radius_sq, path)[2].real();
        const double corrected = corrected_path_integral(nat, cubic_field, path, fd)[2].real();
        out += csv_num(c) + "," + csv_num(naive) + "," +
               csv_num(2.0 * (c * c + 1.0 / 3.0)) + "," + csv_num(corrected) + "," +
               csv_num(4.0 / 3.0) + "\n";
    }
    return out;
}

// the paired residue integrals on circles of growing radius
std::string demo_residue() {
    const double pi = std::numbers::pi;
    std::string out = "radius,integral,re,im\n";
    for (const double radius : {1.0, 2.0, 5.0}) {
        const Contour loop = arc_contour(MultiVector(), radius, 0, 1, 0.0, 2.0 * pi);
        const ResiduePair rp = residue_pair(loop);
        const struct { const char* name; cplx v; } rows[] = {
            {"direct", rp.i_z}, {"conjugate", rp.i_conj}, {"sum", rp.sum}};
        for (const auto& row : rows)
            out += csv_num(radius) + "," + row.name + "," + csv_num(row.v.real()) + "," +
                   csv_num(row.v.imag()) + "\n";
    }
    return out;
}

// trajectory with the force split at every sample, ready for plotting
std::string trajectory_csv(const WeakFieldConfig& wf, const TestParticle& start, double dt,
                           int steps) {
    const Fd fd{1e-3, 2};
    const auto traj = integrate_trajectory(wf, start, dt, steps, fd);
    std::string out =
        "t,x,y,z,vx,vy,vz,grav_x,grav_y,grav_z,"
        "lorentz_x,lorentz_y,lorentz_z,residual_x,residual_y,residual_z\n";
    for (const auto& t : traj) {
        TestParticle q = start;
        q.x = t.x;
        q.v = t.v;
        const ForceSplit f = force_decomposition(wf, q, fd);
        out += csv_num(t.x[0] / wf.c);
        for (int i = 1; i < 4; ++i) out += "," + csv_num(t.x[i]);
        for (int i = 0; i < 3; ++i) out += "," + csv_num(t.v[i]);
        for (int i = 0; i < 3; ++i) out += "," + csv_num(f.grav[i]);
        for (int i = 0; i < 3; ++i) out += "," + csv_num(f.lorentz[i]);
        for (int i = 0; i < 3; ++i) out += "," + csv_num(f.residual[i]);
        out += "\n";
    }
    return out;
}

std::string demo_trajectory(const std::string& name, const std::string& config_path) {
    if (!config_path.empty()) {
        ScenarioConfig cfg = parse_config_file(config_path);
        validate_config(cfg);
        const WeakFieldConfig wf = weakfield_from_config(cfg);
        const TestParticle start = particle_from_config(cfg);
        const double dt = config_double(cfg, "dt", 0.1);
        const int steps = config_int(cfg, "steps", 100);
        return trajectory_csv(wf, start, dt, steps);
    }
    if (name == "newton") {
        WeakFieldConfig wf{};
        wf.psi = [](const Point4& p) { return 1e-6 * p[1]; };
        return trajectory_csv(wf, TestParticle{}, 0.1, 100);
    }
    // built-in circular orbit: uniform swirl, unit charge, unit radius
    WeakFieldConfig wf{};
    const double b0 = 1e-3;
    wf.A = {[b0](const Point4& p) { return -0.5 * b0 * p[2]; },
            [b0](const Point4& p) { return 0.5 * b0 * p[1]; },
            [](const Point4&) { return 0.0; }};
    TestParticle start{};
    start.e = 1.0;
    start.x = {0.0, 0.0, 1.0, 0.0};
    start.v = {1e-3, 0.0, 0.0};
    const double period = 2.0 * std::numbers::pi / b0;
    return trajectory_csv(wf, start, period / 1000.0, 1000);
}

// the four residual groups of the traveling wave under step refinement
std::string demo_maxwell_convergence() {
    FourPotential wave;
    wave.phi = [](const Point4& p) { return std::sin(p[1] - p[0]); };
    wave.A = {[](const Point4& p) { return std::sin(p[1] - p[0]); },
              [](const Point4& p) { return std::cos(p[3] - p[0]); },
              [](const Point4&) { return 0.0; }};
    const Point4 z{0.3, 0.7, 0.2, -0.4};
    std::string out = "h,gauss_e,ampere,gauss_b,faraday\n";
    for (const double h : {4e-3, 2e-3, 1e-3, 5e-4, 2.5e-4}) {
        const MaxwellResiduals r = maxwell_residuals(wave, z, Fd{h, 2});
        double amp = 0.0, far = 0.0;
        for (int i = 0; i < 3; ++i) {
            amp = std::max(amp, std::abs(r.ampere[i]));
            far = std::max(far, std::abs(r.faraday[i]));
        }
        out += csv_num(h) + "," + csv_num(std::abs(r.gauss_e)) + "," + csv_num(amp) + "," +
               csv_num(std::abs(r.gauss_b)) + "," + csv_num(far) + "\n";
    }
    return out;
}

int do_demo(const std::string& name, const std::string& config_path,
            const std::string& out_path) {
    std::string text;
    if (name == "path-integral") text = demo_path_integral();
    else if (name == "residue") text = demo_residue();
    else if (name == "cyclotron" || name == "newton") text = demo_trajectory(name, config_path);
    else if (name == "maxwell-convergence") text = demo_maxwell_convergence();
    else
        throw UnknownDemo("unknown demo '" + name +
                          "' (expected one of: path-integral, residue, cyclotron, newton, "
                          "maxwell-convergence)");
    write_text(text, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"check suites, demonstrations, and config validation for the "
                 "four-channel mixture library"};
    app.require_subcommand(0, 1);

    std::string suite, run_config, run_out;
    std::uint64_t seed = 0;
    bool timing = false;
    CLI::App* run = app.add_subcommand("run", "run a named check suite and emit a JSON report");
    run->add_option("suite,--suite", suite, "suite name (or 'all')")->required();
    run->add_option("--config", run_config, "scenario config file");
    run->add_option("--out", run_out, "write the report to this file instead of stdout");
    CLI::Option* seed_opt = run->add_option("--seed", seed, "random seed for the suite");
    run->add_flag("--timing", timing, "include wall time in the report");

    std::string demo_name, demo_config, demo_out;
    CLI::App* demo = app.add_subcommand("demo", "print a small CSV demonstration");
    demo->add_option("name,--name", demo_name, "demo name")->required();
    demo->add_option("--config", demo_config, "scenario config file (trajectory demos)");
    demo->add_option("--out", demo_out, "write the CSV to this file instead of stdout");

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check a config file against the schema");
    validate->add_option("path,--config", validate_path, "config file to check")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed())
            return do_run(suite, run_config, run_out, seed_opt->count() > 0, seed, timing);
        if (demo->parsed()) return do_demo(demo_name, demo_config, demo_out);
        if (validate->parsed()) return do_validate(validate_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << app.help();
    return 2;
}
