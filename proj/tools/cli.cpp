#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "stark_toric/dynamics.hpp"
#include "stark_toric/errors.hpp"
#include "stark_toric/levi_civita.hpp"
#include "stark_toric/periods.hpp"
#include "stark_toric/stark_model.hpp"
#include "stark_toric/toric_profile.hpp"

namespace stark_toric::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError(std::string("malformed value for ") + flag + ": '" + item + "'");
        }
        if (used != item.size() || !std::isfinite(v))
            throw UsageError(std::string("malformed value for ") + flag + ": '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw UsageError(std::string("empty value for ") + flag);
    return values;
}

// Output sink for --out: "-" is the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path == "-") {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open output file '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

struct Options {
    std::string eps = "0.05";
    std::string out = "-";
    double c = 0.0;
    std::string which = "both";
    int samples = 201;
    double tol = 1e-4;
    std::string init = "0,0,0,0";
    double duration = 10.0;
    double step = 1e-3;
    std::string scheme = "yoshida4";
    bool check_lc = false;
    int stride = 1;
    int resolution = 200;
};

double single_eps(const Options& o) {
    const auto v = parse_list(o.eps, "--eps");
    if (v.size() != 1) throw UsageError("--eps takes a single value for this command");
    return v.front();
}

int cmd_periods(const Options& o, std::ostream& out) {
    const FieldStrength eps(single_eps(o));
    std::vector<OscillatorSelector> sels;
    if (o.which == "plus" || o.which == "both") sels.push_back(OscillatorSelector::Plus);
    if (o.which == "minus" || o.which == "both") sels.push_back(OscillatorSelector::Minus);
    std::ostringstream text;
    for (const auto sel : sels) {
        const double formula = period(eps, o.c, sel);
        // the quadrature oracle degenerates to the harmonic value at c = 0
        const double oracle = period_oracle(eps, o.c, sel);
        const double residual = std::abs(formula - oracle) / formula;
        text << (sel == OscillatorSelector::Plus ? "tau1" : "tau2") << " eps=" << fmt17(eps.value())
             << " c=" << fmt17(o.c) << " formula=" << fmt17(formula) << " oracle=" << fmt17(oracle)
             << " rel_residual=" << fmt17(residual) << "\n";
    }
    out << text.str();
    return kSuccess;
}

int cmd_profile(const Options& o, std::ostream& out) {
    const FieldStrength eps(single_eps(o));
    eps.require_toric();
    if (o.samples < 2) throw UsageError("--samples must be >= 2");
    const ToricProfile profile = profile_sample(eps, o.samples);
    std::ostringstream csv;
    csv << "c,x,y,slope,f_second\n";
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        const auto& s = profile.samples[i];
        csv << fmt17(s.c) << ',' << fmt17(s.x) << ',' << fmt17(s.y) << ','
            << fmt17(profile.slopes[i]) << ',' << fmt17(profile.second_derivs[i]) << '\n';
    }
    out << csv.str();
    return kSuccess;
}

nlohmann::ordered_json certificate_json(const ConvexityCertificate& cert, int samples) {
    nlohmann::ordered_json j;
    j["schema"] = ConvexityCertificate::kSchema;
    j["eps"] = cert.eps;
    j["samples"] = samples;
    j["tol"] = cert.tol;
    j["min_f_second"] = cert.min_f_second;
    j["max_fd_residual"] = cert.max_fd_residual;
    j["fd_points"] = cert.fd_points;
    j["verdict"] = cert.pass ? "pass" : "fail";
    j["c_grid"] = cert.c_grid;
    j["f_second"] = cert.f_second;
    return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const std::vector<double> eps_list = parse_list(o.eps, "--eps");
    if (o.samples < 2) throw UsageError("--samples must be >= 2");
    if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
    for (const double e : eps_list) FieldStrength(e).require_toric();

    std::vector<std::future<ConvexityCertificate>> jobs;
    jobs.reserve(eps_list.size());
    for (const double e : eps_list) {
        jobs.push_back(std::async(std::launch::async, [e, &o] {
            return verify_convexity(FieldStrength(e), o.samples, o.tol);
        }));
    }
    auto report = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (auto& job : jobs) {
        const ConvexityCertificate cert = job.get();
        all_pass = all_pass && cert.pass;
        report.push_back(certificate_json(cert, o.samples));
    }
    out << report.dump(2) << "\n";
    return all_pass ? kSuccess : kVerificationFailed;
}

Scheme parse_scheme(const std::string& name) {
    if (name == "yoshida4") return Scheme::Yoshida4;
    if (name == "leapfrog2") return Scheme::Leapfrog2;
    throw UsageError("unknown --scheme '" + name + "'");
}

int cmd_flow(const Options& o, std::ostream& out) {
    const FieldStrength eps(single_eps(o));
    const auto init = parse_list(o.init, "--init");
    if (init.size() != 4) throw UsageError("--init takes z1,w1,z2,w2");
    if (o.stride < 1) throw UsageError("--stride must be >= 1");
    IntegratorSpec spec;
    spec.step = o.step;
    spec.scheme = parse_scheme(o.scheme);
    spec.validate();
    const RegularizedState s0 = regularized_from_array({init[0], init[1], init[2], init[3]});

    if (o.check_lc) {
        const double deviation = flow_equivalence(s0, eps, spec, o.duration);
        out << "max_deviation=" << fmt17(deviation) << "\n";
        return kSuccess;
    }

    const RegularizedTrajectory traj = integrate_regularized(s0, eps, spec, o.duration);
    std::ostringstream csv;
    csv << "s,t,z1,w1,z2,w2,E\n";
    const std::size_t last = traj.states.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
        if (i % static_cast<std::size_t>(o.stride) != 0 && i != last) continue;
        const auto& s = traj.states[i];
        csv << fmt17(traj.times[i]) << ',' << fmt17(traj.physical_times[i]) << ',' << fmt17(s.z[0])
            << ',' << fmt17(s.w[0]) << ',' << fmt17(s.z[1]) << ',' << fmt17(s.w[1]) << ','
            << fmt17(regularized_energy(s, eps)) << '\n';
    }
    csv << "# max_energy_drift=" << fmt17(traj.energy_drift) << '\n';
    out << csv.str();
    return kSuccess;
}

int cmd_hill(const Options& o, std::ostream& out, std::ostream& err) {
    const FieldStrength eps(single_eps(o));
    eps.require_toric();
    if (o.resolution < 2) throw UsageError("--resolution must be >= 2");
    const HillRaster raster(eps, o.resolution);
    std::ostringstream csv;
    csv << "q1,q2,class\n";
    for (int j = 0; j < raster.cells_per_side(); ++j) {
        for (int i = 0; i < raster.cells_per_side(); ++i) {
            if (!raster.inside(i, j)) continue;
            const Vec2 c = raster.center(i, j);
            const HillClass cls = raster.cell_class(i, j);
            const char tag = cls == HillClass::Bounded ? 'B' : cls == HillClass::Unbounded ? 'U' : 'F';
            csv << fmt17(c[0]) << ',' << fmt17(c[1]) << ',' << tag << '\n';
        }
    }
    out << csv.str();
    err << "components: " << raster.component_count() << "\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stark problem toric-domain toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* periods = app.add_subcommand("periods", "Periods tau1/tau2 with quadrature cross-check");
    periods->add_option("--eps", o.eps, "Field strength")->required();
    periods->add_option("--c", o.c, "Slice energy")->required();
    periods->add_option("--which", o.which, "plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    periods->add_option("--out", o.out, "Output path or -");

    auto* profile = app.add_subcommand("profile", "Sampled moment-map image as CSV");
    profile->add_option("--eps", o.eps, "Field strength")->required();
    profile->add_option("--samples", o.samples, "Number of c samples");
    profile->add_option("--out", o.out, "Output path or -");

    auto* verify = app.add_subcommand("verify", "Convexity certificates as JSON");
    verify->add_option("--eps", o.eps, "Comma separated field strengths")->required();
    verify->add_option("--samples", o.samples, "Grid size");
    verify->add_option("--tol", o.tol, "Relative finite-difference tolerance");
    verify->add_option("--out", o.out, "Output path or -");

    auto* flow = app.add_subcommand("flow", "Regularized trajectory as CSV");
    flow->add_option("--eps", o.eps, "Field strength")->required();
    flow->add_option("--init", o.init, "z1,w1,z2,w2");
    flow->add_option("--duration", o.duration, "Regularized time span");
    flow->add_option("--step", o.step, "Integrator step");
    flow->add_option("--scheme", o.scheme, "yoshida4 or leapfrog2");
    flow->add_option("--stride", o.stride, "Write every n-th step");
    flow->add_flag("--check-lc", o.check_lc, "Compare with the unregularized flow");
    flow->add_option("--out", o.out, "Output path or -");

    auto* hill = app.add_subcommand("hill", "Hill's region raster as CSV");
    hill->add_option("--eps", o.eps, "Field strength")->required();
    hill->add_option("--resolution", o.resolution, "Cells per side");
    hill->add_option("--out", o.out, "Output path or -");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        Sink sink(o.out, out);
        if (periods->parsed()) return cmd_periods(o, *sink);
        if (profile->parsed()) return cmd_profile(o, *sink);
        if (verify->parsed()) return cmd_verify(o, *sink);
        if (flow->parsed()) return cmd_flow(o, *sink);
        if (hill->parsed()) return cmd_hill(o, *sink, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const CollisionError& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    }
    return kUsageError;
}

}  // namespace stark_toric::cli
