// Copyright 2026 The superpose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superpose/error.hpp"
#include "superpose/extract.hpp"
#include "superpose/io.hpp"
#include "superpose/measure.hpp"
#include "superpose/qudit.hpp"
#include "superpose/synthesize.hpp"

namespace superpose::cli {

namespace {

using io::Json;

constexpr double kDeg = std::numbers::pi / 180.0;

struct SynthesizeArgs {
    double mu = 0.0;
    double nu = 0.0;
    std::optional<double> c;
    std::vector<double> plane;
    bool deg = false;
    std::string out_path;
};

struct VerifyArgs {
    std::string channel;
    std::optional<double> x;
    std::optional<double> y;
    std::vector<double> bloch;
    // Angles typed with 4-5 decimals leave residuals of a few 1e-6.
    double tol = 1e-5;
    bool deg = false;
};

struct ScanArgs {
    std::string channel;
    std::size_t grid = 200;
    double tol = 1e-9;
    std::string csv_path;
};

struct BandArgs {
    double mu = 0.0;
    double nu = 0.0;
    double c = 0.0;
    std::vector<double> plane;
    double eps = 0.01;
    std::size_t samples = 1000000;
    std::uint64_t seed = 0;
    bool deg = false;
};

struct QuditArgs {
    double gamma = 0.0;
    double theta0 = 0.0;
    double eps = 1e-3;
    std::size_t samples = 1000000;
    std::uint64_t seed = 0;
    bool deg = false;
};

struct Fig1Args {
    std::string out_dir = "fig1";
    std::size_t points = 256;
};

SphereCircle circle_from_args(double mu, double nu, double c, const std::vector<double> &plane, bool deg) {
    if (!plane.empty()) {
        return circle_from_plane(plane[0], plane[1], plane[2], plane[3]);
    }
    const double scale = deg ? kDeg : 1.0;
    SphereCircle circ{mu * scale, nu * scale, c, false};
    return canonicalize(circ);
}

int cmd_synthesize(const SynthesizeArgs &a, std::ostream &out) {
    if (a.plane.empty() && !a.c) {
        throw DomainError("synthesize needs --c (with --mu/--nu) or --plane");
    }
    const SuperpositionChannel ch = synthesize_channel(circle_from_args(a.mu, a.nu, a.c.value_or(0.0), a.plane, a.deg));
    const Json channel = io::channel_to_json(ch);
    if (a.out_path.empty()) {
        out << io::dump(channel) << '\n';
        return kExitOk;
    }
    io::write_text_file(a.out_path, io::dump(channel) + "\n");
    Json summary;
    summary["file"] = a.out_path;
    summary["alpha"] = channel["alpha"];
    summary["beta"] = channel["beta"];
    summary["lambda"] = channel["lambda"];
    summary["circle"] = channel["circle"];
    summary["output_state"] = channel["output_state"];
    summary["output_point"] = io::point_to_json(state_to_bloch(ch.output_state));
    out << io::dump(summary) << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    const io::ChannelFile file = io::read_channel_file(a.channel);
    PureQubit psi = ket0();
    if (!a.bloch.empty()) {
        psi = bloch_to_state({a.bloch[0], a.bloch[1], a.bloch[2]});
    } else if (a.x && a.y) {
        const double scale = a.deg ? kDeg : 1.0;
        psi = PureQubit::from_angles(*a.x * scale, *a.y * scale);
    } else {
        throw DomainError("verify needs --x and --y, or --bloch X,Y,Z");
    }
    const SuperposableResult res = is_superposable(file.map, file.spec, psi, ket0(), a.tol);
    Json j = io::fit_report_to_json(res.report);
    j["superposable"] = res.superposable;
    j["point"] = io::point_to_json(state_to_bloch(psi));
    out << io::dump(j) << '\n';
    return res.superposable ? kExitOk : kExitDomain;
}

int cmd_extract(const std::string &path, std::ostream &out) {
    const io::ChannelFile file = io::read_channel_file(path);
    const std::vector<Extraction> ex = extract_circles(file.map, file.spec);
    if (ex.size() == 1) {
        out << io::dump(io::extraction_to_json(ex.front())) << '\n';
        return kExitOk;
    }
    Json ops = Json::array();
    for (const Extraction &e : ex) {
        ops.push_back(io::extraction_to_json(e));
    }
    out << io::dump(Json{{"operators", ops}}) << '\n';
    return kExitOk;
}

int cmd_scan(const ScanArgs &a, std::ostream &out) {
    const io::ChannelFile file = io::read_channel_file(a.channel);
    const std::vector<BlochPoint> pts = scan_superposable(file.map, file.spec, a.grid, a.tol);
    Json j;
    j["grid"] = a.grid;
    j["tol"] = a.tol;
    j["accepted"] = pts.size();
    if (pts.size() >= 3) {
        const PlaneFit fit = fit_plane(pts);
        j["fit"] = Json{{"circle", io::circle_to_json(fit.circle)},
                        {"max_residual", fit.max_residual},
                        {"degenerate", fit.degenerate}};
    } else {
        j["fit"] = nullptr;
    }
    if (!a.csv_path.empty()) {
        std::ostringstream csv;
        io::write_points_csv(csv, pts);
        io::write_text_file(a.csv_path, csv.str());
        j["csv"] = a.csv_path;
    } else {
        Json arr = Json::array();
        for (const BlochPoint &p : pts) {
            arr.push_back(io::point_to_json(p));
        }
        j["points"] = arr;
    }
    out << io::dump(j) << '\n';
    return kExitOk;
}

int cmd_measure_band(const BandArgs &a, std::ostream &out) {
    const SphereCircle circ = circle_from_args(a.mu, a.nu, a.c, a.plane, a.deg);
    const FractionEstimate est = band_fraction(circ, a.eps, a.samples, a.seed);
    Json j = io::fraction_to_json(est, band_expectation(circ, a.eps));
    j["circle"] = io::circle_to_json(circ);
    out << io::dump(j) << '\n';
    return kExitOk;
}

int cmd_qudit_check(const QuditArgs &a, std::ostream &out) {
    const double scale = a.deg ? kDeg : 1.0;
    const double h = std::sqrt(0.5);
    const QuditProtocol p(SuperpositionSpec(h, h), a.theta0 * scale, (a.theta0 + a.gamma) * scale);
    const FractionEstimate est = violation_fraction(p, a.eps, a.samples, a.seed);
    Json j;
    j["fraction"] = est.fraction;
    j["ci95"] = Json::array({est.ci95_lo, est.ci95_hi});
    j["circle"] = io::circle_to_json(violation_circle(p));
    j["hits"] = est.hits;
    j["samples"] = est.samples;
    out << io::dump(j) << '\n';
    return kExitOk;
}

int cmd_fig1(const Fig1Args &a, std::ostream &out) {
    std::error_code ec;
    std::filesystem::create_directories(a.out_dir, ec);
    if (ec) {
        throw IoError("cannot create " + a.out_dir + ": " + ec.message());
    }
    Json circles = Json::array();
    std::optional<BlochPoint> output_point;
    for (double c : {-1.5, 0.0, 1.3}) {
        const SphereCircle circ = circle_from_plane(1.0, 1.0, 1.0, c);
        const SuperpositionChannel ch = synthesize_channel(circ);
        const std::vector<BlochPoint> pts = circle_points(circ, a.points);

        double p_min = 1.0;
        double p_max = 0.0;
        double p_sum = 0.0;
        double plane_err = 0.0;
        BlochPoint best = pts.front();
        for (const BlochPoint &pt : pts) {
            const double prob = success_probability(ch, bloch_to_state(pt));
            p_min = std::min(p_min, prob);
            p_sum += prob;
            if (prob > p_max) {
                p_max = prob;
                best = pt;
            }
            plane_err = std::max(plane_err, std::abs(pt.x + pt.y + pt.z + c));
        }

        std::ostringstream name;
        name << "fig1_circle_c" << io::format_double(c) << ".csv";
        std::ostringstream csv;
        io::write_points_csv(csv, pts);
        io::write_text_file((std::filesystem::path(a.out_dir) / name.str()).string(), csv.str());

        output_point = state_to_bloch(ch.output_state);
        Json entry;
        entry["plane_c"] = c;
        entry["circle"] = io::circle_to_json(circ);
        entry["csv"] = name.str();
        entry["points"] = pts.size();
        entry["max_plane_residual"] = plane_err;
        entry["success_prob"] = Json{{"min", p_min}, {"max", p_max}, {"mean", p_sum / static_cast<double>(pts.size())}};
        entry["max_prob_point"] = io::point_to_json(best);
        entry["alpha"] = io::complex_to_json(ch.spec.alpha());
        entry["beta"] = io::complex_to_json(ch.spec.beta());
        entry["lambda"] = ch.lambda;
        circles.push_back(entry);
    }
    Json manifest;
    manifest["plane"] = "X+Y+Z+c=0";
    manifest["output_point"] = io::point_to_json(*output_point);
    manifest["circles"] = circles;
    io::write_text_file((std::filesystem::path(a.out_dir) / "manifest.json").string(), io::dump(manifest) + "\n");
    out << io::dump(manifest) << '\n';
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Construct and verify channels that superpose an unknown qubit with a known state"};
    app.require_subcommand(1);

    SynthesizeArgs syn;
    auto *synthesize = app.add_subcommand("synthesize", "Build the channel for a circle on the Bloch sphere");
    synthesize->add_option("--mu", syn.mu, "Polar angle of the plane normal");
    synthesize->add_option("--nu", syn.nu, "Azimuth of the plane normal");
    synthesize->add_option("--c", syn.c, "Plane offset");
    synthesize->add_option("--plane", syn.plane, "Plane nx,ny,nz,d (normalized internally)")
        ->delimiter(',')
        ->expected(4);
    synthesize->add_flag("--deg", syn.deg, "Angles are in degrees");
    synthesize->add_option("-o,--out", syn.out_path, "Write the channel JSON here");

    VerifyArgs ver;
    auto *verify = app.add_subcommand("verify", "Check whether a channel superposes a state with |0>");
    verify->add_option("channel", ver.channel, "Channel JSON file")->required();
    verify->add_option("--x", ver.x, "Polar angle of the state");
    verify->add_option("--y", ver.y, "Azimuth of the state");
    verify->add_option("--bloch", ver.bloch, "State as a Bloch point X,Y,Z")->delimiter(',')->expected(3);
    verify->add_option("--tol", ver.tol, "Fit tolerance");
    verify->add_flag("--deg", ver.deg, "Angles are in degrees");

    std::string extract_path;
    auto *extract = app.add_subcommand("extract", "Derive the superposable circle of a channel");
    extract->add_option("channel", extract_path, "Channel JSON file")->required();

    ScanArgs sc;
    auto *scan = app.add_subcommand("scan", "Scan an angle grid for superposable states");
    scan->add_option("channel", sc.channel, "Channel JSON file")->required();
    scan->add_option("--grid", sc.grid, "Grid size per angle")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    scan->add_option("--tol", sc.tol, "Fit tolerance");
    scan->add_option("--csv", sc.csv_path, "Write accepted points as CSV");

    BandArgs band;
    auto *measure = app.add_subcommand("measure-band", "Monte Carlo area fraction of a band around a circle");
    measure->add_option("--mu", band.mu);
    measure->add_option("--nu", band.nu);
    measure->add_option("--c", band.c);
    measure->add_option("--plane", band.plane)->delimiter(',')->expected(4);
    measure->add_option("--eps", band.eps);
    measure->add_option("--samples", band.samples);
    measure->add_option("--seed", band.seed);
    measure->add_flag("--deg", band.deg);

    QuditArgs qd;
    auto *qudit = app.add_subcommand("qudit-check", "Area fraction near the linear-dependence circle");
    qudit->add_option("--gamma", qd.gamma, "theta1 - theta0");
    qudit->add_option("--theta0", qd.theta0);
    qudit->add_option("--eps", qd.eps);
    qudit->add_option("--samples", qd.samples);
    qudit->add_option("--seed", qd.seed);
    qudit->add_flag("--deg", qd.deg);

    Fig1Args fig;
    auto *fig1 = app.add_subcommand("fig1", "Emit circle and output-state data for planes X+Y+Z+c=0");
    fig1->add_option("--out-dir", fig.out_dir);
    fig1->add_option("--points", fig.points)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help exits 0; every usage error maps onto the domain-error code.
        return app.exit(e, out, err) == 0 ? kExitOk : kExitDomain;
    }

    try {
        if (*synthesize) {
            return cmd_synthesize(syn, out);
        }
        if (*verify) {
            return cmd_verify(ver, out);
        }
        if (*extract) {
            return cmd_extract(extract_path, out);
        }
        if (*scan) {
            return cmd_scan(sc, out);
        }
        if (*measure) {
            return cmd_measure_band(band, out);
        }
        if (*qudit) {
            return cmd_qudit_check(qd, out);
        }
        if (*fig1) {
            return cmd_fig1(fig, out);
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace superpose::cli
