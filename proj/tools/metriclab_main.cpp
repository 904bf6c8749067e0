// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: metric evaluation, bound evaluation, distortion
// windows, midpoints, quasiregular bounds, and the seeded experiments, with
// JSON (default) or CSV output.
//
// Exit codes: 0 success, 1 fuzz violations, 2 usage error, 3 domain or
// validation error, 4 convergence failure.

#include <complex>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metriclab/experiments.hpp"
#include "metriclab/io.hpp"
#include "metriclab/schwarz.hpp"

namespace {

using namespace metriclab;

// "ball2", "half3", "sector:1.5707963"
Domain parse_domain(const std::string& text) {
    if (text.rfind("ball", 0) == 0)
        return Domain::unit_ball(std::stoi(text.substr(4)));
    if (text.rfind("half", 0) == 0)
        return Domain::half_space(std::stoi(text.substr(4)));
    if (text.rfind("sector:", 0) == 0)
        return Domain::sector(std::stod(text.substr(7)));
    throw invalid_parameter_error("unknown domain '" + text +
                                  "' (expected ball<n>, half<n> or sector:<theta>)");
}

// "0.1,0.3", "0.1+0.3i", "0.5i", "0.7"
complex_t parse_complex(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        const auto comma = text.find(',');
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    }
    if (text.find('i') == std::string::npos) return {std::stod(text), 0.0};
    std::string body = text.substr(0, text.size() - 1);  // trailing 'i'
    if (body.empty() || body == "-" || body == "+") body += "1";
    // split off a leading real part if one is present
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < body.size(); ++k) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
            split = k;
    }
    if (split == std::string::npos) return {0.0, std::stod(body)};
    std::string imag = body.substr(split);
    if (imag == "-" || imag == "+") imag += "1";
    return {std::stod(body.substr(0, split)), std::stod(imag)};
}

Point parse_point(const std::string& text, int expected_dim) {
    std::vector<double> coords;
    if (text.find('i') != std::string::npos) {
        const complex_t z = parse_complex(text);
        coords = {z.real(), z.imag()};
    } else {
        std::size_t pos = 0;
        while (pos != std::string::npos) {
            const std::size_t comma = text.find(',', pos);
            coords.push_back(std::stod(
                text.substr(pos, comma == std::string::npos ? comma : comma - pos)));
            pos = comma == std::string::npos ? comma : comma + 1;
        }
    }
    if (expected_dim > 0 && static_cast<int>(coords.size()) != expected_dim)
        throw invalid_parameter_error("point has " + std::to_string(coords.size()) +
                                      " coordinates, domain expects " +
                                      std::to_string(expected_dim));
    return Point(std::move(coords));
}

MetricKind parse_kind(const std::string& name, double barrlund_p) {
    if (name == "rho") return MetricKind::hyperbolic();
    if (name == "j") return MetricKind::distance_ratio();
    if (name == "jstar") return MetricKind::jstar();
    if (name == "s") return MetricKind::triangular_ratio();
    if (name == "p") return MetricKind::point_pair();
    if (name == "w") return MetricKind::w_quasi();
    if (name == "t") return MetricKind::t_metric();
    if (name == "barrlund") return MetricKind::barrlund(barrlund_p);
    throw invalid_parameter_error("unknown metric kind '" + name + "'");
}

void emit(const std::string& text) {
    std::fputs(text.c_str(), stdout);
    if (text.empty() || text.back() != '\n') std::fputs("\n", stdout);
}

Json interval_json(const Interval& box) {
    Json out = Json::object();
    out.set("lower", Json::number(box.lower));
    out.set("upper", Json::number(box.upper));
    return out;
}

std::string interval_csv(const Interval& box) {
    Csv csv({"lower", "upper"});
    csv.row({format_double(box.lower), format_double(box.upper)});
    return csv.dump();
}

struct ExampleNumbers {
    double quotient;
    Interval windowed;
    Interval midpoint;
};

// a = 0.7, x = 0.1+0.3i, y = 0.3+0.5i: the reference configuration
// comparing the windowed bounds against the midpoint bounds
ExampleNumbers bound_comparison_example() {
    const Domain disk = Domain::unit_ball(2);
    const complex_t a{0.7, 0.0};
    const complex_t x{0.1, 0.3}, y{0.3, 0.5};
    const MoebiusMap map = MoebiusMap::disk_automorphism(a);
    const Point px = Point::from_complex(x), py = Point::from_complex(y);
    const Point fx = Point::from_complex(map.apply(x));
    const Point fy = Point::from_complex(map.apply(y));
    const double quotient = triangular_ratio_metric(disk, fx, fy) /
                            triangular_ratio_metric(disk, px, py);
    const double rl = std::abs(x), ru = std::abs(y);
    const Interval windowed = conformal_distortion_bounds(
        MetricKind::triangular_ratio(), {rl, ru},
        {disk_image_radii(a, rl).inner, disk_image_radii(a, ru).outer});
    const Interval midpoint = s_quotient_bounds(
        hyperbolic_midpoint(px, py).norm(),
        std::tanh(0.25 * hyperbolic_distance(disk, px, py)));
    return {quotient, windowed, midpoint};
}

int run(int argc, char** argv) {
    CLI::App app{"intrinsic metrics, conformal distortion bounds and experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand
    std::string format = "json";
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* metric_cmd = app.add_subcommand("metric", "evaluate one metric");
    std::string m_kind, m_domain = "ball2", m_x, m_y;
    double m_p = 2.0;
    metric_cmd->add_option("--kind", m_kind, "rho|j|jstar|s|p|w|t|barrlund")->required();
    metric_cmd->add_option("--domain", m_domain, "ball<n>|half<n>|sector:<theta>");
    metric_cmd->add_option("--x", m_x, "first point")->required();
    metric_cmd->add_option("--y", m_y, "second point")->required();
    metric_cmd->add_option("--p", m_p, "Barrlund exponent (default 2)");

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a bound family");
    std::string b_family, b_kind = "s", b_from = "half", b_to = "ball";
    double b_rl = 0.0, b_ru = 0.0, b_q = 0.0, b_t = 0.5, b_alpha = 1.0, b_beta = 1.0;
    bounds_cmd
        ->add_option("--family", b_family,
                     "ratio|fixed|hypmidrot|confquot|confquot-free|sector-w|"
                     "half-barrlund|jstar-threshold")
        ->required();
    bounds_cmd->add_option("--kind", b_kind, "metric kind for ratio/fixed");
    bounds_cmd->add_option("--rl", b_rl, "window lower radius");
    bounds_cmd->add_option("--ru", b_ru, "window upper radius");
    bounds_cmd->add_option("--from", b_from, "ball|half (fixed family)");
    bounds_cmd->add_option("--to", b_to, "ball|half (fixed family)");
    bounds_cmd->add_option("--q", b_q, "midpoint modulus");
    bounds_cmd->add_option("--t", b_t, "th(rho/4)");
    bounds_cmd->add_option("--alpha", b_alpha, "source sector angle");
    bounds_cmd->add_option("--beta", b_beta, "target sector angle");

    auto* distort_cmd =
        app.add_subcommand("distort", "windowed conformal distortion bounds");
    std::string d_kind = "s", d_a;
    double d_rl = 0.0, d_ru = 0.0, d_Rl = -1.0, d_Ru = -1.0;
    bool d_refined = false;
    distort_cmd->add_option("--kind", d_kind, "t|jstar|p|barrlund|s|w")->required();
    distort_cmd->add_option("--rl", d_rl, "source window lower radius")->required();
    distort_cmd->add_option("--ru", d_ru, "source window upper radius")->required();
    distort_cmd->add_option("--Rl", d_Rl, "image window lower radius");
    distort_cmd->add_option("--Ru", d_Ru, "image window upper radius");
    distort_cmd->add_option("--a", d_a,
                            "disk automorphism parameter; derives the image window");
    distort_cmd->add_flag("--refined", d_refined,
                          "threshold-aware lower constants for j*, s, w");

    auto* midpoint_cmd = app.add_subcommand("midpoint", "hyperbolic midpoint");
    std::string mid_x, mid_y;
    midpoint_cmd->add_option("--x", mid_x, "first point")->required();
    midpoint_cmd->add_option("--y", mid_y, "second point")->required();

    auto* schwarz_cmd =
        app.add_subcommand("schwarz", "quasiregular Schwarz-lemma bounds");
    std::string s_family, s_x, s_y;
    double s_k = 1.0, s_ki = -1.0, s_rho = 0.0, s_m = 0.0, s_alpha = 1.0,
           s_beta = 1.0, s_w = 0.0;
    int s_n = 2;
    schwarz_cmd->add_option("--family", s_family, "rho|dkqr|jpqr|sector")->required();
    schwarz_cmd->add_option("--K", s_k, "dilatation bound K >= 1");
    schwarz_cmd->add_option("--KI", s_ki, "inner dilatation (defaults to K)");
    schwarz_cmd->add_option("--n", s_n, "dimension");
    schwarz_cmd->add_option("--rho", s_rho, "hyperbolic distance (rho family)");
    schwarz_cmd->add_option("--m", s_m, "metric value in [0,1) (dkqr family)");
    schwarz_cmd->add_option("--x", s_x, "first point (jpqr family)");
    schwarz_cmd->add_option("--y", s_y, "second point (jpqr family)");
    schwarz_cmd->add_option("--alpha", s_alpha, "source sector angle (sector family)");
    schwarz_cmd->add_option("--beta", s_beta, "target sector angle (sector family)");
    schwarz_cmd->add_option("--w", s_w, "w value in the source sector");

    auto* mc_cmd = app.add_subcommand("mc-compare",
                                      "Monte Carlo comparison of the two bound methods");
    std::uint64_t mc_trials = 1000000, mc_seed = 0;
    mc_cmd->add_option("--trials", mc_trials, "number of trials");
    mc_cmd->add_option("--seed", mc_seed, "random seed");

    auto* sup_cmd = app.add_subcommand("sup-estimate",
                                       "supremum estimate of the T_a distortion");
    std::string sup_a = "0.7", sup_kind = "s";
    std::uint64_t sup_trials = 10000, sup_seed = 0;
    double sup_p = 2.0;
    sup_cmd->add_option("--a", sup_a, "automorphism parameter, |a| < 1");
    sup_cmd->add_option("--kind", sup_kind, "t|jstar|w|s|p|barrlund");
    sup_cmd->add_option("--p", sup_p, "Barrlund exponent");
    sup_cmd->add_option("--trials", sup_trials, "random trials");
    sup_cmd->add_option("--seed", sup_seed, "random seed");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "inequality fuzzer");
    std::string fz_domain = "ball2";
    std::uint64_t fz_trials = 100000, fz_seed = 0;
    fuzz_cmd->add_option("--domain", fz_domain, "ball<n>|half<n>|sector:<theta>|all");
    fuzz_cmd->add_option("--trials", fz_trials, "number of point pairs");
    fuzz_cmd->add_option("--seed", fz_seed, "random seed");

    auto* grid_cmd = app.add_subcommand("grid", "l/u bound-surface table");
    int grid_resolution = 64;
    grid_cmd->add_option("--resolution", grid_resolution, "grid resolution (>= 2)");

    auto* example_cmd = app.add_subcommand("example", "reference configurations");
    std::string example_name;
    example_cmd->add_option("name", example_name, "boundcomp")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const bool csv = format == "csv";

    if (metric_cmd->parsed()) {
        const Domain G = parse_domain(m_domain);
        const double value =
            evaluate(parse_kind(m_kind, m_p), G, parse_point(m_x, G.dim()),
                     parse_point(m_y, G.dim()));
        if (csv) {
            Csv table({"value"});
            table.row({format_double(value)});
            emit(table.dump());
        } else {
            Json out = Json::object();
            out.set("value", Json::number(value));
            emit(out.dump());
        }
        return 0;
    }

    if (bounds_cmd->parsed()) {
        if (b_family == "jstar-threshold") {
            const double value = jstar_threshold();
            if (csv) {
                Csv table({"value"});
                table.row({format_double(value)});
                emit(table.dump());
            } else {
                Json out = Json::object();
                out.set("value", Json::number(value));
                emit(out.dump());
            }
            return 0;
        }
        Interval box{0.0, 0.0};
        if (b_family == "ratio")
            box = ratio_bounds_vs_half_rho(parse_kind(b_kind, 2.0), {b_rl, b_ru});
        else if (b_family == "fixed")
            box = fixed_conformal_constants(
                parse_kind(b_kind, 2.0),
                b_from == "half" ? DomainKind::half_space : DomainKind::unit_ball,
                b_to == "half" ? DomainKind::half_space : DomainKind::unit_ball);
        else if (b_family == "hypmidrot")
            box = midpoint_rotation_s_bounds(b_q, b_t);
        else if (b_family == "confquot")
            box = s_quotient_bounds(b_q, b_t);
        else if (b_family == "confquot-free")
            box = s_quotient_bounds_midpoint_free(b_t);
        else if (b_family == "sector-w")
            box = sector_w_power_bounds(b_alpha, b_beta);
        else if (b_family == "half-barrlund")
            box = halfspace_barrlund_bounds();
        else
            throw invalid_parameter_error("unknown bound family '" + b_family + "'");
        emit(csv ? interval_csv(box) : interval_json(box).dump());
        return 0;
    }

    if (distort_cmd->parsed()) {
        const RadiusWindow source{d_rl, d_ru};
        RadiusWindow image = source;
        if (!d_a.empty()) {
            const complex_t a = parse_complex(d_a);
            image = RadiusWindow{disk_image_radii(a, d_rl).inner,
                                 disk_image_radii(a, d_ru).outer};
        } else if (d_Rl >= 0.0 && d_Ru >= 0.0) {
            image = RadiusWindow{d_Rl, d_Ru};
        } else {
            throw invalid_parameter_error("distort: give either --a or --Rl/--Ru");
        }
        const Interval box = conformal_distortion_bounds(parse_kind(d_kind, 2.0),
                                                         source, image, d_refined);
        if (csv) {
            Csv table({"lower", "upper", "rl", "ru", "Rl", "Ru"});
            table.row({format_double(box.lower), format_double(box.upper),
                       format_double(source.r_lower), format_double(source.r_upper),
                       format_double(image.r_lower), format_double(image.r_upper)});
            emit(table.dump());
        } else {
            Json out = Json::object();
            out.set("lower", Json::number(box.lower));
            out.set("upper", Json::number(box.upper));
            Json src = Json::array();
            src.push(Json::number(source.r_lower));
            src.push(Json::number(source.r_upper));
            out.set("source_window", std::move(src));
            Json img = Json::array();
            img.push(Json::number(image.r_lower));
            img.push(Json::number(image.r_upper));
            out.set("image_window", std::move(img));
            emit(out.dump());
        }
        return 0;
    }

    if (midpoint_cmd->parsed()) {
        const Point x = parse_point(mid_x, 0);
        const Point y = parse_point(mid_y, 0);
        const Point q = hyperbolic_midpoint(x, y);
        const double rho = hyperbolic_distance(Domain::unit_ball(static_cast<int>(x.dim())), x, y);
        if (csv) {
            std::vector<std::string> header, row;
            for (std::size_t i = 0; i < q.dim(); ++i) {
                header.push_back("q" + std::to_string(i));
                row.push_back(format_double(q[i]));
            }
            header.insert(header.end(), {"abs", "rho", "t"});
            row.push_back(format_double(q.norm()));
            row.push_back(format_double(rho));
            row.push_back(format_double(std::tanh(0.25 * rho)));
            Csv table(header);
            table.row(row);
            emit(table.dump());
        } else {
            Json out = Json::object();
            Json coords = Json::array();
            for (std::size_t i = 0; i < q.dim(); ++i) coords.push(Json::number(q[i]));
            out.set("midpoint", std::move(coords));
            out.set("abs", Json::number(q.norm()));
            out.set("rho", Json::number(rho));
            out.set("t", Json::number(std::tanh(0.25 * rho)));
            emit(out.dump());
        }
        return 0;
    }

    if (schwarz_cmd->parsed()) {
        const Dilatation dil(s_k, s_ki < 0.0 ? s_k : s_ki, s_n);
        Json out = Json::object();
        std::vector<std::string> header, row;
        auto field = [&](const char* name, double value) {
            out.set(name, Json::number(value));
            header.push_back(name);
            row.push_back(format_double(value));
        };
        if (s_family == "rho") {
            const auto b = quasiregular_rho_bounds(dil, s_rho);
            if (b.rho_phi) field("rho_phi", *b.rho_phi);
            field("tanh_power", b.tanh_power);
            field("rho_linear", b.rho_linear);
            if (b.rho_planar) field("rho_planar", *b.rho_planar);
        } else if (s_family == "dkqr") {
            const auto b = quasiregular_metric_bounds(dil, s_m);
            if (b.phi_bound) field("phi_bound", *b.phi_bound);
            field("power_bound", b.power_bound);
            if (b.sharp_phi) field("sharp_phi", *b.sharp_phi);
            if (b.sharp_power) field("sharp_power", *b.sharp_power);
        } else if (s_family == "jpqr") {
            const auto b = quasiregular_jstar_bounds(dil, parse_point(s_x, s_n),
                                                     parse_point(s_y, s_n));
            field("lhs_form", b.lhs_form);
            if (b.phi_bound) field("phi_bound", *b.phi_bound);
            field("power_bound", b.power_bound);
        } else if (s_family == "sector") {
            const Interval box =
                sector_quasiconformal_w_bounds(s_k, s_alpha, s_beta, s_w);
            field("lower", box.lower);
            field("upper", box.upper);
        } else {
            throw invalid_parameter_error("unknown schwarz family '" + s_family + "'");
        }
        if (csv) {
            Csv table(header);
            table.row(row);
            emit(table.dump());
        } else {
            emit(out.dump());
        }
        return 0;
    }

    if (mc_cmd->parsed()) {
        const ComparisonSummary s = compare_bound_methods(mc_trials, mc_seed);
        const double fraction =
            static_cast<double>(s.both_better) / static_cast<double>(s.total);
        if (csv) {
            Csv table({"total", "both_better", "lower_better", "upper_better",
                       "fraction_both", "seed"});
            table.row({std::to_string(s.total), std::to_string(s.both_better),
                       std::to_string(s.lower_better), std::to_string(s.upper_better),
                       format_double(fraction), std::to_string(s.seed)});
            emit(table.dump());
        } else {
            Json results = Json::object();
            results.set("total", Json::integer(s.total));
            results.set("both_better", Json::integer(s.both_better));
            results.set("lower_better", Json::integer(s.lower_better));
            results.set("upper_better", Json::integer(s.upper_better));
            results.set("fraction_both", Json::number(fraction));
            Json out = Json::object();
            out.set("experiment", Json::string("mc-compare"));
            out.set("seed", Json::integer(s.seed));
            out.set("trials", Json::integer(s.total));
            out.set("results", std::move(results));
            emit(out.dump());
        }
        return 0;
    }

    if (sup_cmd->parsed()) {
        const complex_t a = parse_complex(sup_a);
        const double estimate = sup_distortion_estimate(
            a, parse_kind(sup_kind, sup_p), sup_trials, sup_seed);
        const double conjectured = 1.0 + std::abs(a);
        if (csv) {
            Csv table({"estimate", "conjectured_sup", "trials", "seed"});
            table.row({format_double(estimate), format_double(conjectured),
                       std::to_string(sup_trials), std::to_string(sup_seed)});
            emit(table.dump());
        } else {
            Json results = Json::object();
            results.set("estimate", Json::number(estimate));
            results.set("conjectured_sup", Json::number(conjectured));
            Json out = Json::object();
            out.set("experiment", Json::string("sup-estimate"));
            out.set("seed", Json::integer(sup_seed));
            out.set("trials", Json::integer(sup_trials));
            out.set("results", std::move(results));
            emit(out.dump());
        }
        return 0;
    }

    if (fuzz_cmd->parsed()) {
        FuzzReport report;
        if (fz_domain == "all") {
            // the four standard domains, violations prefixed by domain name
            const Domain domains[] = {Domain::unit_ball(2), Domain::half_space(2),
                                      Domain::unit_ball(3),
                                      Domain::sector(std::numbers::pi / 2.0)};
            report.trials = fz_trials;
            report.seed = fz_seed;
            for (const Domain& G : domains) {
                FuzzReport part = inequality_fuzz(G, fz_trials, fz_seed);
                report.checks += part.checks;
                for (Violation& v : part.violations) {
                    v.name = G.name() + ": " + v.name;
                    report.violations.push_back(std::move(v));
                }
            }
        } else {
            report = inequality_fuzz(parse_domain(fz_domain), fz_trials, fz_seed);
        }
        if (csv) {
            Csv table({"trial", "name", "lhs", "rhs"});
            for (const auto& v : report.violations)
                table.row({std::to_string(v.trial), v.name, format_double(v.lhs),
                           format_double(v.rhs)});
            emit(table.dump());
        } else {
            Json violations = Json::array();
            for (const auto& v : report.violations) {
                Json item = Json::object();
                item.set("trial", Json::integer(v.trial));
                item.set("name", Json::string(v.name));
                item.set("lhs", Json::number(v.lhs));
                item.set("rhs", Json::number(v.rhs));
                violations.push(std::move(item));
            }
            Json results = Json::object();
            results.set("domain", Json::string(fz_domain));
            results.set("checks", Json::integer(report.checks));
            results.set("violation_count",
                        Json::integer(static_cast<std::uint64_t>(report.violations.size())));
            results.set("violations", std::move(violations));
            Json out = Json::object();
            out.set("experiment", Json::string("inequality-fuzz"));
            out.set("seed", Json::integer(report.seed));
            out.set("trials", Json::integer(report.trials));
            out.set("results", std::move(results));
            emit(out.dump());
        }
        return report.violations.empty() ? 0 : 1;
    }

    if (grid_cmd->parsed()) {
        const auto rows = quotient_bound_grid(grid_resolution);
        if (csv) {
            Csv table({"q", "t", "lower", "upper", "branch"});
            for (const auto& r : rows)
                table.row({format_double(r.q), format_double(r.t),
                           format_double(r.lower), format_double(r.upper), r.branch});
            emit(table.dump());
        } else {
            Json list = Json::array();
            for (const auto& r : rows) {
                Json item = Json::array();
                item.push(Json::number(r.q));
                item.push(Json::number(r.t));
                item.push(Json::number(r.lower));
                item.push(Json::number(r.upper));
                item.push(Json::string(r.branch));
                list.push(std::move(item));
            }
            Json results = Json::object();
            results.set("resolution", Json::integer(grid_resolution));
            results.set("rows", std::move(list));
            Json out = Json::object();
            out.set("experiment", Json::string("bound-grid"));
            out.set("results", std::move(results));
            emit(out.dump());
        }
        return 0;
    }

    if (example_cmd->parsed()) {
        if (example_name != "boundcomp")
            throw invalid_parameter_error("unknown example '" + example_name + "'");
        const ExampleNumbers ex = bound_comparison_example();
        if (csv) {
            Csv table({"quotient", "window_lower", "window_upper", "midpoint_lower",
                       "midpoint_upper"});
            table.row({format_double(ex.quotient), format_double(ex.windowed.lower),
                       format_double(ex.windowed.upper),
                       format_double(ex.midpoint.lower),
                       format_double(ex.midpoint.upper)});
            emit(table.dump());
        } else {
            Json results = Json::object();
            results.set("quotient", Json::number(ex.quotient));
            results.set("window_lower", Json::number(ex.windowed.lower));
            results.set("window_upper", Json::number(ex.windowed.upper));
            results.set("midpoint_lower", Json::number(ex.midpoint.lower));
            results.set("midpoint_upper", Json::number(ex.midpoint.upper));
            Json out = Json::object();
            out.set("experiment", Json::string("example-boundcomp"));
            out.set("results", std::move(results));
            emit(out.dump());
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
