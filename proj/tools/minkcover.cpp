// Command-line front end. Every subcommand prints text by default and
// machine-readable CSV/JSON on request; identical invocations produce
// byte-identical output.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "minkcover/covering.hpp"
#include "minkcover/svg.hpp"
#include "minkcover/verifier.hpp"

using nlohmann::ordered_json;
using namespace minkcover;

namespace {

struct Options {
    double tol = 1e-12;
    std::string format = "text"; // text | csv | json
    std::string svg_path;
    int grid = 64;
    int digits = 12;
    std::uint64_t seed = 0;

    [[nodiscard]] Tolerance tolerance() const { return {tol, tol, 200}; }
};

std::string num(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string num17(double v) { return num(v, 17); }

ordered_json jnum(double v) {
    if (!std::isfinite(v)) return nullptr; // JSON has no inf/nan
    return v;
}

struct Field {
    enum Kind { number, opt_number, text, boolean, integer };
    std::string name;
    Kind kind = number;
    double d = 0.0;
    bool present = true;
    std::string s;
    bool b = false;
    long long i = 0;
};

Field fnum(std::string name, double v) {
    Field f;
    f.name = std::move(name);
    f.d = v;
    return f;
}

Field fopt(std::string name, const std::optional<double>& v) {
    Field f;
    f.name = std::move(name);
    f.kind = Field::opt_number;
    f.present = v.has_value();
    f.d = v.value_or(0.0);
    return f;
}

Field fstr(std::string name, std::string v) {
    Field f;
    f.name = std::move(name);
    f.kind = Field::text;
    f.s = std::move(v);
    return f;
}

Field fbool(std::string name, bool v) {
    Field f;
    f.name = std::move(name);
    f.kind = Field::boolean;
    f.b = v;
    return f;
}

Field fint(std::string name, long long v) {
    Field f;
    f.name = std::move(name);
    f.kind = Field::integer;
    f.i = v;
    return f;
}

std::string csv_value(const Field& f) {
    switch (f.kind) {
        case Field::number: return num17(f.d);
        case Field::opt_number: return f.present ? num17(f.d) : "";
        case Field::text: return f.s;
        case Field::boolean: return f.b ? "true" : "false";
        case Field::integer: return std::to_string(f.i);
    }
    return "";
}

std::string text_value(const Field& f, int digits) {
    switch (f.kind) {
        case Field::number: return num(f.d, digits);
        case Field::opt_number: return f.present ? num(f.d, digits) : "n/a";
        case Field::text: return f.s;
        case Field::boolean: return f.b ? "true" : "false";
        case Field::integer: return std::to_string(f.i);
    }
    return "";
}

void json_put(ordered_json& j, const Field& f) {
    switch (f.kind) {
        case Field::number: j[f.name] = jnum(f.d); break;
        case Field::opt_number: j[f.name] = f.present ? jnum(f.d) : ordered_json(nullptr); break;
        case Field::text: j[f.name] = f.s; break;
        case Field::boolean: j[f.name] = f.b; break;
        case Field::integer: j[f.name] = f.i; break;
    }
}

void print_csv_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        std::printf("%s%s", i ? "," : "", header[i].c_str());
    std::printf("\n");
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::printf("%s%s", i ? "," : "", row[i].c_str());
        std::printf("\n");
    }
}

void emit(const Options& o, const std::string& command, const std::vector<Field>& fields) {
    if (o.format == "json") {
        ordered_json j;
        j["command"] = command;
        for (const Field& f : fields) json_put(j, f);
        std::printf("%s\n", j.dump(2).c_str());
    } else if (o.format == "csv") {
        std::vector<std::string> header, row;
        for (const Field& f : fields) {
            header.push_back(f.name);
            row.push_back(csv_value(f));
        }
        print_csv_table(header, {row});
    } else {
        std::size_t width = 0;
        for (const Field& f : fields) width = std::max(width, f.name.size());
        for (const Field& f : fields)
            std::printf("%-*s = %s\n", int(width), f.name.c_str(),
                        text_value(f, o.digits).c_str());
    }
}

BallParameter parse_p(double raw) {
    if (std::isinf(raw) && raw > 0.0) return BallParameter::limit_infinity();
    if (raw == 1.0) return BallParameter::limit_one();
    if (std::isfinite(raw) && raw > 1.0) return BallParameter::finite(raw);
    throw std::domain_error("--p must be 1, a finite value > 1, or inf");
}

double finite_p(double raw) {
    if (!std::isfinite(raw) || !(raw > 1.0))
        throw std::domain_error("this subcommand requires a finite --p > 1");
    return raw;
}

double p_display(BallParameter p) {
    switch (p.kind()) {
        case BallParameter::Kind::limit_one: return 1.0;
        case BallParameter::Kind::limit_infinity: return std::numeric_limits<double>::infinity();
        case BallParameter::Kind::finite: break;
    }
    return p.value();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw std::domain_error("failed writing " + path);
}

void warn_svg_unsupported(const Options& o) {
    if (!o.svg_path.empty())
        std::fprintf(stderr, "note: --svg has no effect for this subcommand; nothing written\n");
}

const char* verdict_name(bool match) { return match ? "MATCH" : "DISCREPANT"; }

// ---- subcommand bodies --------------------------------------------------

int cmd_volume(const Options& o, double praw) {
    warn_svg_unsupported(o);
    const BallParameter p = parse_p(praw);
    emit(o, "volume", {fnum("p", p_display(p)), fnum("volume", ball_volume(p))});
    return 0;
}

int cmd_tau(const Options& o, double praw) {
    warn_svg_unsupported(o);
    const double p = finite_p(praw);
    const double t = tau_p(p);
    const double residual = 2.0 * std::pow(1.0 - t, p) - 1.0 - std::pow(t, p);
    emit(o, "tau", {fnum("p", p), fnum("tau_p", t), fnum("residual", residual)});
    return 0;
}

int cmd_sigma(const Options& o, double praw, double alpha) {
    warn_svg_unsupported(o);
    const double p = finite_p(praw);
    emit(o, "sigma", {fnum("p", p), fnum("alpha", alpha), fnum("sigma", sigma_alpha(alpha, p))});
    return 0;
}

int cmd_critdet(const Options& o, double praw) {
    warn_svg_unsupported(o);
    const double p = finite_p(praw);
    const CriticalData d = critical_determinant(p);
    emit(o, "critdet",
         {fnum("p", d.p), fnum("tau_p", d.tau_p), fnum("sigma_p", d.sigma_p),
          fnum("delta_branch1", d.delta_branch1), fnum("delta_branch0", d.delta_branch0),
          fnum("critical_determinant", d.critical_determinant),
          fstr("active_branch", d.active_branch == Branch::branch0 ? "branch0" : "branch1"),
          fnum("min_area", min_area(p)), fnum("i_min_area", i_min_area(p))});
    return 0;
}

int cmd_davis(const Options& o) {
    warn_svg_unsupported(o);
    const double p0 = davis_constant(o.tolerance());
    emit(o, "davis",
         {fnum("p0", p0), fnum("branch_residual", delta_branch1(p0) - delta_branch0(p0))});
    return 0;
}

int cmd_area(const Options& o, double praw, std::optional<double> sigma,
             std::optional<double> tau, std::optional<double> alpha) {
    warn_svg_unsupported(o);
    const double p = finite_p(praw);
    if (!sigma && !alpha) throw std::domain_error("area requires --sigma or --alpha");
    const double s = alpha ? sigma_alpha(*alpha, p) : *sigma;
    const double t = tau ? *tau : tau_inscribed(p, s);
    const double a = moduli_area(p, t, s);
    const SymmetricHexagon hex = al_hexagon(p, t, s);
    std::vector<Field> fields{fnum("p", p)};
    if (alpha) fields.push_back(fnum("alpha", *alpha));
    fields.push_back(fnum("sigma", s));
    fields.push_back(fnum("tau", t));
    fields.push_back(fnum("area", a));
    fields.push_back(fnum("mid_vertex_residual",
                          boundary_residual(hex.w2, BallParameter::finite(p))));
    emit(o, "area", fields);
    return 0;
}

int cmd_gamma(const Options& o, double praw, bool general) {
    const BallParameter p = parse_p(praw);
    if (general && !p.is_finite())
        throw std::domain_error("--general requires a finite --p > 1");
    const AlMaximum m = covering_constant_al(p, o.tolerance(), o.grid);
    std::vector<Field> fields{fnum("p", p_display(p)), fnum("gamma_al", m.gamma_al),
                              fopt("sigma_star", m.sigma_star), fopt("tau_star", m.tau_star)};
    if (general) {
        const GeneralMaximum g = gamma_h_general(p.value(), o.tolerance());
        fields.push_back(fnum("gamma_general", g.gamma_h));
    }
    emit(o, "gamma", fields);

    if (!o.svg_path.empty()) {
        if (p.is_finite()) {
            const double pv = p.value();
            const double sp = sigma_p(pv);
            PlotSeries series;
            series.color = "#1f77b4";
            series.label = "inscribed area";
            const int n = 128;
            for (int i = 0; i <= n; ++i) {
                const double s = 1.0 + (sp - 1.0) * i / n;
                series.points.push_back({s, inscribed_area(pv, s)});
            }
            write_text_file(o.svg_path,
                            plot_chart({series}, "sigma", "area",
                                       "inscribed al-hexagon area, p = " + num(pv, 6)));
        } else {
            write_text_file(o.svg_path,
                            plot_hexagon_in_ball(p, limit_quadrangle(p), "limit quadrangle"));
        }
    }
    return 0;
}

int cmd_density(const Options& o, double praw) {
    warn_svg_unsupported(o);
    const BallParameter p = parse_p(praw);
    const AlMaximum m = covering_constant_al(p, o.tolerance(), o.grid);
    emit(o, "density",
         {fnum("p", p_display(p)), fnum("volume", ball_volume(p)), fnum("gamma_al", m.gamma_al),
          fnum("density_al", covering_density(p, m.gamma_al))});
    return 0;
}

int cmd_bounds(const Options& o, double praw) {
    warn_svg_unsupported(o);
    const double p = finite_p(praw);
    const CoveringSummary s = bounds_report(p, o.tolerance(), o.grid);
    emit(o, "bounds",
         {fnum("p", s.p), fnum("volume", s.volume), fnum("gamma_al", s.gamma_al),
          fopt("sigma_star", s.sigma_star), fopt("tau_star", s.tau_star),
          fnum("density_al", s.density_al), fnum("lower_bound_imin", s.lower_bound_imin),
          fnum("sas_bound", s.sas_bound), fnum("upper_bound_area", s.upper_bound_area),
          fnum("density_upper", s.density_upper), fbool("al_reaches_sas", s.al_reaches_sas)});
    return 0;
}

const char* segment_label(int which) {
    return which == 0 ? "(1,2]" : "[2,inf)";
}

int cmd_scan(const Options& o, double pmin, double pmax, int steps, bool general) {
    if (!std::isfinite(pmin) || !(pmin > 1.0)) throw std::domain_error("--p-min must be > 1");
    if (!std::isfinite(pmax) || !(pmax > pmin))
        throw std::domain_error("--p-max must exceed --p-min");
    if (steps < 2) throw std::domain_error("--steps must be at least 2");

    std::vector<double> ps(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        ps[std::size_t(i)] = i == steps - 1 ? pmax : pmin + (pmax - pmin) * i / (steps - 1);
    const ScanResult res = scan(ps, general, o.tolerance(), o.grid);

    std::vector<std::string> header{"p",          "sigma_star", "tau_star",
                                    "gamma_al",   "density_al", "alpha_fit"};
    if (general) {
        header.push_back("gamma_general");
        header.push_back("density_general");
    }
    const auto row_values = [&](const ScanRow& r, int digits) {
        std::vector<std::string> v{num(r.p, digits),          num(r.sigma_star, digits),
                                   num(r.tau_star, digits),   num(r.gamma_al, digits),
                                   num(r.density_al, digits), num(r.alpha_fit, digits)};
        if (general) {
            v.push_back(num(*r.gamma_general, digits));
            v.push_back(num(*r.density_general, digits));
        }
        return v;
    };
    const std::vector<std::pair<std::string, Trend>> verdicts = {
        {"gamma_al trend " + std::string(segment_label(0)), res.verdicts.gamma_below_2},
        {"gamma_al trend " + std::string(segment_label(1)), res.verdicts.gamma_above_2},
        {"density_al trend " + std::string(segment_label(0)), res.verdicts.density_below_2},
        {"density_al trend " + std::string(segment_label(1)), res.verdicts.density_above_2}};

    if (o.format == "json") {
        ordered_json j;
        j["command"] = "scan";
        j["p_min"] = pmin;
        j["p_max"] = pmax;
        j["steps"] = steps;
        j["include_general"] = general;
        j["rows"] = ordered_json::array();
        for (const ScanRow& r : res.rows) {
            ordered_json row;
            row["p"] = r.p;
            row["sigma_star"] = r.sigma_star;
            row["tau_star"] = r.tau_star;
            row["gamma_al"] = r.gamma_al;
            row["density_al"] = r.density_al;
            row["alpha_fit"] = jnum(r.alpha_fit);
            if (general) {
                row["gamma_general"] = *r.gamma_general;
                row["density_general"] = *r.density_general;
            }
            j["rows"].push_back(row);
        }
        j["verdicts"]["gamma_below_2"] = trend_name(res.verdicts.gamma_below_2);
        j["verdicts"]["gamma_above_2"] = trend_name(res.verdicts.gamma_above_2);
        j["verdicts"]["density_below_2"] = trend_name(res.verdicts.density_below_2);
        j["verdicts"]["density_above_2"] = trend_name(res.verdicts.density_above_2);
        std::printf("%s\n", j.dump(2).c_str());
    } else if (o.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(res.rows.size());
        for (const ScanRow& r : res.rows) rows.push_back(row_values(r, 17));
        print_csv_table(header, rows);
        for (const auto& [label, trend] : verdicts)
            std::printf("# %s: %s\n", label.c_str(), trend_name(trend));
    } else {
        const int w = o.digits + 8;
        for (std::size_t i = 0; i < header.size(); ++i)
            std::printf("%-*s", w, header[i].c_str());
        std::printf("\n");
        for (const ScanRow& r : res.rows) {
            for (const std::string& v : row_values(r, o.digits)) std::printf("%-*s", w, v.c_str());
            std::printf("\n");
        }
        for (const auto& [label, trend] : verdicts)
            std::printf("%s: %s\n", label.c_str(), trend_name(trend));
    }

    if (!o.svg_path.empty()) {
        std::vector<PlotSeries> series(2);
        series[0].color = "#1f77b4";
        series[0].label = "gamma_al";
        series[1].color = "#d62728";
        series[1].label = "density_al";
        for (const ScanRow& r : res.rows) {
            series[0].points.push_back({r.p, r.gamma_al});
            series[1].points.push_back({r.p, r.density_al});
        }
        if (general) {
            PlotSeries g{{}, "#2ca02c", "gamma_general"};
            PlotSeries d{{}, "#9467bd", "density_general"};
            for (const ScanRow& r : res.rows) {
                g.points.push_back({r.p, *r.gamma_general});
                d.points.push_back({r.p, *r.density_general});
            }
            series.push_back(g);
            series.push_back(d);
        }
        write_text_file(o.svg_path, plot_chart(series, "p", "value", "covering scan"));
    }
    return 0;
}

int cmd_verify(const Options& o, const std::vector<double>& basis, double praw,
               long long samples) {
    warn_svg_unsupported(o);
    const BallParameter p = parse_p(praw);
    const Lattice2 lat{{basis[0], basis[1]}, {basis[2], basis[3]}};
    const CoverageReport rep = is_covering(lat, p, samples, o.seed);
    const double mult = multiplicity_estimate(lat, p, samples, o.seed);
    emit(o, "verify",
         {fnum("p", p_display(p)), fnum("determinant", lattice_determinant(lat)),
          fint("samples", rep.samples), fint("seed", (long long)o.seed),
          fnum("covered_fraction", rep.covered_fraction),
          fbool("covering", rep.covered_fraction == 1.0), fnum("worst_x", rep.worst_point.x),
          fnum("worst_y", rep.worst_point.y), fnum("worst_gap", rep.worst_gap),
          fnum("multiplicity", mult)});
    return 0;
}

int cmd_reproduce(const Options& o) {
    const P3Report r = reproduce_p3_example(o.tolerance());

    if (o.format == "json") {
        ordered_json j;
        j["command"] = "reproduce-p3";
        j["sigma_2_3"] = r.sigma_2_3;
        j["tau_used"] = r.tau_used;
        j["w1"] = {r.hexagon.w1.x, r.hexagon.w1.y};
        j["w2"] = {r.hexagon.w2.x, r.hexagon.w2.y};
        j["w3"] = {r.hexagon.w3.x, r.hexagon.w3.y};
        j["area_family"] = r.area_family;
        j["mid_vertex_residual"] = r.mid_vertex_residual;
        j["volume"] = r.volume;
        j["implied_density"] = r.implied_density;
        j["gamma_al"] = r.gamma_al;
        j["gamma_general"] = r.gamma_general;
        j["comparisons"] = ordered_json::array();
        for (const ValueComparison& c : r.comparisons) {
            ordered_json row;
            row["name"] = c.name;
            row["computed"] = c.computed;
            row["quoted"] = c.quoted;
            row["difference"] = c.difference;
            row["tolerance"] = c.tolerance;
            row["verdict"] = verdict_name(c.match);
            j["comparisons"].push_back(row);
        }
        std::printf("%s\n", j.dump(2).c_str());
    } else if (o.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const ValueComparison& c : r.comparisons)
            rows.push_back({c.name, num17(c.computed), num17(c.quoted), num17(c.difference),
                            num17(c.tolerance), verdict_name(c.match)});
        print_csv_table({"name", "computed", "quoted", "difference", "tolerance", "verdict"},
                        rows);
    } else {
        const int d = o.digits;
        std::printf("sigma_2_3           = %s\n", num(r.sigma_2_3, d).c_str());
        std::printf("tau_used            = %s\n", num(r.tau_used, d).c_str());
        std::printf("w1                  = (%s, %s)\n", num(r.hexagon.w1.x, d).c_str(),
                    num(r.hexagon.w1.y, d).c_str());
        std::printf("w2                  = (%s, %s)\n", num(r.hexagon.w2.x, d).c_str(),
                    num(r.hexagon.w2.y, d).c_str());
        std::printf("w3                  = (%s, %s)\n", num(r.hexagon.w3.x, d).c_str(),
                    num(r.hexagon.w3.y, d).c_str());
        std::printf("area_family         = %s\n", num(r.area_family, d).c_str());
        std::printf("mid_vertex_residual = %+.*g\n", d, r.mid_vertex_residual);
        std::printf("volume              = %s\n", num(r.volume, d).c_str());
        std::printf("implied_density     = %s\n", num(r.implied_density, d).c_str());
        std::printf("gamma_al            = %s\n", num(r.gamma_al, d).c_str());
        std::printf("gamma_general       = %s\n", num(r.gamma_general, d).c_str());
        std::printf("comparisons:\n");
        for (const ValueComparison& c : r.comparisons)
            std::printf("  %-26s computed=%-*s quoted=%-*s diff=%+.*g tol=%g  %s\n",
                        c.name.c_str(), d + 7, num(c.computed, d).c_str(), 8,
                        num(c.quoted, 6).c_str(), 4, c.difference, c.tolerance,
                        verdict_name(c.match));
    }

    if (!o.svg_path.empty())
        write_text_file(o.svg_path,
                        plot_hexagon_in_ball(BallParameter::finite(3.0), r.hexagon,
                                             "worked example hexagon, p = 3"));
    return 0;
}

int cmd_fit_alpha(const Options& o, double praw) {
    warn_svg_unsupported(o);
    const double p = finite_p(praw);
    const AlMaximum m = covering_constant_al(BallParameter::finite(p), o.tolerance(), o.grid);
    const double alpha = *m.sigma_star > 1.0 ? alpha_fit(p, *m.sigma_star)
                                             : std::numeric_limits<double>::infinity();
    emit(o, "fit-alpha",
         {fnum("p", p), fnum("sigma_star", *m.sigma_star), fnum("gamma_al", m.gamma_al),
          fnum("alpha", alpha)});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice coverings of the plane by Minkowski balls D_p"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol", opt.tol, "solver tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--svg", opt.svg_path, "write an SVG plot to this path");
    app.add_option("--grid", opt.grid, "sigma-grid cells for the area maximizer")
        ->check(CLI::Range(4, 65536));
    app.add_option("--digits", opt.digits, "significant digits in text output")
        ->check(CLI::Range(3, 17));
    app.add_option("--seed", opt.seed, "seed for sampling subcommands");

    double p_volume = 0, p_tau = 0, p_sigma = 0, p_critdet = 0, p_area = 0, p_gamma = 0;
    double p_density = 0, p_bounds = 0, p_verify = 0, p_fit = 0;
    double sigma_alpha_arg = 1.0;
    std::optional<double> area_sigma, area_tau, area_alpha;
    bool gamma_general = false, scan_general = false;
    double scan_pmin = 0, scan_pmax = 0;
    int scan_steps = 0;
    std::vector<double> verify_basis;
    long long verify_samples = 10000;

    CLI::App* c_volume = app.add_subcommand("volume", "ball area V(D_p)");
    c_volume->add_option("--p", p_volume, "exponent; 1 and inf are the limit shapes")
        ->required();

    CLI::App* c_tau = app.add_subcommand("tau", "Davis parameter tau_p");
    c_tau->add_option("--p", p_tau)->required();

    CLI::App* c_sigma = app.add_subcommand("sigma", "sigma_p or the alpha-family value");
    c_sigma->add_option("--p", p_sigma)->required();
    c_sigma->add_option("--alpha", sigma_alpha_arg, "family exponent, default 1");

    CLI::App* c_critdet = app.add_subcommand("critdet", "critical determinant and branches");
    c_critdet->add_option("--p", p_critdet)->required();

    CLI::App* c_davis = app.add_subcommand("davis", "branch crossover constant p0");

    CLI::App* c_area = app.add_subcommand("area", "al-hexagon area on the moduli surface");
    c_area->add_option("--p", p_area)->required();
    CLI::Option* oa_sigma = c_area->add_option("--sigma", area_sigma);
    CLI::Option* oa_alpha =
        c_area->add_option("--alpha", area_alpha, "take sigma from the alpha-family");
    c_area->add_option("--tau", area_tau, "default: the inscribed tau for this sigma");
    oa_sigma->excludes(oa_alpha);

    CLI::App* c_gamma = app.add_subcommand("gamma", "covering constant");
    c_gamma->add_option("--p", p_gamma)->required();
    c_gamma->add_flag("--general", gamma_general, "also run the general-hexagon oracle");

    CLI::App* c_density = app.add_subcommand("density", "covering density V/Gamma");
    c_density->add_option("--p", p_density)->required();

    CLI::App* c_bounds = app.add_subcommand("bounds", "bound chain for the covering constant");
    c_bounds->add_option("--p", p_bounds)->required();

    CLI::App* c_scan = app.add_subcommand("scan", "sweep p and report the maxima curve");
    c_scan->add_option("--p-min", scan_pmin)->required();
    c_scan->add_option("--p-max", scan_pmax)->required();
    c_scan->add_option("--steps", scan_steps)->required();
    c_scan->add_flag("--general", scan_general);

    CLI::App* c_verify = app.add_subcommand("verify", "sampling check: is the lattice a covering");
    c_verify->add_option("--basis", verify_basis, "a1x,a1y,a2x,a2y")
        ->required()
        ->delimiter(',')
        ->expected(4);
    c_verify->add_option("--p", p_verify)->required();
    c_verify->add_option("--samples", verify_samples)->check(CLI::Range(1LL, 100000000LL));

    CLI::App* c_reproduce = app.add_subcommand("reproduce-p3", "recompute the p=3 worked example");

    CLI::App* c_fit = app.add_subcommand("fit-alpha", "family exponent matching sigma_star");
    c_fit->add_option("--p", p_fit)->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);

        if (*c_volume) return cmd_volume(opt, p_volume);
        if (*c_tau) return cmd_tau(opt, p_tau);
        if (*c_sigma) return cmd_sigma(opt, p_sigma, sigma_alpha_arg);
        if (*c_critdet) return cmd_critdet(opt, p_critdet);
        if (*c_davis) return cmd_davis(opt);
        if (*c_area) return cmd_area(opt, p_area, area_sigma, area_tau, area_alpha);
        if (*c_gamma) return cmd_gamma(opt, p_gamma, gamma_general);
        if (*c_density) return cmd_density(opt, p_density);
        if (*c_bounds) return cmd_bounds(opt, p_bounds);
        if (*c_scan) return cmd_scan(opt, scan_pmin, scan_pmax, scan_steps, scan_general);
        if (*c_verify) return cmd_verify(opt, verify_basis, p_verify, verify_samples);
        if (*c_reproduce) return cmd_reproduce(opt);
        if (*c_fit) return cmd_fit_alpha(opt, p_fit);
        return 64;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 64;
    } catch (const SolverError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
