// cauchyfdiv: compute f-divergences between Cauchy-type distributions,
// run property suites, and export curves/tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfdiv/acceptance.hpp"
#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/chi_series.hpp"
#include "cfdiv/closed_form.hpp"
#include "cfdiv/families.hpp"
#include "cfdiv/geometry_analysis.hpp"
#include "cfdiv/oracle.hpp"
#include "cfdiv/quadrature.hpp"

namespace {

using nlohmann::json;

std::vector<double> parse_numbers(const std::string& text, char sep)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(item[pos])) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("trailing characters in number: " +
                                        item);
        out.push_back(v);
    }
    return out;
}

cfdiv::CauchyParam parse_param(const std::string& text)
{
    const auto v = parse_numbers(text, ',');
    if (v.size() != 2)
        throw std::invalid_argument(
            "parameter must be 'location,scale': " + text);
    return {v[0], v[1]};
}

cfdiv::BivariateCauchy parse_bivariate(const std::string& text)
{
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument(
            "bivariate parameter must be 'l1,l2;s11,s12,s22': " + text);
    const auto mu = parse_numbers(text.substr(0, semi), ',');
    const auto sig = parse_numbers(text.substr(semi + 1), ',');
    if (mu.size() != 2 || sig.size() != 3)
        throw std::invalid_argument(
            "bivariate parameter must be 'l1,l2;s11,s12,s22': " + text);
    return {mu[0], mu[1], sig[0], sig[1], sig[2]};
}

/** Full-precision JSON: every double printed with 17 significant digits. */
void emit_json(const json& j)
{
    std::function<void(const json&, std::string&)> render =
        [&](const json& node, std::string& out) {
            if (node.is_object()) {
                out += '{';
                bool first = true;
                for (auto it = node.begin(); it != node.end(); ++it) {
                    if (!first) out += ',';
                    first = false;
                    out += json(it.key()).dump();
                    out += ':';
                    render(it.value(), out);
                }
                out += '}';
            } else if (node.is_array()) {
                out += '[';
                bool first = true;
                for (const auto& v : node) {
                    if (!first) out += ',';
                    first = false;
                    render(v, out);
                }
                out += ']';
            } else if (node.is_number_float()) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g",
                              node.get<double>());
                out += buf;
            } else {
                out += node.dump();
            }
        };
    std::string out;
    render(j, out);
    std::cout << out << "\n";
}

void emit_csv(const std::string& body, const std::string& path)
{
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << body;
}

std::string csv_num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* verdict_name(cfdiv::SeriesVerdict v)
{
    switch (v) {
        case cfdiv::SeriesVerdict::Converged: return "converged";
        case cfdiv::SeriesVerdict::Diverged: return "diverged";
        default: return "truncated";
    }
}

struct Options {
    std::string kind = "kl";
    double alpha = 0.5;
    std::string p_text, q_text;
    std::string method = "closed";
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::int64_t mc_samples = 1000000;
    int max_terms = 100;
    std::string family = "circular";
    std::string out_path;
    std::string curve_name = "fr-to-bhat";
    double grid_min = 0.0, grid_max = 10.0;
    int steps = 101;
    std::string fit_target = "j";
    int order = 6, degree = 5, samples = 60;
    std::string suite;
    int threads = 1;
};

int cmd_div(const Options& o)
{
    const auto kind = cfdiv::parse_kind(o.kind, o.alpha);
    const auto p = parse_param(o.p_text), q = parse_param(o.q_text);
    json j{{"kind", cfdiv::kind_name(kind)},
           {"method", o.method},
           {"p", {p.location(), p.scale()}},
           {"q", {q.location(), q.scale()}},
           {"chi", cfdiv::chi(p, q)}};
    if (o.method == "closed") {
        j["value"] = cfdiv::divergence(kind, p, q);
    } else if (o.method == "quad") {
        j["value"] = cfdiv::oracle_divergence(kind, p, q, o.tol);
        j["tol"] = o.tol;
    } else if (o.method == "mc") {
        const auto r =
            cfdiv::mc_f_divergence(cfdiv::catalog_generator(kind),
                                   cfdiv::DensitySpec{p}, cfdiv::DensitySpec{q},
                                   o.mc_samples, o.seed);
        j["value"] = r.estimate;
        j["stderr"] = r.stderr_;
        j["samples"] = o.mc_samples;
        j["seed"] = o.seed;
    } else if (o.method == "series") {
        const auto r =
            cfdiv::taylor_f_divergence(kind, p, q, o.tol, o.max_terms);
        j["value"] = r.value;
        j["terms_used"] = r.terms_used;
        j["verdict"] = verdict_name(r.verdict);
    } else {
        throw std::invalid_argument("unknown method: " + o.method);
    }
    emit_json(j);
    return 0;
}

int cmd_series(const Options& o)
{
    const auto kind = cfdiv::parse_kind(o.kind, o.alpha);
    const auto p = parse_param(o.p_text), q = parse_param(o.q_text);
    const auto r = cfdiv::taylor_f_divergence(kind, p, q, o.tol, o.max_terms);
    json j{{"kind", cfdiv::kind_name(kind)},
           {"chi", cfdiv::chi(p, q)},
           {"value", r.value},
           {"terms_used", r.terms_used},
           {"verdict", verdict_name(r.verdict)},
           {"term_trace", r.term_trace}};
    emit_json(j);
    return 0;
}

int cmd_mv_kl(const Options& o)
{
    const auto p = parse_bivariate(o.p_text);
    const auto q = parse_bivariate(o.q_text);
    json j{{"kind", "kl"},
           {"dimension", 2},
           {"tol", o.tol},
           {"value", cfdiv::quad_kl_bivariate(p, q, o.tol)}};
    emit_json(j);
    return 0;
}

int cmd_family(const Options& o)
{
    const auto kind = cfdiv::parse_kind(o.kind, o.alpha);
    double value;
    if (o.family == "circular") {
        const auto p = parse_numbers(o.p_text, ',');
        const auto q = parse_numbers(o.q_text, ',');
        if (p.size() != 2 || q.size() != 2)
            throw std::invalid_argument(
                "circular parameter must be 're,im' of the disk point");
        value = cfdiv::family_divergence(kind, cfdiv::CircularSpec{{p[0], p[1]}},
                                         cfdiv::CircularSpec{{q[0], q[1]}});
    } else if (o.family == "wrapped") {
        const auto p = parse_numbers(o.p_text, ',');
        const auto q = parse_numbers(o.q_text, ',');
        if (p.size() != 2 || q.size() != 2)
            throw std::invalid_argument(
                "wrapped parameter must be 'mu,gamma'");
        value = cfdiv::family_divergence(kind, cfdiv::WrappedSpec{p[0], p[1]},
                                         cfdiv::WrappedSpec{q[0], q[1]});
    } else if (o.family == "log-cauchy") {
        const auto p = parse_numbers(o.p_text, ',');
        const auto q = parse_numbers(o.q_text, ',');
        if (p.size() != 2 || q.size() != 2)
            throw std::invalid_argument(
                "log-cauchy parameter must be 'mu,sigma'");
        value = cfdiv::family_divergence(kind, cfdiv::LogCauchySpec{p[0], p[1]},
                                         cfdiv::LogCauchySpec{q[0], q[1]});
    } else {
        throw std::invalid_argument("unknown family: " + o.family);
    }
    json j{{"family", o.family},
           {"kind", cfdiv::kind_name(kind)},
           {"value", value}};
    emit_json(j);
    return 0;
}

int cmd_table(const Options& o)
{
    const auto kind = cfdiv::parse_kind(o.kind, o.alpha);
    if (o.steps < 2) throw std::invalid_argument("table needs >= 2 steps");
    std::string body = "chi,h\n";
    for (int i = 0; i < o.steps; ++i) {
        const double u =
            o.grid_min + (o.grid_max - o.grid_min) * i / (o.steps - 1.0);
        body += csv_num(u) + "," + csv_num(cfdiv::h_of_chi(kind, u)) + "\n";
    }
    emit_csv(body, o.out_path);
    return 0;
}

int cmd_curve(const Options& o)
{
    if (o.curve_name != "fr-to-bhat")
        throw std::invalid_argument("unknown curve: " + o.curve_name);
    if (o.steps < 2) throw std::invalid_argument("curve needs >= 2 steps");
    std::string body = "s,t,ratio\n";
    for (int i = 0; i < o.steps; ++i) {
        const double s =
            o.grid_min + (o.grid_max - o.grid_min) * i / (o.steps - 1.0);
        const auto r = cfdiv::fr_to_bhat_transform(s);
        body += csv_num(s) + "," + csv_num(r.t_value) + "," +
                csv_num(r.ratio) + "\n";
    }
    emit_csv(body, o.out_path);
    return 0;
}

int cmd_fit(const Options& o)
{
    cfdiv::FitTarget target;
    if (o.fit_target == "j")
        target = cfdiv::FitTarget::J;
    else if (o.fit_target == "chik")
        target = cfdiv::FitTarget::ChiK;
    else
        throw std::invalid_argument("unknown fit target: " + o.fit_target);
    const auto coeffs = cfdiv::fit_h_polynomial(target, o.order, o.degree,
                                                o.samples, o.seed);
    json j{{"target", o.fit_target}, {"order", o.order},
           {"degree", o.degree},    {"samples", o.samples},
           {"seed", o.seed},        {"coefficients", coeffs}};
    emit_json(j);
    return 0;
}

int cmd_check(const Options& o)
{
    const auto& suites = cfdiv::suite_criteria();
    const auto it = suites.find(o.suite);
    if (it == suites.end()) {
        std::string names;
        for (const auto& kv : suites) names += kv.first + " ";
        throw std::invalid_argument("unknown suite '" + o.suite +
                                    "'; available: " + names);
    }
    const auto r = cfdiv::run_criterion(it->second);
    json j{{"suite", o.suite},
           {"name", r.name},
           {"passed", r.passed},
           {"failures", r.failures},
           {"metrics", r.metrics}};
    emit_json(j);
    return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"f-divergences between Cauchy-type distributions"};
    app.require_subcommand(1);
    Options o;

    auto add_kind = [&](CLI::App* c) {
        c->add_option("--kind", o.kind, "divergence kind (kl, tv, js, ...)");
        c->add_option("--alpha", o.alpha, "skew/alpha parameter");
    };
    auto add_pair = [&](CLI::App* c) {
        c->add_option("--p", o.p_text, "first parameter 'l,s'")->required();
        c->add_option("--q", o.q_text, "second parameter 'l,s'")->required();
    };

    auto* div = app.add_subcommand("div", "compute one divergence value");
    add_kind(div);
    add_pair(div);
    div->add_option("--method", o.method, "closed|quad|mc|series");
    div->add_option("--tol", o.tol, "quadrature/series tolerance");
    div->add_option("--seed", o.seed, "Monte Carlo seed");
    div->add_option("--n", o.mc_samples, "Monte Carlo sample count");
    div->add_option("--max-terms", o.max_terms, "series term cap");

    auto* series = app.add_subcommand("series", "chi-power series expansion");
    add_kind(series);
    add_pair(series);
    series->add_option("--tol", o.tol, "term-size stopping tolerance");
    series->add_option("--max-terms", o.max_terms, "series term cap");

    auto* mvkl = app.add_subcommand("mv-kl", "bivariate Cauchy KL divergence");
    mvkl->add_option("--p", o.p_text, "first parameter 'l1,l2;s11,s12,s22'")
        ->required();
    mvkl->add_option("--q", o.q_text, "second parameter 'l1,l2;s11,s12,s22'")
        ->required();
    auto* mvkl_tol =
        mvkl->add_option("--tol", o.tol, "quadrature tolerance (default 1e-4)");

    auto* family =
        app.add_subcommand("family", "divergence within a Cauchy-type family");
    add_kind(family);
    family->add_option("--family", o.family, "circular|wrapped|log-cauchy");
    family->add_option("--p", o.p_text, "first family parameter")->required();
    family->add_option("--q", o.q_text, "second family parameter")->required();

    auto* table = app.add_subcommand("table", "CSV table of h_f over chi");
    add_kind(table);
    table->add_option("--chi-min", o.grid_min, "grid start");
    table->add_option("--chi-max", o.grid_max, "grid end");
    table->add_option("--steps", o.steps, "grid size");
    table->add_option("--out", o.out_path, "output path (default stdout)");

    auto* curve = app.add_subcommand("curve", "named CSV curve export");
    curve->add_option("--name", o.curve_name, "curve name (fr-to-bhat)");
    curve->add_option("--s-min", o.grid_min, "grid start");
    curve->add_option("--s-max", o.grid_max, "grid end");
    curve->add_option("--steps", o.steps, "grid size");
    curve->add_option("--out", o.out_path, "output path (default stdout)");

    auto* fit = app.add_subcommand("fit", "least-squares recovery of h");
    fit->add_option("--target", o.fit_target, "j|chik");
    fit->add_option("--order", o.order, "integral order");
    fit->add_option("--degree", o.degree, "polynomial degree");
    fit->add_option("--samples", o.samples, "sample count");
    fit->add_option("--seed", o.seed, "sampling seed");

    auto* check = app.add_subcommand("check", "run a property suite");
    check
        ->add_option("--suite", o.suite,
                     "symmetry|invariance|metric|negdef|monotone|series|"
                     "families|bivariate")
        ->required();

    app.add_option("--threads", o.threads, "worker thread cap (reserved)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (mvkl->parsed() && mvkl_tol->count() == 0) o.tol = 1e-4;

    try {
        if (div->parsed()) return cmd_div(o);
        if (series->parsed()) return cmd_series(o);
        if (mvkl->parsed()) return cmd_mv_kl(o);
        if (family->parsed()) return cmd_family(o);
        if (table->parsed()) return cmd_table(o);
        if (curve->parsed()) return cmd_curve(o);
        if (fit->parsed()) return cmd_fit(o);
        if (check->parsed()) return cmd_check(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
