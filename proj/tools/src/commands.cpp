#include "lab_cli/commands.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "semicircle_lab/conditions.hpp"
#include "semicircle_lab/interpolation.hpp"
#include "semicircle_lab/metrics.hpp"
#include "semicircle_lab/moment_graphs.hpp"
#include "semicircle_lab/parallel.hpp"
#include "semicircle_lab/semicircle.hpp"
#include "semicircle_lab/spectra.hpp"

namespace lab_cli {

using namespace semicircle_lab;

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> density;
    std::vector<double> center;
};

// Pooled eigenvalues from all seeds, normalized so the bars integrate to the
// fraction of eigenvalues that landed inside [lo, hi].
Histogram histogram(std::span<const SpectralDistribution> spectra, double lo, double hi,
                    std::size_t bins)
{
    Histogram h{lo, hi, std::vector<double>(bins, 0.0), std::vector<double>(bins)};
    const double width = (hi - lo) / static_cast<double>(bins);
    std::size_t total = 0;
    for (const auto& d : spectra) {
        total += d.size();
        for (double x : d.lambdas()) {
            if (x < lo || x > hi) {
                continue;
            }
            auto b = static_cast<std::size_t>((x - lo) / width);
            h.density[std::min(b, bins - 1)] += 1.0;
        }
    }
    for (std::size_t b = 0; b < bins; ++b) {
        h.center[b] = lo + width * (static_cast<double>(b) + 0.5);
        h.density[b] /= static_cast<double>(total) * width;
    }
    return h;
}

json histogram_json(const Histogram& h)
{
    std::vector<double> overlay(h.center.size());
    std::transform(h.center.begin(), h.center.end(), overlay.begin(), semicircle::density);
    return {
        {"lo", h.lo},
        {"hi", h.hi},
        {"bins", h.center.size()},
        {"center", h.center},
        {"density", h.density},
        {"semicircle", overlay},
    };
}

std::string histogram_csv(const Histogram& h)
{
    const double width = (h.hi - h.lo) / static_cast<double>(h.center.size());
    std::string out = "bin_lo,bin_hi,center,density,semicircle\n";
    for (std::size_t b = 0; b < h.center.size(); ++b) {
        out += num(h.center[b] - width / 2) + ',' + num(h.center[b] + width / 2) + ',' +
               num(h.center[b]) + ',' + num(h.density[b]) + ',' +
               num(semicircle::density(h.center[b])) + '\n';
    }
    return out;
}

std::string esd_csv(const AveragedESD& avg)
{
    std::string out = "x,F\n";
    for (std::size_t i = 0; i < avg.grid.size(); ++i) {
        out += num(avg.grid[i]) + ',' + num(avg.values[i]) + '\n';
    }
    return out;
}

json report_json(const ConditionReport& r, const ConditionTolerances& tol)
{
    return {
        {"tau", r.tau},
        {"avg_b_deviation", {{"value", r.avg_b_deviation}, {"tolerance", tol.avg_b_deviation}, {"pass", r.avg_b_pass}}},
        {"max_b", {{"value", r.max_b}, {"tolerance", tol.max_b}, {"pass", r.max_b_pass}}},
        {"max_b_deviation", {{"value", r.max_b_deviation}, {"tolerance", tol.max_b_deviation}, {"pass", r.max_b_deviation_pass}}},
        {"lindeberg", {{"value", r.lindeberg}, {"tolerance", tol.lindeberg}, {"pass", r.lindeberg_pass}}},
        {"all_pass", r.all_pass()},
    };
}

ConditionReport estimate_conditions(const RunConfig& cfg, const EnsembleSpec& spec)
{
    const double tau = cfg.tau.value_or(truncation_sequence(spec.size()));
    const auto seeds = cfg.seed_values();
    std::vector<double> ratios(seeds.size());
    parallel_for(seeds.size(), cfg.thread_count(), [&](std::size_t i) {
        ratios[i] = lindeberg_ratio(sample(spec.with_seed(seeds[i])), tau);
    });
    double sum = 0.0;
    for (double r : ratios) {
        sum += r;
    }
    return check_conditions(spec.profile, tau, sum / static_cast<double>(ratios.size()));
}

void check_assert(CommandResult& r, bool passed, const std::string& description)
{
    r.assertion_passed = passed;
    r.assertion = description;
    r.body["assertion"] = {{"check", description}, {"passed", passed}};
}

}  // namespace

CommandResult cmd_simulate(const RunConfig& cfg)
{
    const auto spec = cfg.spec();
    const auto seeds = cfg.seed_values();
    const auto spectra = sample_spectra(spec, seeds, cfg.thread_count());
    const auto grid = linear_grid(cfg.grid.min, cfg.grid.max, cfg.grid.points);
    const auto avg = average_on_grid(spectra, grid);
    const double kol = kolmogorov_to_semicircle(avg);
    const double lev = levy_to_semicircle(StepCdf::from(avg));
    const auto hist = histogram(spectra, cfg.grid.min, cfg.grid.max, cfg.bins);

    CommandResult r;
    r.body = {
        {"kolmogorov", kol},
        {"levy", lev},
        {"esd", {{"x", avg.grid}, {"F", avg.values}}},
        {"histogram", histogram_json(hist)},
    };
    r.csv = "# kolmogorov=" + num(kol) + "\n# levy=" + num(lev) + '\n' + histogram_csv(hist);
    if (cfg.assert_mode) {
        const double thr = cfg.threshold.value_or(0.03);
        check_assert(r, kol <= thr, "kolmogorov <= " + num(thr));
    }
    return r;
}

CommandResult cmd_esd(const RunConfig& cfg)
{
    const auto grid = linear_grid(cfg.grid.min, cfg.grid.max, cfg.grid.points);
    const auto avg = averaged_esd(cfg.spec(), cfg.seed_values(), grid, cfg.thread_count());
    const double kol = kolmogorov_to_semicircle(avg);

    CommandResult r;
    r.body = {{"seeds", avg.seeds}, {"kolmogorov", kol}, {"x", avg.grid}, {"F", avg.values}};
    r.csv = esd_csv(avg);
    if (cfg.assert_mode) {
        const double thr = cfg.threshold.value_or(0.03);
        check_assert(r, kol <= thr, "kolmogorov <= " + num(thr));
    }
    return r;
}

CommandResult cmd_distance(const RunConfig& cfg)
{
    const auto seeds = cfg.seed_values();
    const auto spectra = sample_spectra(cfg.spec(), seeds, cfg.thread_count());
    const auto grid = linear_grid(cfg.grid.min, cfg.grid.max, cfg.grid.points);
    const auto avg = average_on_grid(spectra, grid);
    const double kol = kolmogorov_to_semicircle(avg);
    const double lev = levy_to_semicircle(StepCdf::from(avg));

    json per_seed = json::array();
    std::string csv = "seed,kolmogorov,levy\n";
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const auto f = StepCdf::from(spectra[i]);
        const double k = kolmogorov_to_semicircle(f);
        const double l = levy_to_semicircle(f);
        per_seed.push_back({{"seed", seeds[i]}, {"kolmogorov", k}, {"levy", l}});
        csv += std::to_string(seeds[i]) + ',' + num(k) + ',' + num(l) + '\n';
    }
    csv += "averaged," + num(kol) + ',' + num(lev) + '\n';

    CommandResult r;
    r.body = {{"kolmogorov", kol}, {"levy", lev}, {"per_seed", per_seed}};
    r.csv = csv;
    if (cfg.assert_mode) {
        const double thr = cfg.threshold.value_or(0.03);
        check_assert(r, kol <= thr, "kolmogorov <= " + num(thr));
    }
    return r;
}

CommandResult cmd_moments(const RunConfig& cfg)
{
    if (cfg.max_k < 1 || cfg.max_k > 2 * graphs::max_enumeration_length) {
        throw UsageError("max-k must lie in [1, " + std::to_string(2 * graphs::max_enumeration_length) + "]");
    }
    const auto spec = cfg.spec();
    const auto seeds = cfg.seed_values();
    const auto spectra = sample_spectra(spec, seeds, cfg.thread_count());
    const bool exact = spec.kind == EnsembleKind::gaussian && spec.size() <= graphs::max_exact_n;
    const double count = static_cast<double>(seeds.size());

    json rows = json::array();
    std::string csv = exact ? "k,empirical,stderr,semicircle,exact\n" : "k,empirical,stderr,semicircle\n";
    double worst = 0.0;
    for (unsigned k = 1; k <= cfg.max_k; ++k) {
        double sum = 0.0;
        double sum2 = 0.0;
        for (const auto& d : spectra) {
            const double m = empirical_moment(d, k);
            sum += m;
            sum2 += m * m;
        }
        const double mean = sum / count;
        const double var = seeds.size() > 1 ? std::max(0.0, (sum2 - count * mean * mean) / (count - 1)) : 0.0;
        const double se = std::sqrt(var / count);
        const double beta = semicircle::catalan_moment(k);
        worst = std::max(worst, std::abs(mean - beta));

        json row = {{"k", k}, {"empirical", mean}, {"standard_error", se}, {"semicircle", beta}};
        csv += std::to_string(k) + ',' + num(mean) + ',' + num(se) + ',' + num(beta);
        if (exact) {
            if (k <= graphs::max_exact_k) {
                const double e = graphs::gaussian_moment_exact(spec.profile, k, cfg.thread_count()).total;
                row["exact"] = e;
                csv += ',' + num(e);
            } else {
                row["exact"] = nullptr;
                csv += ',';
            }
        }
        rows.push_back(row);
        csv += '\n';
    }

    CommandResult r;
    r.body = {{"seeds", seeds.size()}, {"max_deviation", worst}, {"moments", rows}};
    r.csv = csv;
    if (cfg.assert_mode) {
        const double thr = cfg.threshold.value_or(0.05);
        check_assert(r, worst <= thr, "max_k |m_k - beta_k| <= " + num(thr));
    }
    return r;
}

CommandResult cmd_graphs(const RunConfig& cfg)
{
    if (cfg.k < 1 || cfg.k > graphs::max_enumeration_length) {
        throw UsageError("k must lie in [1, " + std::to_string(graphs::max_enumeration_length) + "]");
    }
    const auto all = graphs::enumerate_canonical(cfg.k);
    const bool weigh = cfg.n <= graphs::max_exact_n && cfg.k <= graphs::max_exact_k;
    const auto profile = weigh ? make_profile(cfg.n, cfg.profile) : VarianceProfile{};

    graphs::CategoryCounts counts;
    json rows = json::array();
    std::string csv = "g,t,category,contribution\n";
    for (const auto& graph : all) {
        (graph.category == 1 ? counts.c1 : graph.category == 2 ? counts.c2 : counts.c3) += 1;
        const auto g = graphs::to_string(graph.g);
        json row = {{"g", g}, {"t", graph.t}, {"category", graph.category}};
        csv += '"' + g + "\"," + std::to_string(graph.t) + ',' + std::to_string(graph.category) + ',';
        if (weigh) {
            const double c = graph.category == 2 ? 0.0 : graphs::graph_contribution(graph, profile, cfg.thread_count());
            row["contribution"] = c;
            csv += num(c);
        } else {
            row["contribution"] = nullptr;
        }
        rows.push_back(std::move(row));
        csv += '\n';
    }
    const std::uint64_t expected =
        cfg.k % 2 == 0 ? static_cast<std::uint64_t>(semicircle::catalan_moment(static_cast<unsigned>(cfg.k))) : 0;

    CommandResult r;
    r.body = {
        {"k", cfg.k},
        {"counts", {{"c1", counts.c1}, {"c2", counts.c2}, {"c3", counts.c3}, {"total", counts.total()}}},
        {"catalan", expected},
        {"graphs", rows},
    };
    if (weigh) {
        r.body["n"] = cfg.n;
    }
    r.csv = csv;
    if (cfg.assert_mode) {
        check_assert(r, counts.c1 == expected, "c1 == " + std::to_string(expected));
    }
    return r;
}

CommandResult cmd_interpolate(const RunConfig& cfg)
{
    const auto spec_x = cfg.spec();
    const auto spec_y = cfg.y_spec();
    const auto seeds = cfg.seed_values();
    std::vector<double> phis(cfg.phi_points);
    for (std::size_t i = 0; i < phis.size(); ++i) {
        phis[i] = half_pi * static_cast<double>(i) / static_cast<double>(phis.size() - 1);
    }
    phis.back() = half_pi;
    const auto zs = default_z_grid();
    const auto samples = stieltjes_path(spec_x, spec_y, phis, zs, seeds, cfg.thread_count());

    double gap = 0.0;
    double worst_se = 0.0;
    bool herglotz = true;
    json rows = json::array();
    std::string csv = "phi,re_z,im_z,re_s,im_s,stderr\n";
    for (const auto& p : samples) {
        worst_se = std::max(worst_se, p.standard_error);
        herglotz = herglotz && p.s.imag() > 0.0 && std::abs(p.s) <= 1.0 / p.z.imag();
        rows.push_back({{"phi", p.phi}, {"re_z", p.z.real()}, {"im_z", p.z.imag()},
                        {"re_s", p.s.real()}, {"im_s", p.s.imag()}, {"stderr", p.standard_error}});
        csv += num(p.phi) + ',' + num(p.z.real()) + ',' + num(p.z.imag()) + ',' + num(p.s.real()) +
               ',' + num(p.s.imag()) + ',' + num(p.standard_error) + '\n';
        if (p.phi != 0.0) {
            continue;
        }
        for (const auto& q : samples) {
            if (q.phi == half_pi && q.z == p.z) {
                gap = std::max(gap, std::abs(p.s - q.s));
            }
        }
    }

    CommandResult r;
    r.body = {
        {"x", to_json(spec_x)},
        {"y", to_json(spec_y)},
        {"seeds", seeds.size()},
        {"gap", gap},
        {"max_standard_error", worst_se},
        {"herglotz", herglotz},
    };
    r.csv = csv;
    if (cfg.assert_mode) {
        const double thr = cfg.threshold.value_or(0.02);
        check_assert(r, gap <= thr, "gap <= " + num(thr));
    }
    r.summary = r.body;
    r.body["samples"] = rows;
    return r;
}

CommandResult cmd_counterexample(const RunConfig& cfg)
{
    RunConfig block = cfg;
    block.profile = {ProfileRecipe::Type::block, 0.0};
    const auto spec = block.spec();
    const auto seeds = cfg.seed_values();
    const auto spectra = sample_spectra(spec, seeds, cfg.thread_count());
    const auto grid = linear_grid(cfg.grid.min, cfg.grid.max, cfg.grid.points);
    const auto avg = average_on_grid(spectra, grid);
    const auto hist = histogram(spectra, cfg.grid.min, cfg.grid.max, cfg.bins);

    json per_seed = json::array();
    std::string csv = "seed,kolmogorov\n";
    double lowest = 1.0;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const double k = kolmogorov_to_semicircle(spectra[i]);
        lowest = std::min(lowest, k);
        per_seed.push_back({{"seed", seeds[i]}, {"kolmogorov", k}});
        csv += std::to_string(seeds[i]) + ',' + num(k) + '\n';
    }

    CommandResult r;
    r.body = {
        {"spec", to_json(spec)},
        {"min_kolmogorov", lowest},
        {"per_seed", per_seed},
        {"averaged", {{"kolmogorov", kolmogorov_to_semicircle(avg)}, {"levy", levy_to_semicircle(StepCdf::from(avg))}}},
        {"conditions", report_json(estimate_conditions(cfg, spec), {})},
        {"histogram", histogram_json(hist)},
    };
    r.csv = csv;
    if (cfg.assert_mode) {
        const double thr = cfg.threshold.value_or(0.05);
        check_assert(r, lowest >= thr, "every seed kolmogorov >= " + num(thr));
    }
    return r;
}

CommandResult cmd_check(const RunConfig& cfg)
{
    const auto spec = cfg.spec();
    const ConditionTolerances tol;
    const auto report = estimate_conditions(cfg, spec);

    CommandResult r;
    r.body = report_json(report, tol);
    std::ostringstream csv;
    csv << "condition,value,tolerance,pass\n"
        << "avg_b_deviation," << num(report.avg_b_deviation) << ',' << num(tol.avg_b_deviation) << ',' << report.avg_b_pass << '\n'
        << "max_b," << num(report.max_b) << ',' << num(tol.max_b) << ',' << report.max_b_pass << '\n'
        << "max_b_deviation," << num(report.max_b_deviation) << ',' << num(tol.max_b_deviation) << ',' << report.max_b_deviation_pass << '\n'
        << "lindeberg," << num(report.lindeberg) << ',' << num(tol.lindeberg) << ',' << report.lindeberg_pass << '\n';
    r.csv = csv.str();
    if (cfg.assert_mode) {
        check_assert(r, report.all_pass(), "all conditions pass");
    }
    return r;
}

CommandResult dispatch(const RunConfig& cfg)
{
    const auto& c = cfg.subcommand;
    if (c == "simulate") return cmd_simulate(cfg);
    if (c == "esd") return cmd_esd(cfg);
    if (c == "distance") return cmd_distance(cfg);
    if (c == "moments") return cmd_moments(cfg);
    if (c == "graphs") return cmd_graphs(cfg);
    if (c == "interpolate") return cmd_interpolate(cfg);
    if (c == "counterexample") return cmd_counterexample(cfg);
    if (c == "check") return cmd_check(cfg);
    throw UsageError("unknown subcommand '" + c + "'");
}

}  // namespace lab_cli
