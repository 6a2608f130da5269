#include "lab_cli/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "CLI11.hpp"
#include "lab_cli/commands.hpp"

namespace lab_cli {

using namespace semicircle_lab;

namespace {

struct Flags {
    std::string config;
    std::size_t n = 0;
    std::size_t seeds = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> seed_list;
    std::string kind;
    std::string profile;
    double alpha = 0.0;
    double delta = 0.0;
    double tau = 0.0;
    double grid_min = 0.0;
    double grid_max = 0.0;
    std::size_t grid_points = 0;
    std::size_t bins = 0;
    std::string format;
    std::string out;
    std::string summary;
    std::size_t threads = 0;
    double threshold = 0.0;
    std::size_t k = 0;
    std::size_t max_k = 0;
    std::string y_kind;
    std::size_t phi_points = 0;
};

struct Bound {
    CLI::Option* option;
    std::function<void(RunConfig&)> apply;
};

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file.flush()) {
        throw IoError("failed writing '" + path + "'");
    }
}

const char* const subcommands[][2] = {
    {"simulate", "Averaged ESD, histogram with semicircle overlay, and distances"},
    {"esd", "Averaged ESD on the grid"},
    {"distance", "Kolmogorov and Levy distances to the semicircle law"},
    {"moments", "Empirical spectral moments against Catalan numbers"},
    {"graphs", "Canonical closed-walk graphs of length k with categories"},
    {"interpolate", "Stieltjes transforms along the X cos(phi) + Y sin(phi) path"},
    {"counterexample", "Block variance profile that breaks convergence"},
    {"check", "Variance-profile and Lindeberg conditions"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monte Carlo experiments for Wigner-type random matrices", "semicircle_lab_cli"};
    app.require_subcommand(1);
    for (const auto& [name, help] : subcommands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    Flags f;
    bool assert_mode = false;
    bool reproducible = false;
    std::vector<Bound> bound;
    auto bind = [&](CLI::Option* o, std::function<void(RunConfig&)> apply) {
        bound.push_back({o, std::move(apply)});
    };

    app.add_option("--config", f.config, "JSON run configuration; flags override it");
    bind(app.add_option("--n", f.n, "Matrix dimension"), [&](RunConfig& c) { c.n = f.n; });
    bind(app.add_option("--seeds", f.seeds, "Number of seeds, counted up from --seed"),
         [&](RunConfig& c) { c.seeds = f.seeds; c.seed_list.clear(); });
    bind(app.add_option("--seed", f.seed, "First seed"), [&](RunConfig& c) { c.seed = f.seed; });
    bind(app.add_option("--seed-list", f.seed_list, "Explicit comma-separated seeds")->delimiter(','),
         [&](RunConfig& c) { c.seed_list = f.seed_list; });
    bind(app.add_option("--kind", f.kind, "gaussian, rademacher or dependent"),
         [&](RunConfig& c) { c.kind = parse_ensemble_kind(f.kind); });
    bind(app.add_option("--profile", f.profile, "constant, smooth, block or zero"),
         [&](RunConfig& c) { c.profile.type = parse_profile_type(f.profile); });
    bind(app.add_option("--alpha", f.alpha, "Smooth-profile amplitude"),
         [&](RunConfig& c) { c.profile.alpha = f.alpha; });
    bind(app.add_option("--delta", f.delta, "Coupling of the dependent ensemble"),
         [&](RunConfig& c) { c.delta = f.delta; });
    bind(app.add_option("--tau", f.tau, "Truncation level (default n^-1/8)"),
         [&](RunConfig& c) { c.tau = f.tau; });
    bind(app.add_option("--grid-min", f.grid_min, "Grid lower end"), [&](RunConfig& c) { c.grid.min = f.grid_min; });
    bind(app.add_option("--grid-max", f.grid_max, "Grid upper end"), [&](RunConfig& c) { c.grid.max = f.grid_max; });
    bind(app.add_option("--grid-points", f.grid_points, "Grid size"),
         [&](RunConfig& c) { c.grid.points = f.grid_points; });
    bind(app.add_option("--bins", f.bins, "Histogram bins over the grid range"),
         [&](RunConfig& c) { c.bins = f.bins; });
    bind(app.add_option("--format", f.format, "json or csv"),
         [&](RunConfig& c) { c.format = parse_format(f.format); });
    bind(app.add_option("--out", f.out, "Output path, - for stdout"), [&](RunConfig& c) { c.out = f.out; });
    bind(app.add_option("--summary", f.summary, "interpolate: JSON summary path in csv mode"),
         [&](RunConfig& c) { c.summary = f.summary; });
    bind(app.add_option("--threads", f.threads, "Worker threads (default SEMICIRCLE_LAB_THREADS or all cores)"),
         [&](RunConfig& c) { c.threads = f.threads; });
    bind(app.add_flag("--assert", assert_mode, "Exit 4 when the subcommand's threshold is violated"),
         [&](RunConfig& c) { c.assert_mode = true; });
    bind(app.add_option("--threshold", f.threshold, "Override the --assert threshold"),
         [&](RunConfig& c) { c.threshold = f.threshold; });
    bind(app.add_flag("--reproducible", reproducible, "Omit the timestamp field"),
         [&](RunConfig& c) { c.reproducible = true; });
    bind(app.add_option("--k", f.k, "graphs: walk length"), [&](RunConfig& c) { c.k = f.k; });
    bind(app.add_option("--max-k", f.max_k, "moments: highest moment"), [&](RunConfig& c) { c.max_k = f.max_k; });
    bind(app.add_option("--y-kind", f.y_kind, "interpolate: kind of the second ensemble"),
         [&](RunConfig& c) { c.y_kind = parse_ensemble_kind(f.y_kind); });
    bind(app.add_option("--phi-points", f.phi_points, "interpolate: points on [0, pi/2]"),
         [&](RunConfig& c) { c.phi_points = f.phi_points; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return exit_usage;
    }

    try {
        RunConfig cfg = f.config.empty() ? RunConfig{} : load_config_file(f.config);
        for (const auto& b : bound) {
            if (b.option->count() > 0) {
                b.apply(cfg);
            }
        }
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.validate();

        const auto result = dispatch(cfg);
        json doc = {
            {"command", cfg.subcommand},
            {"version", SEMICIRCLE_LAB_VERSION},
            {"config", to_json(cfg)},
            {"result", result.body},
        };
        if (!cfg.reproducible) {
            doc["generated_at"] = utc_timestamp();
        }
        write_text(cfg.out, cfg.format == Format::json ? doc.dump(2) + '\n' : result.csv, out);
        if (!cfg.summary.empty() && !result.summary.is_null()) {
            doc["result"] = result.summary;
            write_text(cfg.summary, doc.dump(2) + '\n', out);
        }
        if (!result.assertion_passed) {
            err << "assertion failed: " << result.assertion << '\n';
            return exit_assert;
        }
        return exit_ok;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

}  // namespace lab_cli
