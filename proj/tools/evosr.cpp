// evosr command-line harness.
//
// Subcommands:
//   solve  - run a configured method `runs` times, write per-run traces and a
//            JSON summary; exit 0 only when the averaged result converged
//   table  - re-run one of the benchmark tables 1..7 and emit a side-by-side
//            report with per-row verdicts; exit 0 only when every row passes
//   sweep  - omega grid: iterations-to-threshold plus spectral-radius estimate
//            per grid point, as plot-ready CSV
//   cost   - simulated time units per sweep (parallel model vs sequential
//            baseline) times observed iteration counts
//   gen    - emit a generated problem as a plain-text system file
//
// Output directory: --out flag, else EVOSR_OUT_DIR, else ./evosr-out.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <evosr/evosr.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string problem;
    std::size_t n = 100;
    std::uint64_t problem_seed = 1;
    std::string method = "jbua";
    std::vector<double> omegas;
    double threshold = 1e-6;
    std::uint64_t max_iterations = 1000;
    std::size_t runs = 10;
    std::uint64_t seed = evosr::kDefaultSeed;
    std::string norm = "euclidean";
    double omega_low = 0.0;
    double omega_high = 2.0;
    int workers = 1;
};

void add_problem_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--problem", o.problem,
                    "problem name (p0, nsq, t6a..t6d, t7_1..t7_10) or a system file path")
        ->required();
    cmd->add_option("--n", o.n, "problem order for generated systems")->capture_default_str();
    cmd->add_option("--problem-seed", o.problem_seed,
                    "seed for generators with random entries")
        ->capture_default_str();
}

void add_run_opts(CLI::App* cmd, CommonOpts& o, bool with_method = true) {
    if (with_method)
        cmd->add_option("--method", o.method,
                        "jacobi | gauss_seidel | jacobi_sr | gauss_seidel_sr | jbua | gsbua")
            ->capture_default_str();
    cmd->add_option("--omegas", o.omegas,
                    "relaxation factors: one for classical methods, N for hybrids")
        ->delimiter(',');
    cmd->add_option("--threshold", o.threshold, "halting error threshold")->capture_default_str();
    cmd->add_option("--max", o.max_iterations, "iteration / generation budget")
        ->capture_default_str();
    cmd->add_option("--runs", o.runs, "independent seeded runs to average")->capture_default_str();
    cmd->add_option("--seed", o.seed, "base seed; run k uses seed + k")->capture_default_str();
    cmd->add_option("--norm", o.norm, "error norm: euclidean | infinity | one")
        ->capture_default_str();
    cmd->add_option("--omega-low", o.omega_low, "lower adaptation bound (hybrids)")
        ->capture_default_str();
    cmd->add_option("--omega-high", o.omega_high, "upper adaptation bound (hybrids)")
        ->capture_default_str();
    cmd->add_option("--workers", o.workers, "worker threads per sweep")->capture_default_str();
}

evosr::NormKind parse_norm(const std::string& name) {
    if (name == "euclidean") return evosr::NormKind::euclidean;
    if (name == "infinity") return evosr::NormKind::infinity;
    if (name == "one") return evosr::NormKind::one;
    throw evosr::invalid_value_error("unknown norm '" + name + "'");
}

// A problem argument is first tried as a generator name, then as a file path.
evosr::LinearSystem resolve_problem(const CommonOpts& o) {
    try {
        evosr::ProblemSpec spec = evosr::parse_problem_name(o.problem);
        spec.n = o.n;
        spec.seed = o.problem_seed;
        return evosr::make_system(spec);
    } catch (const evosr::problem_error&) {
        if (fs::exists(o.problem)) return evosr::load_system(o.problem);
        throw;
    }
}

fs::path output_dir(const std::string& flag_value) {
    fs::path dir;
    if (!flag_value.empty()) {
        dir = flag_value;
    } else if (const char* env = std::getenv("EVOSR_OUT_DIR"); env && *env) {
        dir = env;
    } else {
        dir = "evosr-out";
    }
    fs::create_directories(dir);
    return dir;
}

evosr::ExperimentConfig make_config(const CommonOpts& o) {
    evosr::ExperimentConfig cfg;
    cfg.method = evosr::parse_method(o.method);
    cfg.omegas = o.omegas;
    if (cfg.omegas.empty() &&
        (cfg.method == evosr::Method::jacobi || cfg.method == evosr::Method::gauss_seidel))
        cfg.omegas = {1.0};
    cfg.threshold = o.threshold;
    cfg.max_iterations = o.max_iterations;
    cfg.runs = o.runs;
    cfg.seed = o.seed;
    cfg.norm = parse_norm(o.norm);
    cfg.adaptation.omega_low = o.omega_low;
    cfg.adaptation.omega_high = o.omega_high;
    cfg.workers = o.workers;
    return cfg;
}

std::string file_tag(const evosr::LinearSystem& sys, const evosr::ExperimentConfig& cfg) {
    std::string tag = sys.label.empty() ? "system" : sys.label;
    for (char& ch : tag)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '_';
    return tag + "_" + evosr::method_name(cfg.method);
}

json summary_to_json(const evosr::ExperimentSummary& s) {
    json per_run = json::array();
    for (const evosr::RunRecord& r : s.runs) {
        per_run.push_back({{"seed", r.seed},
                           {"status", evosr::status_name(r.status)},
                           {"iterations", r.iterations},
                           {"final_error", r.final_error},
                           {"final_omegas", r.final_omegas}});
    }
    json j{{"verdict", evosr::status_name(s.verdict)},
           {"n_converged", s.n_converged},
           {"n_diverged", s.n_diverged},
           {"n_max_iterations", s.n_max_iterations},
           {"per_run", std::move(per_run)}};
    if (s.n_converged > 0) {
        j["geo_mean_error"] = s.geo_mean_error;
        j["mean_iterations"] = s.mean_iterations;
    }
    return j;
}

json report_to_json(const evosr::TableReport& rep) {
    json rows = json::array();
    for (const evosr::ReportRow& r : rep.rows)
        rows.push_back({{"label", r.label},
                        {"reference", r.reference},
                        {"observed", r.observed},
                        {"pass", r.pass}});
    return json{{"table", rep.table_id},
                {"title", rep.title},
                {"all_pass", rep.all_pass()},
                {"rows", std::move(rows)}};
}

int cmd_solve(const CommonOpts& o, const std::string& out_flag) {
    const evosr::LinearSystem sys = resolve_problem(o);
    const evosr::ExperimentConfig cfg = make_config(o);
    const evosr::ExperimentSummary summary = evosr::run_experiment(sys, cfg);
    const fs::path dir = output_dir(out_flag);
    const std::string tag = file_tag(sys, cfg);

    json j = summary_to_json(summary);
    j["problem"] = sys.label;
    j["n"] = sys.order();
    j["method"] = evosr::method_name(cfg.method);
    j["omegas"] = cfg.omegas;
    j["threshold"] = cfg.threshold;
    j["max_iterations"] = cfg.max_iterations;
    j["seed"] = cfg.seed;
    j["workers"] = cfg.workers;
    for (std::size_t k = 0; k < summary.runs.size(); ++k) {
        const fs::path trace_path = dir / (tag + "_run" + std::to_string(k) + ".csv");
        evosr::save_trace(summary.runs[k].trace, trace_path);
        j["per_run"][k]["trace_file"] = trace_path.string();
    }
    const fs::path summary_path = dir / (tag + "_summary.json");
    evosr::atomic_write_text(summary_path, j.dump(2) + "\n");

    std::printf("%s on %s (n=%zu): %s\n", evosr::method_name(cfg.method), sys.label.c_str(),
                sys.order(), evosr::status_name(summary.verdict));
    std::printf("  converged %zu/%zu, diverged %zu, hit budget %zu\n", summary.n_converged,
                summary.runs.size(), summary.n_diverged, summary.n_max_iterations);
    if (summary.n_converged > 0)
        std::printf("  geo-mean error %.6g, mean iterations %.4g\n", summary.geo_mean_error,
                    summary.mean_iterations);
    std::printf("  summary: %s\n", summary_path.string().c_str());
    return summary.verdict == evosr::RunStatus::converged ? 0 : 1;
}

int cmd_table(int table_id, const evosr::TableOptions& opts, const std::string& out_flag) {
    const evosr::TableReport rep = evosr::build_table(table_id, opts);
    const fs::path dir = output_dir(out_flag);
    const fs::path path = dir / ("table" + std::to_string(table_id) + "_report.json");
    evosr::atomic_write_text(path, report_to_json(rep).dump(2) + "\n");

    std::printf("table %d: %s\n", rep.table_id, rep.title.c_str());
    for (const evosr::ReportRow& r : rep.rows)
        std::printf("  [%s] %s\n      reference: %s\n      observed:  %s\n",
                    r.pass ? "PASS" : "FAIL", r.label.c_str(), r.reference.c_str(),
                    r.observed.c_str());
    std::printf("table %d: %s (%s)\n", rep.table_id, rep.all_pass() ? "all rows pass" : "FAILURES",
                path.string().c_str());
    return rep.all_pass() ? 0 : 1;
}

int cmd_sweep(const CommonOpts& o, const std::vector<double>& grid_spec,
              const std::string& out_flag) {
    const evosr::LinearSystem sys = resolve_problem(o);
    const evosr::KernelKind kernel = evosr::method_kernel(evosr::parse_method(o.method));
    std::vector<double> grid = o.omegas;
    if (!grid_spec.empty()) {
        if (grid_spec.size() != 3 || grid_spec[2] <= 0.0 || grid_spec[1] < grid_spec[0])
            throw evosr::invalid_value_error("--grid expects lo,hi,step with step > 0");
        for (double w = grid_spec[0]; w <= grid_spec[1] + 1e-12; w += grid_spec[2])
            grid.push_back(w);
    }
    if (grid.empty()) throw evosr::invalid_value_error("sweep: empty omega grid");

    const std::vector<evosr::OmegaRho> rho =
        evosr::omega_sweep(sys, kernel, grid, o.workers);
    std::string csv = "omega,iterations,rho\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        evosr::ExperimentConfig cfg = make_config(o);
        cfg.omegas = {grid[i]};
        cfg.runs = 1;
        const evosr::RunRecord rec = evosr::run_once(sys, cfg, cfg.seed);
        std::string iters;
        switch (rec.status) {
            case evosr::RunStatus::converged: iters = std::to_string(rec.iterations); break;
            case evosr::RunStatus::diverged: iters = "DIVERGED"; break;
            case evosr::RunStatus::max_iterations: iters = "BUDGET"; break;
        }
        char line[128];
        std::snprintf(line, sizeof line, "%.17g,%s,%.17g\n", grid[i], iters.c_str(), rho[i].rho);
        csv += line;
    }
    const fs::path dir = output_dir(out_flag);
    const fs::path path = dir / ("sweep_" + file_tag(sys, make_config(o)) + ".csv");
    evosr::atomic_write_text(path, csv);
    std::printf("%s", csv.c_str());
    std::printf("sweep written: %s\n", path.string().c_str());
    return 0;
}

int cmd_cost(const CommonOpts& o, const std::string& out_flag) {
    const evosr::LinearSystem sys = resolve_problem(o);
    const evosr::ExperimentConfig cfg = make_config(o);
    const evosr::KernelKind kernel = evosr::method_kernel(cfg.method);
    const std::size_t n = sys.order();
    const std::uint64_t parallel_units = evosr::sweep_cost(kernel, n, evosr::CostModel::parallel);
    const std::uint64_t sequential_units =
        evosr::sweep_cost(kernel, n, evosr::CostModel::sequential);

    evosr::ExperimentConfig run_cfg = cfg;
    run_cfg.runs = o.runs;
    const evosr::ExperimentSummary summary = evosr::run_experiment(sys, run_cfg);
    const double iters = summary.n_converged > 0
                             ? summary.mean_iterations
                             : static_cast<double>(summary.runs.front().iterations);

    json j{{"problem", sys.label},
           {"n", n},
           {"method", evosr::method_name(cfg.method)},
           {"kernel", evosr::kernel_name(kernel)},
           {"parallel_units_per_sweep", parallel_units},
           {"sequential_units_per_sweep", sequential_units},
           {"observed_iterations", iters},
           {"verdict", evosr::status_name(summary.verdict)},
           {"total_parallel_units", iters * static_cast<double>(parallel_units)},
           {"total_sequential_units", iters * static_cast<double>(sequential_units)}};
    const fs::path dir = output_dir(out_flag);
    const fs::path path = dir / ("cost_" + file_tag(sys, cfg) + ".json");
    evosr::atomic_write_text(path, j.dump(2) + "\n");
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
}

int cmd_gen(const CommonOpts& o, const std::string& file_name, const std::string& out_flag) {
    evosr::ProblemSpec spec = evosr::parse_problem_name(o.problem);
    spec.n = o.n;
    spec.seed = o.problem_seed;
    const evosr::LinearSystem sys = evosr::make_system(spec);
    const fs::path dir = output_dir(out_flag);
    const fs::path path = dir / (file_name.empty() ? sys.label + ".txt" : file_name);
    evosr::save_system(sys, path);
    std::printf("wrote %s (n=%zu)\n", path.string().c_str(), sys.order());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stationary solvers and uniform-adaptive hybrid benchmark harness"};
    app.require_subcommand(1);
    std::string out_flag;
    app.add_option("--out", out_flag, "output directory (overrides EVOSR_OUT_DIR)");

    CommonOpts so;
    CLI::App* solve = app.add_subcommand("solve", "run one configured experiment");
    add_problem_opts(solve, so);
    add_run_opts(solve, so);

    int table_id = 0;
    evosr::TableOptions topts;
    CLI::App* table = app.add_subcommand("table", "re-run a benchmark table and report");
    table->add_option("id", table_id, "table id 1..7")->required();
    table->add_option("--seed", topts.run_seed, "base run seed")->capture_default_str();
    table->add_option("--pair-seed", topts.pair_seed, "omega pair sampler seed (table 4)")
        ->capture_default_str();
    table->add_option("--system-seed", topts.t6_system_seed, "system seed (table 6 family d)")
        ->capture_default_str();
    std::vector<std::uint64_t> t7_seeds;
    table->add_option("--t7-seeds", t7_seeds, "ten system seeds for table 7")->delimiter(',');
    table->add_option("--workers", topts.workers, "worker threads")->capture_default_str();

    CommonOpts wo;
    std::vector<double> grid_spec;
    CLI::App* sweep = app.add_subcommand("sweep", "omega grid with spectral estimates");
    add_problem_opts(sweep, wo);
    add_run_opts(sweep, wo);
    sweep->add_option("--grid", grid_spec, "lo,hi,step omega grid")->delimiter(',');

    CommonOpts co;
    CLI::App* cost = app.add_subcommand("cost", "simulated time-unit accounting");
    add_problem_opts(cost, co);
    add_run_opts(cost, co);

    CommonOpts go;
    std::string gen_file;
    CLI::App* gen = app.add_subcommand("gen", "emit a generated problem file");
    add_problem_opts(gen, go);
    gen->add_option("--file", gen_file, "output file name (default <label>.txt)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(so, out_flag);
        if (table->parsed()) {
            if (!t7_seeds.empty()) {
                if (t7_seeds.size() != 10)
                    throw evosr::invalid_value_error("--t7-seeds needs exactly ten seeds");
                std::copy(t7_seeds.begin(), t7_seeds.end(), topts.t7_system_seeds.begin());
            }
            return cmd_table(table_id, topts, out_flag);
        }
        if (sweep->parsed()) return cmd_sweep(wo, grid_spec, out_flag);
        if (cost->parsed()) return cmd_cost(co, out_flag);
        if (gen->parsed()) return cmd_gen(go, gen_file, out_flag);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
