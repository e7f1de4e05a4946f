#pragma once

// Experiment runner: one configuration, `runs` independent seeded executions,
// aggregated into a summary.  Per-run seeds are base_seed + run_index so a
// published base seed pins the whole batch.
//
// Averaging: geometric mean of final errors (they span orders of magnitude)
// and arithmetic mean of iteration counts, both over converged runs only;
// non-converged runs are counted and reported separately, never averaged in.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hybrid.hpp"
#include "kernels.hpp"
#include "linalg.hpp"
#include "problems.hpp"
#include "rng.hpp"

namespace evosr {

enum class Method { jacobi, gauss_seidel, jacobi_sr, gauss_seidel_sr, jbua, gsbua };

inline bool method_is_hybrid(Method m) { return m == Method::jbua || m == Method::gsbua; }

inline KernelKind method_kernel(Method m) {
    switch (m) {
        case Method::jacobi: return KernelKind::jacobi;
        case Method::gauss_seidel: return KernelKind::gauss_seidel;
        case Method::jacobi_sr: return KernelKind::jacobi_sr;
        case Method::gauss_seidel_sr: return KernelKind::gauss_seidel_sr;
        case Method::jbua: return KernelKind::jacobi_sr;
        case Method::gsbua: return KernelKind::gauss_seidel_sr;
    }
    throw invalid_value_error("method_kernel: unknown method");
}

inline const char* method_name(Method m) {
    switch (m) {
        case Method::jacobi: return "jacobi";
        case Method::gauss_seidel: return "gauss_seidel";
        case Method::jacobi_sr: return "jacobi_sr";
        case Method::gauss_seidel_sr: return "gauss_seidel_sr";
        case Method::jbua: return "jbua";
        case Method::gsbua: return "gsbua";
    }
    return "unknown";
}

inline Method parse_method(const std::string& name) {
    if (name == "jacobi") return Method::jacobi;
    if (name == "gauss_seidel") return Method::gauss_seidel;
    if (name == "jacobi_sr") return Method::jacobi_sr;
    if (name == "gauss_seidel_sr") return Method::gauss_seidel_sr;
    if (name == "jbua") return Method::jbua;
    if (name == "gsbua") return Method::gsbua;
    throw invalid_value_error("parse_method: unknown method '" + name + "'");
}

// Fixed documented default so bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 20230518;

struct ExperimentConfig {
    Method method = Method::jbua;
    std::vector<double> omegas;  // exactly one for classical, N (even, >= 2) for hybrid
    double threshold = 1e-12;
    std::uint64_t max_iterations = 1000;
    std::size_t runs = 10;
    std::uint64_t seed = kDefaultSeed;
    std::pair<double, double> init_domain{-30.0, 30.0};
    AdaptationConfig adaptation;
    NormKind norm = NormKind::euclidean;
    double divergence_cap = kDefaultDivergenceCap;
    int workers = 1;

    void validate() const {
        if (method_is_hybrid(method)) {
            if (omegas.size() < 2 || omegas.size() % 2 != 0)
                throw config_error("ExperimentConfig: hybrid methods take N omegas, N even and >= 2");
        } else {
            if (omegas.size() != 1)
                throw config_error("ExperimentConfig: classical methods take exactly one omega");
        }
        for (double w : omegas)
            if (!std::isfinite(w)) throw config_error("ExperimentConfig: non-finite omega");
        if (!(threshold > 0.0)) throw config_error("ExperimentConfig: threshold must be positive");
        if (max_iterations == 0)
            throw config_error("ExperimentConfig: max_iterations must be at least 1");
        if (runs == 0) throw config_error("ExperimentConfig: runs must be at least 1");
        if (!(init_domain.first < init_domain.second))
            throw config_error("ExperimentConfig: init domain must be a nonempty interval");
        if (workers < 1) throw config_error("ExperimentConfig: workers must be at least 1");
        adaptation.validate();
    }
};

struct RunRecord {
    std::uint64_t seed = 0;
    RunStatus status = RunStatus::max_iterations;
    std::uint64_t iterations = 0;  // sweeps for classical, generations for hybrid
    double final_error = 0.0;
    std::vector<double> final_omegas;
    ConvergenceTrace trace;
};

struct ExperimentSummary {
    std::vector<RunRecord> runs;
    std::size_t n_converged = 0;
    std::size_t n_diverged = 0;
    std::size_t n_max_iterations = 0;
    double geo_mean_error = std::numeric_limits<double>::quiet_NaN();  // converged runs
    double mean_iterations = std::numeric_limits<double>::quiet_NaN();  // converged runs
    RunStatus verdict = RunStatus::max_iterations;
};

namespace detail {

inline RealVector random_start(const LinearSystem& sys, const ExperimentConfig& cfg,
                               std::uint64_t run_seed) {
    Rng rng(run_seed);
    RealVector x0(sys.order());
    for (double& c : x0) c = rng.uniform_open(cfg.init_domain.first, cfg.init_domain.second);
    return x0;
}

}  // namespace detail

// Single execution with an explicit seed; the batch runner derives seeds as
// cfg.seed + run_index.  Classical methods draw x0 from the init domain with
// the run seed; hybrids hand the seed to the population machinery.
inline RunRecord run_once(const LinearSystem& sys, const ExperimentConfig& cfg,
                          std::uint64_t run_seed) {
    RunRecord rec;
    rec.seed = run_seed;
    if (method_is_hybrid(cfg.method)) {
        HybridConfig hc;
        hc.kernel = method_kernel(cfg.method);
        hc.population_size = cfg.omegas.size();
        hc.threshold = cfg.threshold;
        hc.max_generations = cfg.max_iterations;
        hc.init_domain = cfg.init_domain;
        hc.adaptation = cfg.adaptation;
        hc.seed = run_seed;
        hc.initial_omegas = cfg.omegas;
        hc.norm = cfg.norm;
        hc.divergence_cap = cfg.divergence_cap;
        hc.workers = cfg.workers;
        HybridResult hr = run_hybrid(sys, hc);
        rec.status = hr.status;
        rec.iterations = hr.generations;
        rec.final_error = hr.best.error;
        rec.final_omegas = hr.trace.back().omegas;
        rec.trace = std::move(hr.trace);
    } else {
        const double omega = effective_omega(method_kernel(cfg.method), cfg.omegas.front());
        IterateResult ir =
            iterate(sys, method_kernel(cfg.method), omega, detail::random_start(sys, cfg, run_seed),
                    cfg.threshold, cfg.max_iterations, cfg.divergence_cap, cfg.norm, cfg.workers);
        rec.status = ir.status;
        rec.iterations = ir.iterations;
        rec.final_error = ir.final_error;
        rec.final_omegas = {omega};
        rec.trace = std::move(ir.trace);
    }
    return rec;
}

inline ExperimentSummary summarize(std::vector<RunRecord> runs, double threshold) {
    ExperimentSummary s;
    s.runs = std::move(runs);
    double log_sum = 0.0;
    double iter_sum = 0.0;
    for (const RunRecord& r : s.runs) {
        switch (r.status) {
            case RunStatus::converged:
                ++s.n_converged;
                // geometric mean accumulates in log space; a final error of
                // exactly zero would send the mean to zero, which is the
                // honest limit, so clamp only the log argument.
                log_sum += std::log(std::max(r.final_error, std::numeric_limits<double>::min()));
                iter_sum += static_cast<double>(r.iterations);
                break;
            case RunStatus::diverged: ++s.n_diverged; break;
            case RunStatus::max_iterations: ++s.n_max_iterations; break;
        }
    }
    if (s.n_converged > 0) {
        s.geo_mean_error = std::exp(log_sum / static_cast<double>(s.n_converged));
        s.mean_iterations = iter_sum / static_cast<double>(s.n_converged);
    }
    if (s.n_converged == s.runs.size() && s.geo_mean_error < threshold)
        s.verdict = RunStatus::converged;
    else if (s.n_diverged > 0)
        s.verdict = RunStatus::diverged;
    else
        s.verdict = RunStatus::max_iterations;
    return s;
}

inline ExperimentSummary run_experiment(const LinearSystem& sys, const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<RunRecord> runs;
    runs.reserve(cfg.runs);
    for (std::size_t r = 0; r < cfg.runs; ++r)
        runs.push_back(run_once(sys, cfg, cfg.seed + static_cast<std::uint64_t>(r)));
    return summarize(std::move(runs), cfg.threshold);
}

}  // namespace evosr
