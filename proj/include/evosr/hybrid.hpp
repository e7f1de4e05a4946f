#pragma once

// The uniform-adaptive hybrid: population of (x, omega) individuals evolved by
// stochastic-matrix recombination, one SR sweep as mutation, pairwise omega
// adaptation, and best-half selection.  JBUA uses the Jacobi-SR kernel, GSBUA
// the Gauss-Seidel-SR kernel; everything else is shared.
//
// Determinism contract: all randomness is pre-drawn per generation in a fixed
// documented order (per pair: p_x then p_y, consumed even when a tie skips
// adaptation), and sweeps use fixed-order row accumulation, so traces are
// byte-identical for any worker count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "kernels.hpp"
#include "linalg.hpp"
#include "rng.hpp"
#include "trace.hpp"

namespace evosr {

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Individual {
    RealVector x;
    double omega = 0.0;
    double error = 0.0;
};

struct Population {
    std::vector<Individual> individuals;
    std::uint64_t generation = 0;

    std::size_t size() const { return individuals.size(); }

    std::size_t best_index() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < individuals.size(); ++i)
            if (sort_key(individuals[i].error) < sort_key(individuals[best].error)) best = i;
        return best;
    }

    double best_error() const { return individuals[best_index()].error; }

    // NaN errors order as +inf so ranking stays a strict weak order even after
    // a blown-up sweep.
    static double sort_key(double e) {
        return std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
    }
};

struct AdaptationConfig {
    double omega_low = 0.0;
    double omega_high = 2.0;
    std::pair<double, double> px_range{-0.01, 0.01};
    std::pair<double, double> py_range{0.008, 0.012};

    void validate() const {
        if (!(omega_low < omega_high))
            throw config_error("AdaptationConfig: omega_low must be < omega_high");
        if (!(px_range.first < px_range.second) || !(py_range.first < py_range.second))
            throw config_error("AdaptationConfig: perturbation ranges must be nonempty");
    }
};

struct RecombinationPolicy {
    enum class Mode { paper_n2, custom };
    Mode mode = Mode::paper_n2;
    DenseMatrix rows;  // custom mode only; must be row-stochastic of order N

    static RecombinationPolicy paper_n2() { return {}; }

    static RecombinationPolicy custom(DenseMatrix m) {
        RecombinationPolicy p;
        p.mode = Mode::custom;
        p.rows = std::move(m);
        return p;
    }

    void validate(std::size_t population_size) const {
        if (mode == Mode::paper_n2) {
            if (population_size != 2)
                throw config_error(
                    "RecombinationPolicy: the built-in 2x2 recombination needs population size 2; "
                    "supply a custom row-stochastic matrix for larger populations");
            return;
        }
        if (!rows.square() || rows.rows() != population_size)
            throw config_error("RecombinationPolicy: custom matrix order must equal population size");
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < rows.cols(); ++j) {
                if (rows(i, j) < 0.0)
                    throw config_error("RecombinationPolicy: negative entry in custom matrix");
                sum += rows(i, j);
            }
            if (std::abs(sum - 1.0) > 1e-12)
                throw config_error("RecombinationPolicy: custom matrix rows must sum to 1");
        }
    }
};

struct HybridConfig {
    KernelKind kernel = KernelKind::jacobi_sr;
    std::size_t population_size = 2;
    double threshold = 1e-12;
    std::uint64_t max_generations = 1000;
    std::pair<double, double> init_domain{-30.0, 30.0};
    AdaptationConfig adaptation;
    std::uint64_t seed = 0;
    RecombinationPolicy recombination;
    std::vector<double> initial_omegas;  // empty: drawn uniformly from (omega_low, omega_high)
    NormKind norm = NormKind::euclidean;
    double divergence_cap = kDefaultDivergenceCap;
    int workers = 1;

    void validate() const {
        if (population_size < 2 || population_size % 2 != 0)
            throw config_error("HybridConfig: population size must be even and at least 2");
        if (!(threshold > 0.0)) throw config_error("HybridConfig: threshold must be positive");
        if (max_generations == 0)
            throw config_error("HybridConfig: max_generations must be at least 1");
        if (!(init_domain.first < init_domain.second))
            throw config_error("HybridConfig: init domain must be a nonempty interval");
        if (!initial_omegas.empty() && initial_omegas.size() != population_size)
            throw config_error("HybridConfig: need one initial omega per individual");
        for (double w : initial_omegas)
            if (!std::isfinite(w)) throw config_error("HybridConfig: non-finite initial omega");
        if (workers < 1) throw config_error("HybridConfig: workers must be at least 1");
        adaptation.validate();
        recombination.validate(population_size);
    }
};

// Draw order: every component of individual 0's x, then individual 1's, ...;
// then one omega per individual.  Explicit initial omegas skip the omega
// draws entirely (documented default).
inline Population init_population(const LinearSystem& sys, const HybridConfig& cfg, Rng& rng) {
    Population pop;
    pop.individuals.resize(cfg.population_size);
    for (Individual& ind : pop.individuals) {
        ind.x.resize(sys.order());
        for (double& c : ind.x) c = rng.uniform_open(cfg.init_domain.first, cfg.init_domain.second);
    }
    if (cfg.initial_omegas.empty()) {
        for (Individual& ind : pop.individuals)
            ind.omega = rng.uniform_open(cfg.adaptation.omega_low, cfg.adaptation.omega_high);
    } else {
        for (std::size_t i = 0; i < pop.size(); ++i)
            pop.individuals[i].omega = cfg.initial_omegas[i];
    }
    for (Individual& ind : pop.individuals) ind.error = error_norm(sys, ind.x, cfg.norm);
    pop.generation = 0;
    return pop;
}

inline Population init_population(const LinearSystem& sys, const HybridConfig& cfg) {
    Rng rng(cfg.seed);
    return init_population(sys, cfg, rng);
}

// X^(k,c) = R X^(k).  In paper_n2 mode the 2x2 matrix depends on which
// individual currently has the strictly smaller cached error; ties use the
// else branch.  Omegas pass through; cached errors are left for mutate() to
// refresh (recombination is always followed by mutation in the loop).
inline Population recombine(const Population& pop, const RecombinationPolicy& policy) {
    policy.validate(pop.size());
    const std::size_t n = pop.individuals.empty() ? 0 : pop.individuals.front().x.size();
    Population out = pop;
    if (policy.mode == RecombinationPolicy::Mode::paper_n2) {
        const RealVector& x1 = pop.individuals[0].x;
        const RealVector& x2 = pop.individuals[1].x;
        RealVector mix(n);
        if (Population::sort_key(pop.individuals[0].error) <
            Population::sort_key(pop.individuals[1].error)) {
            for (std::size_t c = 0; c < n; ++c) mix[c] = 0.99 * x1[c] + 0.01 * x2[c];
            out.individuals[0].x = x1;
            out.individuals[1].x = std::move(mix);
        } else {
            for (std::size_t c = 0; c < n; ++c) mix[c] = 0.01 * x1[c] + 0.99 * x2[c];
            out.individuals[0].x = std::move(mix);
            out.individuals[1].x = x1;
        }
        return out;
    }
    for (std::size_t i = 0; i < pop.size(); ++i) {
        RealVector y(n, 0.0);
        for (std::size_t j = 0; j < pop.size(); ++j) {
            const double r = policy.rows(i, j);
            if (r == 0.0) continue;
            const RealVector& xj = pop.individuals[j].x;
            for (std::size_t c = 0; c < n; ++c) y[c] += r * xj[c];
        }
        out.individuals[i].x = std::move(y);
    }
    return out;
}

// One SR sweep per individual at its own omega; errors recomputed.
// Jacobi-family sweeps parallelize across rows (individuals in order);
// GS-family sweeps are row-sequential, so parallelism goes across individuals.
inline void mutate(Population& pop, const LinearSystem& sys, KernelKind kernel,
                   NormKind norm = NormKind::euclidean, int workers = 1) {
    if (uses_gauss_seidel_order(kernel)) {
        parallel_for(0, pop.size(), workers, [&](std::size_t i) {
            Individual& ind = pop.individuals[i];
            ind.x = sor_sweep(sys, ind.x, effective_omega(kernel, ind.omega));
            ind.error = error_norm(sys, ind.x, norm);
        });
    } else {
        for (Individual& ind : pop.individuals) {
            ind.x = jor_sweep(sys, ind.x, effective_omega(kernel, ind.omega), workers);
            ind.error = error_norm(sys, ind.x, norm);
        }
    }
}

// Sort by ascending error (stable, original index breaks ties) and pair
// adjacent ranks: (r1,r2), (r3,r4), ...
inline std::vector<std::pair<std::size_t, std::size_t>> rank_and_pair(const Population& pop) {
    std::vector<std::size_t> idx(pop.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return Population::sort_key(pop.individuals[a].error) <
               Population::sort_key(pop.individuals[b].error);
    });
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(pop.size() / 2);
    for (std::size_t k = 0; k + 1 < pop.size(); k += 2) pairs.emplace_back(idx[k], idx[k + 1]);
    return pairs;
}

// Deterministic core of the adaptation rule, p_x/p_y supplied by the caller.
// Worse side jumps to (0.5+p_x)(wx+wy); better side drifts by p_y toward the
// bound on its own side of the other omega (strictly-greater goes up,
// otherwise down).  Results clamped into [omega_low, omega_high].  Exact
// error ties (case c) change nothing.
inline std::pair<double, double> adapt_pair_with(double wx, double wy, double ex, double ey,
                                                 const AdaptationConfig& cfg, double px,
                                                 double py) {
    const auto clamp = [&](double w) {
        return std::min(std::max(w, cfg.omega_low), cfg.omega_high);
    };
    if (ex > ey) {
        const double nwx = (0.5 + px) * (wx + wy);
        const double nwy = wy + py * (wy > wx ? cfg.omega_high - wy : cfg.omega_low - wy);
        return {clamp(nwx), clamp(nwy)};
    }
    if (ex < ey) {
        const double nwy = (0.5 + px) * (wx + wy);
        const double nwx = wx + py * (wx > wy ? cfg.omega_high - wx : cfg.omega_low - wx);
        return {clamp(nwx), clamp(nwy)};
    }
    return {wx, wy};
}

// RNG-facing wrapper used by the main loop: p_x then p_y are always drawn, so
// the stream position never depends on the branch taken.
inline std::pair<double, double> adapt_pair(double wx, double wy, double ex, double ey,
                                            const AdaptationConfig& cfg, Rng& rng) {
    const double px = rng.uniform_open(cfg.px_range.first, cfg.px_range.second);
    const double py = rng.uniform_open(cfg.py_range.first, cfg.py_range.second);
    return adapt_pair_with(wx, wy, ex, ey, cfg, px, py);
}

// Best N/2 vectors each reproduce into the two slots of the corresponding
// ranked pair; the N adapted omegas stay attached to their ranked positions,
// so omega diversity survives duplication.
inline Population select_reproduce(const Population& pop) {
    std::vector<std::size_t> idx(pop.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return Population::sort_key(pop.individuals[a].error) <
               Population::sort_key(pop.individuals[b].error);
    });
    Population out;
    out.generation = pop.generation + 1;
    out.individuals.resize(pop.size());
    for (std::size_t k = 0; k < pop.size() / 2; ++k) {
        const Individual& parent = pop.individuals[idx[k]];
        for (std::size_t slot : {2 * k, 2 * k + 1}) {
            out.individuals[slot].x = parent.x;
            out.individuals[slot].error = parent.error;
            out.individuals[slot].omega = pop.individuals[idx[slot]].omega;
        }
    }
    return out;
}

struct HybridResult {
    Individual best;
    ConvergenceTrace trace;
    RunStatus status = RunStatus::max_iterations;
    std::uint64_t generations = 0;
};

inline HybridResult run_hybrid(const LinearSystem& sys, const HybridConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    Population pop = init_population(sys, cfg, rng);
    const std::uint64_t per_generation = sweep_cost(cfg.kernel, sys.order());
    const std::size_t pairs_per_gen = cfg.population_size / 2;

    HybridResult res;
    std::uint64_t cost = 0;
    auto omegas_of = [&]() {
        std::vector<double> ws(pop.size());
        for (std::size_t i = 0; i < pop.size(); ++i) ws[i] = pop.individuals[i].omega;
        return ws;
    };
    res.trace.append({0, pop.best_error(), omegas_of(), 0});

    const auto blown = [&](double e) { return !std::isfinite(e) || e > cfg.divergence_cap; };

    if (pop.best_error() < cfg.threshold) {
        res.best = pop.individuals[pop.best_index()];
        res.status = RunStatus::converged;
        res.generations = 0;
        return res;
    }

    for (std::uint64_t gen = 1; gen <= cfg.max_generations; ++gen) {
        // Pre-draw this generation's randomness in pair order.
        std::vector<std::pair<double, double>> noise(pairs_per_gen);
        for (auto& [px, py] : noise) {
            px = rng.uniform_open(cfg.adaptation.px_range.first, cfg.adaptation.px_range.second);
            py = rng.uniform_open(cfg.adaptation.py_range.first, cfg.adaptation.py_range.second);
        }

        pop = recombine(pop, cfg.recombination);
        mutate(pop, sys, cfg.kernel, cfg.norm, cfg.workers);

        const auto pairs = rank_and_pair(pop);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [i_first, i_second] = pairs[p];
            Individual& a = pop.individuals[i_first];
            Individual& b = pop.individuals[i_second];
            const auto [wa, wb] = adapt_pair_with(a.omega, b.omega, a.error, b.error,
                                                  cfg.adaptation, noise[p].first, noise[p].second);
            a.omega = wa;
            b.omega = wb;
        }

        pop = select_reproduce(pop);
        cost += per_generation;
        const double best_err = pop.best_error();
        res.trace.append({gen, best_err, omegas_of(), cost});
        res.generations = gen;

        if (best_err < cfg.threshold) {
            res.best = pop.individuals[pop.best_index()];
            res.status = RunStatus::converged;
            return res;
        }
        bool all_blown = true;
        for (const Individual& ind : pop.individuals)
            if (!blown(ind.error)) {
                all_blown = false;
                break;
            }
        if (all_blown) {
            res.best = pop.individuals[pop.best_index()];
            res.status = RunStatus::diverged;
            return res;
        }
    }
    res.best = pop.individuals[pop.best_index()];
    res.status = RunStatus::max_iterations;
    res.generations = cfg.max_generations;
    return res;
}

}  // namespace evosr
