#pragma once

// Single-sweep update rules (Jacobi / JOR / Gauss-Seidel / SOR) and the
// classical fixed-omega iteration driver.
//
// JOR:  x'_i = x_i + (w/a_ii) (b_i - sum_j a_ij x_j)      (all sums over old x)
// SOR:  x'_i = x_i + (w/a_ii) (b_i - sum_j a_ij y_j)      (y = partially updated,
//        components written in ascending index order)
//
// Plain Jacobi and Gauss-Seidel are the same code paths pinned at w = 1, so
// the w=1 reduction is bit-exact by construction.

#include <cmath>
#include <cstdint>

#include "cost.hpp"
#include "kernels_fwd.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "trace.hpp"

namespace evosr {

inline RealVector jor_sweep(const LinearSystem& sys, const RealVector& x, double omega,
                            int workers = 1) {
    if (x.size() != sys.order())
        throw dimension_error("jor_sweep: vector length does not match system order");
    const std::size_t n = sys.order();
    RealVector y(n);
    parallel_for(0, n, workers, [&](std::size_t i) {
        y[i] = x[i] + omega * (sys.b[i] - row_dot(sys.a, i, x)) / sys.a(i, i);
    });
    return y;
}

inline RealVector jacobi_sweep(const LinearSystem& sys, const RealVector& x, int workers = 1) {
    return jor_sweep(sys, x, 1.0, workers);
}

// Inherently sequential across rows: each component uses the ones already
// updated this sweep.  Never parallelized across rows.
inline RealVector sor_sweep(const LinearSystem& sys, const RealVector& x, double omega) {
    if (x.size() != sys.order())
        throw dimension_error("sor_sweep: vector length does not match system order");
    const std::size_t n = sys.order();
    RealVector y = x;
    for (std::size_t i = 0; i < n; ++i)
        y[i] += omega * (sys.b[i] - row_dot(sys.a, i, y)) / sys.a(i, i);
    return y;
}

inline RealVector gauss_seidel_sweep(const LinearSystem& sys, const RealVector& x) {
    return sor_sweep(sys, x, 1.0);
}

inline RealVector kernel_sweep(const LinearSystem& sys, const RealVector& x, KernelKind kind,
                               double omega, int workers = 1) {
    const double w = effective_omega(kind, omega);
    if (uses_gauss_seidel_order(kind)) return sor_sweep(sys, x, w);
    return jor_sweep(sys, x, w, workers);
}

enum class RunStatus { converged, max_iterations, diverged };

inline const char* status_name(RunStatus s) {
    switch (s) {
        case RunStatus::converged: return "converged";
        case RunStatus::max_iterations: return "max_iterations";
        case RunStatus::diverged: return "diverged";
    }
    return "?";
}

constexpr double kDefaultDivergenceCap = 1e15;

struct IterateResult {
    RealVector x;
    std::uint64_t iterations = 0;
    double final_error = 0.0;
    RunStatus status = RunStatus::max_iterations;
    ConvergenceTrace trace;
};

// Classical driver: sweep until the error drops below threshold, the budget
// runs out, or the error blows past the divergence cap / goes non-finite.
// One trace record per sweep.
inline IterateResult iterate(const LinearSystem& sys, KernelKind kernel, double omega,
                             RealVector x0, double threshold, std::uint64_t max_iter,
                             double divergence_cap = kDefaultDivergenceCap,
                             NormKind norm = NormKind::euclidean, int workers = 1) {
    if (threshold <= 0.0)
        throw invalid_value_error("iterate: threshold must be positive");
    if (max_iter == 0)
        throw invalid_value_error("iterate: max_iter must be positive");
    const std::uint64_t per_sweep = sweep_cost(kernel, sys.order());
    IterateResult res;
    res.x = std::move(x0);
    std::uint64_t cost = 0;
    for (std::uint64_t k = 1; k <= max_iter; ++k) {
        res.x = kernel_sweep(sys, res.x, kernel, omega, workers);
        res.final_error = error_norm(sys, res.x, norm);
        res.iterations = k;
        cost += per_sweep;
        res.trace.append({k, res.final_error, {effective_omega(kernel, omega)}, cost});
        if (res.final_error < threshold) {
            res.status = RunStatus::converged;
            return res;
        }
        if (!std::isfinite(res.final_error) || res.final_error > divergence_cap) {
            res.status = RunStatus::diverged;
            return res;
        }
    }
    res.status = RunStatus::max_iterations;
    return res;
}

}  // namespace evosr
