#pragma once

// Iteration matrices and spectral-radius estimation.
//
// H_J   = -D^-1 (L+U)                      (Jacobi)
// H_w   = (1-w) I + w H_J                  (JOR)
// H_sor = (D + wL)^-1 ((1-w) D - w U)      (SOR; D+wL is lower triangular, so
//                                           the inverse is a forward solve)
//
// spectral_radius: normalized repeated squaring, which recovers
// rho = lim ||H^(2^k)||^(1/2^k) for any matrix.  Power iteration was
// deliberately rejected here: with near-tied eigenvalue moduli its norm
// sequence creeps so slowly that any affordable stopping rule fires while the
// estimate is still off in the fourth decimal, and interference between
// subdominant modes can make the step-to-step deltas vanish mid-transient,
// defeating ratio-based error certificates too.  Squaring is immune: after k
// doublings the subdominant contribution decays like (|l2|/|l1|)^(2^k), so
// 55 squarings crush even a 1 - 1e-12 modulus tie, and the log-scale
// accumulation keeps everything in floating-point range.

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kernels_fwd.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace evosr {

struct spectral_error : std::runtime_error {
    double best_estimate;
    explicit spectral_error(double est)
        : std::runtime_error("spectral_radius: estimate did not converge"), best_estimate(est) {}
};

inline DenseMatrix jacobi_iteration_matrix(const DenseMatrix& a) {
    if (!a.square()) throw dimension_error("jacobi_iteration_matrix: matrix must be square");
    const std::size_t n = a.rows();
    DenseMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a(i, i);
        if (d == 0.0) throw singular_diagonal_error("jacobi_iteration_matrix: zero diagonal");
        for (std::size_t j = 0; j < n; ++j) h(i, j) = (i == j) ? 0.0 : -a(i, j) / d;
    }
    return h;
}

inline DenseMatrix jor_iteration_matrix(const DenseMatrix& a, double omega) {
    if (!a.square()) throw dimension_error("jor_iteration_matrix: matrix must be square");
    const std::size_t n = a.rows();
    DenseMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a(i, i);
        if (d == 0.0) throw singular_diagonal_error("jor_iteration_matrix: zero diagonal");
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = (i == j) ? 1.0 - omega : -omega * a(i, j) / d;
    }
    return h;
}

inline DenseMatrix sor_iteration_matrix(const DenseMatrix& a, double omega) {
    if (!a.square()) throw dimension_error("sor_iteration_matrix: matrix must be square");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (a(i, i) == 0.0) throw singular_diagonal_error("sor_iteration_matrix: zero diagonal");
    // rhs = (1-w) D - w U, solved column by column against (D + wL).
    DenseMatrix h(n, n);
    std::vector<double> z(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            double rhs = 0.0;
            if (i == c)
                rhs = (1.0 - omega) * a(i, i);
            else if (c > i)
                rhs = -omega * a(i, c);
            double acc = rhs;
            for (std::size_t j = 0; j < i; ++j) acc -= omega * a(i, j) * z[j];
            z[i] = acc / a(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) h(i, c) = z[i];
    }
    return h;
}

inline DenseMatrix iteration_matrix(const DenseMatrix& a, KernelKind kind, double omega) {
    const double w = effective_omega(kind, omega);
    if (uses_gauss_seidel_order(kind)) return sor_iteration_matrix(a, w);
    if (w == 1.0) return jacobi_iteration_matrix(a);
    return jor_iteration_matrix(a, w);
}

namespace detail {

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.rows(), m = b.cols(), k = a.cols();
    DenseMatrix c(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = a(i, p);
            if (aip == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) c(i, j) += aip * b(p, j);
        }
    return c;
}

// Gelfand formula: rho = lim ||B^(2^k)||^(1/2^k).  Normalizing each square
// and accumulating log-scales keeps everything in range; after ~55 squarings
// the subdominant part is dead to double precision.
inline double gelfand_radius(const DenseMatrix& m) {
    const int kSquarings = 55;
    double s0 = mat_inf_norm(m);
    if (s0 == 0.0) return 0.0;
    DenseMatrix b = m;
    for (double& v : b.data()) v /= s0;
    double log_rho = std::log(s0);
    double scale = 1.0;  // 2^-k applied to each successive norm term
    for (int k = 1; k <= kSquarings; ++k) {
        b = matmul(b, b);
        scale *= 0.5;
        const double s = mat_inf_norm(b);
        if (s == 0.0) return 0.0;  // nilpotent part annihilated everything
        if (!std::isfinite(s)) throw spectral_error(std::exp(log_rho));
        for (double& v : b.data()) v /= s;
        log_rho += scale * std::log(s);
    }
    return std::exp(log_rho);
}

}  // namespace detail

inline double spectral_radius(const DenseMatrix& m) {
    if (!m.square()) throw dimension_error("spectral_radius: matrix must be square");
    if (m.rows() == 1) return std::abs(m(0, 0));
    return detail::gelfand_radius(m);
}

enum class ConvergenceVerdict { norm_contraction, spectral_contraction, divergent, inconclusive };

inline const char* verdict_name(ConvergenceVerdict v) {
    switch (v) {
        case ConvergenceVerdict::norm_contraction: return "norm_contraction";
        case ConvergenceVerdict::spectral_contraction: return "spectral_contraction";
        case ConvergenceVerdict::divergent: return "divergent";
        case ConvergenceVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct ConvergenceCertificate {
    double inf_norm = 0.0;
    std::optional<double> spectral_radius_estimate;
    ConvergenceVerdict verdict = ConvergenceVerdict::inconclusive;
};

// Cheap sufficient condition first (row-sum norm), sharp spectral check only
// when the norm is inconclusive.
inline ConvergenceCertificate certify(const LinearSystem& sys, KernelKind kernel, double omega,
                                      double rho_tol = 1e-9) {
    ConvergenceCertificate cert;
    const DenseMatrix h = iteration_matrix(sys.a, kernel, omega);
    cert.inf_norm = mat_inf_norm(h);
    if (cert.inf_norm < 1.0) {
        cert.verdict = ConvergenceVerdict::norm_contraction;
        return cert;
    }
    double rho;
    try {
        rho = spectral_radius(h);
    } catch (const spectral_error& e) {
        cert.spectral_radius_estimate = e.best_estimate;
        cert.verdict = ConvergenceVerdict::inconclusive;
        return cert;
    }
    cert.spectral_radius_estimate = rho;
    if (rho < 1.0)
        cert.verdict = ConvergenceVerdict::spectral_contraction;
    else if (rho > 1.0 + rho_tol)
        cert.verdict = ConvergenceVerdict::divergent;
    else
        cert.verdict = ConvergenceVerdict::inconclusive;
    return cert;
}

struct OmegaRho {
    double omega = 0.0;
    double rho = 0.0;
    bool estimate_converged = true;
};

inline std::vector<OmegaRho> omega_sweep(const LinearSystem& sys, KernelKind kernel,
                                         const std::vector<double>& omegas, int workers = 1) {
    if (omegas.empty()) throw invalid_value_error("omega_sweep: empty omega grid");
    std::vector<OmegaRho> out(omegas.size());
    parallel_for(0, omegas.size(), workers, [&](std::size_t i) {
        OmegaRho r;
        r.omega = omegas[i];
        try {
            r.rho = spectral_radius(iteration_matrix(sys.a, kernel, omegas[i]));
        } catch (const spectral_error& e) {
            r.rho = e.best_estimate;
            r.estimate_converged = false;
        }
        out[i] = r;
    });
    return out;
}

inline std::size_t argmin_rho(const std::vector<OmegaRho>& sweep) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (sweep[i].rho < sweep[best].rho) best = i;
    return best;
}

}  // namespace evosr
