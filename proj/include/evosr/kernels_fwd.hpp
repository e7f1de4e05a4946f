#pragma once

// Kernel taxonomy shared by the sweep implementations and cost accounting.

namespace evosr {

enum class KernelKind { jacobi, jacobi_sr, gauss_seidel, gauss_seidel_sr };

inline bool uses_gauss_seidel_order(KernelKind k) {
    return k == KernelKind::gauss_seidel || k == KernelKind::gauss_seidel_sr;
}

// Plain Jacobi / Gauss-Seidel are their SR variants pinned at omega = 1.
inline bool is_sr_kernel(KernelKind k) {
    return k == KernelKind::jacobi_sr || k == KernelKind::gauss_seidel_sr;
}

inline double effective_omega(KernelKind k, double omega) {
    return is_sr_kernel(k) ? omega : 1.0;
}

inline const char* kernel_name(KernelKind k) {
    switch (k) {
        case KernelKind::jacobi: return "jacobi";
        case KernelKind::jacobi_sr: return "jacobi_sr";
        case KernelKind::gauss_seidel: return "gauss_seidel";
        case KernelKind::gauss_seidel_sr: return "gauss_seidel_sr";
    }
    return "?";
}

}  // namespace evosr
