#pragma once

// Simulated time-unit accounting for the idealized n^2-processor machine.
// Parallel model: a Jacobi-family sweep costs ceil(log2 n) units (tree
// reduction of every row dot product at once); a Gauss-Seidel-family sweep
// costs n*ceil(log2 n) (rows are sequential, each row's dot product still
// parallel).  Sequential baseline: n^2 units per sweep.  Floor of one unit
// so n=1 never reports zero cost.

#include <cstdint>

#include "kernels_fwd.hpp"

namespace evosr {

inline std::uint64_t ceil_log2(std::uint64_t n) {
    std::uint64_t bits = 0, v = 1;
    while (v < n) {
        v <<= 1;
        ++bits;
    }
    return bits;
}

enum class CostModel { parallel, sequential };

inline std::uint64_t sweep_cost(KernelKind kind, std::uint64_t n,
                                CostModel model = CostModel::parallel) {
    std::uint64_t units;
    if (model == CostModel::sequential) {
        units = n * n;
    } else {
        const std::uint64_t lg = ceil_log2(n);
        units = uses_gauss_seidel_order(kind) ? n * lg : lg;
    }
    return units == 0 ? 1 : units;
}

}  // namespace evosr
