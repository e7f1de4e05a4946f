#pragma once

// Dense real matrices/vectors, norms, residuals and the D/L/U splitting.
// Everything is double precision, row-major, desk scale (n ~ 100).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evosr {

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_diagonal_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_value_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using RealVector = std::vector<double>;

inline void require_finite(const RealVector& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            throw invalid_value_error(std::string(what) + ": non-finite entry");
}

class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t n_rows, std::size_t n_cols, double fill = 0.0)
        : rows_(n_rows), cols_(n_cols), entries_(n_rows * n_cols, fill) {
        if (n_rows == 0 || n_cols == 0)
            throw dimension_error("DenseMatrix: zero dimension");
        if (!std::isfinite(fill))
            throw invalid_value_error("DenseMatrix: non-finite fill");
    }

    DenseMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<double> entries)
        : rows_(n_rows), cols_(n_cols), entries_(std::move(entries)) {
        if (n_rows == 0 || n_cols == 0)
            throw dimension_error("DenseMatrix: zero dimension");
        if (entries_.size() != rows_ * cols_)
            throw dimension_error("DenseMatrix: entry count does not match shape");
        for (double x : entries_)
            if (!std::isfinite(x))
                throw invalid_value_error("DenseMatrix: non-finite entry");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<double>& data() const { return entries_; }
    std::vector<double>& data() { return entries_; }

    const double* row_ptr(std::size_t i) const { return entries_.data() + i * cols_; }

    bool operator==(const DenseMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

struct LinearSystem {
    DenseMatrix a;
    RealVector b;
    std::string label;
    std::optional<std::uint64_t> seed;

    LinearSystem(DenseMatrix a_in, RealVector b_in, std::string label_in = "",
                 std::optional<std::uint64_t> seed_in = std::nullopt)
        : a(std::move(a_in)), b(std::move(b_in)), label(std::move(label_in)), seed(seed_in) {
        if (!a.square())
            throw dimension_error("LinearSystem: coefficient matrix must be square");
        if (a.rows() != b.size())
            throw dimension_error("LinearSystem: rhs length does not match matrix order");
        require_finite(b, "LinearSystem rhs");
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, i) == 0.0)
                throw singular_diagonal_error("LinearSystem: zero diagonal entry at row " +
                                              std::to_string(i));
    }

    std::size_t order() const { return a.rows(); }
};

struct DluSplit {
    DenseMatrix d, l, u;
};

// A = D + L + U with D diagonal, L strictly lower, U strictly upper.  Entries
// are copied verbatim so d+l+u reconstructs a bitwise.
inline DluSplit dlu_split(const DenseMatrix& a) {
    if (!a.square())
        throw dimension_error("dlu_split: matrix must be square");
    const std::size_t n = a.rows();
    DluSplit out{DenseMatrix(n, n), DenseMatrix(n, n), DenseMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double v = a(i, j);
            if (i == j)
                out.d(i, j) = v;
            else if (i > j)
                out.l(i, j) = v;
            else
                out.u(i, j) = v;
        }
    return out;
}

// Row dot products accumulate left to right; parallel callers must keep this
// exact order per row so results never depend on scheduling.
inline double row_dot(const DenseMatrix& a, std::size_t i, const RealVector& x) {
    const double* row = a.row_ptr(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
    return acc;
}

inline RealVector matvec(const DenseMatrix& a, const RealVector& x) {
    if (a.cols() != x.size())
        throw dimension_error("matvec: dimension mismatch");
    RealVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] = row_dot(a, i, x);
    return y;
}

inline RealVector residual(const LinearSystem& sys, const RealVector& x) {
    if (x.size() != sys.order())
        throw dimension_error("residual: vector length does not match system order");
    RealVector r(sys.order());
    for (std::size_t i = 0; i < sys.order(); ++i) r[i] = row_dot(sys.a, i, x) - sys.b[i];
    return r;
}

enum class NormKind { euclidean, infinity, one };

inline double vec_norm(const RealVector& v, NormKind kind) {
    switch (kind) {
        case NormKind::euclidean: {
            double s = 0.0;
            for (double x : v) s += x * x;
            return std::sqrt(s);
        }
        case NormKind::infinity: {
            double m = 0.0;
            for (double x : v) m = std::max(m, std::abs(x));
            return m;
        }
        case NormKind::one: {
            double s = 0.0;
            for (double x : v) s += std::abs(x);
            return s;
        }
    }
    return 0.0;  // unreachable
}

inline double error_norm(const LinearSystem& sys, const RealVector& x,
                         NormKind kind = NormKind::euclidean) {
    return vec_norm(residual(sys, x), kind);
}

// Maximum absolute row sum -- the directly computable contraction norm.
inline double mat_inf_norm(const DenseMatrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace evosr
