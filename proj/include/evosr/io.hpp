#pragma once

// Plain-text system files and atomic writes.
//
// Format: line 1 is n; the next n lines are the rows of A (n values each);
// the final line is b.  Values are %.17g, which round-trips doubles exactly.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "linalg.hpp"
#include "trace.hpp"

namespace evosr {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Write-to-temp-then-rename so readers never observe a half-written file.
inline void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw io_error("cannot open for writing: " + tmp.string());
        os << content;
        if (!os) throw io_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::string system_to_text(const LinearSystem& sys) {
    std::ostringstream os;
    const std::size_t n = sys.order();
    os << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << format_double(sys.a(i, j));
        }
        os << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i) os << ' ';
        os << format_double(sys.b[i]);
    }
    os << '\n';
    return os.str();
}

inline void save_system(const LinearSystem& sys, const std::filesystem::path& path) {
    atomic_write_text(path, system_to_text(sys));
}

inline LinearSystem load_system_stream(std::istream& is, const std::string& origin) {
    std::size_t n = 0;
    if (!(is >> n) || n == 0) throw io_error(origin + ": bad or missing order line");
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(is >> a(i, j)))
                throw io_error(origin + ": matrix row " + std::to_string(i + 1) +
                               " is short or malformed");
    RealVector b(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!(is >> b[i])) throw io_error(origin + ": rhs line is short or malformed");
    double extra;
    if (is >> extra) throw io_error(origin + ": trailing values after rhs");
    for (double v : a.data())
        if (!std::isfinite(v)) throw io_error(origin + ": non-finite matrix entry");
    // LinearSystem's constructor enforces the square/nonzero-diagonal rules.
    return LinearSystem(std::move(a), std::move(b), origin);
}

inline LinearSystem load_system(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open system file: " + path.string());
    return load_system_stream(is, path.filename().string());
}

inline void save_trace(const ConvergenceTrace& trace, const std::filesystem::path& path) {
    atomic_write_text(path, trace_to_csv(trace));
}

inline ConvergenceTrace load_trace(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open trace file: " + path.string());
    return read_trace_csv(is);
}

}  // namespace evosr
