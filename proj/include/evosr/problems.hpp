#pragma once

// Seeded generators for every benchmark system.
//
//   p0      a_ii = 2n,  a_ij = j, b_i = i
//   nsq     a_ii = n^2, a_ij = j, b_i = i
//   t6a     a_ij = (-1)^i j, a_ii = 3n (i<=split) else 4n, b_i = i
//   t6b     a_ij = j,        a_ii = -3n (i<=split) else 4n, b_i = i
//   t6c     a_ij = j,        a_ii = (-1)^i n i,             b_i = i
//   t6d     a_ij = +-4j (fair coin per entry), a_ii = -n i, b_i = 2n i
//   t7_1..t7_10  random systems drawn from fixed per-problem intervals
//
// Indices in the formulas are 1-based.  The t6 half-split is the literal
// constant 50 at n=100 and ceil(n/2) otherwise.

#include <cmath>
#include <cstdint>
#include <string>

#include "linalg.hpp"
#include "rng.hpp"

namespace evosr {

struct problem_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline LinearSystem gen_p0(std::size_t n) {
    if (n == 0) throw problem_error("gen_p0: n must be at least 1");
    DenseMatrix a(n, n);
    RealVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<double>(j + 1);
        a(i, i) = 2.0 * static_cast<double>(n);
        b[i] = static_cast<double>(i + 1);
    }
    return LinearSystem(std::move(a), std::move(b), "p0");
}

inline LinearSystem gen_nsq(std::size_t n) {
    if (n == 0) throw problem_error("gen_nsq: n must be at least 1");
    DenseMatrix a(n, n);
    RealVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<double>(j + 1);
        a(i, i) = static_cast<double>(n) * static_cast<double>(n);
        b[i] = static_cast<double>(i + 1);
    }
    return LinearSystem(std::move(a), std::move(b), "nsq");
}

enum class Table6Family : char { a = 'a', b = 'b', c = 'c', d = 'd' };

inline LinearSystem gen_table6(Table6Family family, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw problem_error("gen_table6: n must be at least 1");
    const std::size_t split = (n == 100) ? 50 : (n + 1) / 2;
    DenseMatrix a(n, n);
    RealVector b(n);
    Rng rng(seed);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t i = r + 1;
        const double row_sign = (i % 2 == 1) ? -1.0 : 1.0;  // (-1)^i
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            if (r == c2) continue;
            const double j = static_cast<double>(c2 + 1);
            switch (family) {
                case Table6Family::a: a(r, c2) = row_sign * j; break;
                case Table6Family::b: a(r, c2) = j; break;
                case Table6Family::c: a(r, c2) = j; break;
                case Table6Family::d: a(r, c2) = (rng.unit() < 0.5 ? -4.0 : 4.0) * j; break;
            }
        }
        const double dn = static_cast<double>(n);
        switch (family) {
            case Table6Family::a: a(r, r) = (i <= split) ? 3.0 * dn : 4.0 * dn; break;
            case Table6Family::b: a(r, r) = (i <= split) ? -3.0 * dn : 4.0 * dn; break;
            case Table6Family::c: a(r, r) = row_sign * dn * static_cast<double>(i); break;
            case Table6Family::d: a(r, r) = -dn * static_cast<double>(i); break;
        }
        b[r] = (family == Table6Family::d) ? 2.0 * dn * static_cast<double>(i)
                                           : static_cast<double>(i);
    }
    std::string label = "t6";
    label += static_cast<char>(family);
    return LinearSystem(std::move(a), std::move(b), label, seed);
}

struct Table7Row {
    // Fixed value when lo == hi, otherwise an open interval (lo, hi).
    struct Range {
        double lo, hi;
        bool fixed() const { return lo == hi; }
    };
    Range diag, off, rhs;
    double eta;  // per-problem halting threshold
};

inline const Table7Row& table7_row(int label) {
    static const Table7Row rows[10] = {
        {{70, 70}, {-10, 10}, {-70, 70}, 1e-12},        // P1
        {{50, 100}, {-10, 10}, {-100, 100}, 1e-12},     // P2
        {{1, 100}, {-2, 2}, {2, 2}, 1e-12},             // P3
        {{200, 200}, {-30, 30}, {-400, 400}, 1e-11},    // P4
        {{-70, 70}, {0, 4}, {0, 70}, 1e-8},             // P5
        {{-200, 200}, {-10, 10}, {-100, 100}, 1e-11},   // P6
        {{-100, 100}, {-10, 10}, {-200, 200}, 1e-6},    // P7
        {{10, 50}, {5, 8}, {-200, 200}, 1e-11},         // P8
        {{100, 300}, {-50, 50}, {-100, 100}, 1e-11},    // P9
        {{200, 300}, {-100, 100}, {-100, 100}, 1e-11},  // P10
    };
    if (label < 1 || label > 10) throw problem_error("table7: label must be 1..10");
    return rows[label - 1];
}

inline double table7_eta(int label) { return table7_row(label).eta; }

// Draw order: off-diagonals row-major (diagonal positions skipped), then the
// diagonal, then b.  Diagonals drawn from an interval containing zero are
// redrawn while |a_ii| < 1e-6.
inline LinearSystem gen_table7(int label, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw problem_error("gen_table7: n must be at least 1");
    const Table7Row& row = table7_row(label);
    DenseMatrix a(n, n);
    RealVector b(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) a(i, j) = rng.uniform_open(row.off.lo, row.off.hi);
    for (std::size_t i = 0; i < n; ++i) {
        if (row.diag.fixed()) {
            a(i, i) = row.diag.lo;
        } else {
            double d = rng.uniform_open(row.diag.lo, row.diag.hi);
            while (std::abs(d) < 1e-6) d = rng.uniform_open(row.diag.lo, row.diag.hi);
            a(i, i) = d;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] = row.rhs.fixed() ? row.rhs.lo : rng.uniform_open(row.rhs.lo, row.rhs.hi);
    return LinearSystem(std::move(a), std::move(b), "t7_" + std::to_string(label), seed);
}

enum class FamilyKind { p0, nsq, table6, table7 };

struct ProblemSpec {
    FamilyKind family = FamilyKind::p0;
    Table6Family t6_family = Table6Family::a;
    int t7_label = 1;
    std::size_t n = 100;
    std::uint64_t seed = 0;
};

inline LinearSystem make_system(const ProblemSpec& spec) {
    switch (spec.family) {
        case FamilyKind::p0: return gen_p0(spec.n);
        case FamilyKind::nsq: return gen_nsq(spec.n);
        case FamilyKind::table6: return gen_table6(spec.t6_family, spec.n, spec.seed);
        case FamilyKind::table7: return gen_table7(spec.t7_label, spec.n, spec.seed);
    }
    throw problem_error("make_system: unknown family");
}

// Accepts p0, nsq, t6a..t6d, t7_1..t7_10.
inline ProblemSpec parse_problem_name(const std::string& name) {
    ProblemSpec spec;
    if (name == "p0") {
        spec.family = FamilyKind::p0;
    } else if (name == "nsq") {
        spec.family = FamilyKind::nsq;
    } else if (name.size() == 3 && name.rfind("t6", 0) == 0 && name[2] >= 'a' && name[2] <= 'd') {
        spec.family = FamilyKind::table6;
        spec.t6_family = static_cast<Table6Family>(name[2]);
    } else if (name.rfind("t7_", 0) == 0) {
        spec.family = FamilyKind::table7;
        try {
            spec.t7_label = std::stoi(name.substr(3));
        } catch (const std::exception&) {
            throw problem_error("unknown problem name: " + name);
        }
        if (spec.t7_label < 1 || spec.t7_label > 10)
            throw problem_error("unknown problem name: " + name);
    } else {
        throw problem_error("unknown problem name: " + name);
    }
    return spec;
}

}  // namespace evosr
