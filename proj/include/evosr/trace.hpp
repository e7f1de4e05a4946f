#pragma once

// Per-generation convergence records and their CSV form.
// Column layout: generation,best_error,omega_1..omega_N,cost_units

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace evosr {

struct TraceRecord {
    std::uint64_t generation = 0;
    double best_error = 0.0;
    std::vector<double> omegas;
    std::uint64_t cost_units = 0;
};

struct trace_format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ConvergenceTrace {
public:
    void append(TraceRecord rec) {
        if (!records_.empty()) {
            const TraceRecord& last = records_.back();
            if (rec.generation <= last.generation)
                throw trace_format_error("trace generations must strictly increase");
            if (rec.cost_units < last.cost_units)
                throw trace_format_error("trace cost must be nondecreasing");
            if (rec.omegas.size() != last.omegas.size())
                throw trace_format_error("trace omega arity changed mid-run");
        }
        records_.push_back(std::move(rec));
    }

    const std::vector<TraceRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    const TraceRecord& back() const { return records_.back(); }

    bool operator==(const ConvergenceTrace& o) const = default;

private:
    std::vector<TraceRecord> records_;
};

// %.17g round-trips every double exactly through text.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_trace_csv(const ConvergenceTrace& trace, std::ostream& os) {
    std::size_t arity = trace.empty() ? 1 : trace.records().front().omegas.size();
    os << "generation,best_error";
    for (std::size_t k = 1; k <= arity; ++k) os << ",omega_" << k;
    os << ",cost_units\n";
    for (const TraceRecord& r : trace.records()) {
        os << r.generation << ',' << format_double(r.best_error);
        for (double w : r.omegas) os << ',' << format_double(w);
        os << ',' << r.cost_units << '\n';
    }
}

inline std::string trace_to_csv(const ConvergenceTrace& trace) {
    std::ostringstream ss;
    write_trace_csv(trace, ss);
    return ss.str();
}

inline ConvergenceTrace read_trace_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw trace_format_error("trace csv: missing header");
    std::size_t arity = 0;
    {
        std::istringstream hs(line);
        std::string col;
        std::vector<std::string> cols;
        while (std::getline(hs, col, ',')) cols.push_back(col);
        if (cols.size() < 3 || cols.front() != "generation" || cols[1] != "best_error" ||
            cols.back() != "cost_units")
            throw trace_format_error("trace csv: unexpected header: " + line);
        arity = cols.size() - 3;
        for (std::size_t k = 0; k < arity; ++k)
            if (cols[2 + k] != "omega_" + std::to_string(k + 1))
                throw trace_format_error("trace csv: unexpected omega column: " + cols[2 + k]);
    }
    auto parse_u64 = [](const std::string& cell) {
        char* end = nullptr;
        const std::uint64_t v = std::strtoull(cell.c_str(), &end, 10);
        if (end == cell.c_str() || *end != '\0')
            throw trace_format_error("trace csv: bad integer cell: " + cell);
        return v;
    };
    auto parse_f64 = [](const std::string& cell) {
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0')
            throw trace_format_error("trace csv: bad numeric cell: " + cell);
        return v;
    };
    ConvergenceTrace trace;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 3 + arity)
            throw trace_format_error("trace csv: wrong column count in row: " + line);
        TraceRecord rec;
        rec.generation = parse_u64(cells[0]);
        rec.best_error = parse_f64(cells[1]);
        for (std::size_t k = 0; k < arity; ++k) rec.omegas.push_back(parse_f64(cells[2 + k]));
        rec.cost_units = parse_u64(cells[2 + arity]);
        trace.append(std::move(rec));
    }
    return trace;
}

inline ConvergenceTrace read_trace_csv(const std::string& text) {
    std::istringstream ss(text);
    return read_trace_csv(ss);
}

}  // namespace evosr
