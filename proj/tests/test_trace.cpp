#include <catch2/catch_amalgamated.hpp>

#include <evosr/trace.hpp>

using namespace evosr;

namespace {

TraceRecord rec(std::uint64_t gen, double err, std::vector<double> omegas, std::uint64_t cost) {
    return TraceRecord{gen, err, std::move(omegas), cost};
}

}  // namespace

TEST_CASE("append enforces the trace invariants") {
    ConvergenceTrace t;
    t.append(rec(0, 10.0, {0.5, 1.5}, 0));
    t.append(rec(1, 5.0, {0.6, 1.4}, 7));

    SECTION("generations strictly increasing") {
        REQUIRE_THROWS_AS(t.append(rec(1, 4.0, {0.6, 1.4}, 14)), trace_format_error);
        REQUIRE_THROWS_AS(t.append(rec(0, 4.0, {0.6, 1.4}, 14)), trace_format_error);
    }
    SECTION("cost units monotone nondecreasing") {
        REQUIRE_THROWS_AS(t.append(rec(2, 4.0, {0.6, 1.4}, 6)), trace_format_error);
        REQUIRE_NOTHROW(t.append(rec(2, 4.0, {0.6, 1.4}, 7)));  // equal cost is fine
    }
    SECTION("omega arity fixed") {
        REQUIRE_THROWS_AS(t.append(rec(2, 4.0, {0.6}, 14)), trace_format_error);
    }
}

TEST_CASE("csv round-trip is lossless") {
    ConvergenceTrace t;
    t.append(rec(0, 1.0 / 3.0, {0.1234567890123456, 1.9876543210987653}, 0));
    t.append(rec(1, 1e-13, {0.5, 1.5}, 7));
    t.append(rec(5, 9.87654321e-300, {2.0, 0.0001}, 35));

    const std::string csv = trace_to_csv(t);
    const ConvergenceTrace back = read_trace_csv(csv);
    REQUIRE(back.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        REQUIRE(back.records()[i].generation == t.records()[i].generation);
        REQUIRE(back.records()[i].best_error == t.records()[i].best_error);
        REQUIRE(back.records()[i].cost_units == t.records()[i].cost_units);
        REQUIRE(back.records()[i].omegas == t.records()[i].omegas);
    }
    // Serializing the parsed trace reproduces the bytes.
    REQUIRE(trace_to_csv(back) == csv);
}

TEST_CASE("csv header names every omega column") {
    ConvergenceTrace t;
    t.append(rec(0, 1.0, {0.5, 1.5, 0.7, 1.2}, 0));
    const std::string csv = trace_to_csv(t);
    REQUIRE(csv.rfind("generation,best_error,omega_1,omega_2,omega_3,omega_4,cost_units\n", 0) ==
            0);
}

TEST_CASE("malformed csv is rejected") {
    REQUIRE_THROWS_AS(read_trace_csv("nope\n1,2,3\n"), trace_format_error);
    REQUIRE_THROWS_AS(read_trace_csv("generation,best_error,omega_1,cost_units\n1,0.5\n"),
                      trace_format_error);
    REQUIRE_THROWS_AS(read_trace_csv("generation,best_error,omega_1,cost_units\n1,x,0.5,7\n"),
                      trace_format_error);
    // Trailing garbage after a well-formed row.
    REQUIRE_THROWS_AS(read_trace_csv("generation,best_error,omega_1,cost_units\n1,0.5,0.5,7,9\n"),
                      trace_format_error);
}

TEST_CASE("empty trace serializes to a bare header and parses back") {
    ConvergenceTrace t;
    REQUIRE(t.empty());
    const std::string csv = trace_to_csv(t);
    REQUIRE(csv == "generation,best_error,omega_1,cost_units\n");
    REQUIRE(read_trace_csv(csv).empty());
    REQUIRE_THROWS_AS(read_trace_csv(""), trace_format_error);
}
