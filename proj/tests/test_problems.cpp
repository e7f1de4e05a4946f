#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <evosr/problems.hpp>

using namespace evosr;

TEST_CASE("p0 generator writes column indices off the diagonal and 2n on it") {
    const LinearSystem sys = gen_p0(3);
    const double expect_a[9] = {6, 2, 3, 1, 6, 3, 1, 2, 6};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(sys.a(i, j) == expect_a[3 * i + j]);
    REQUIRE(sys.b == RealVector{1.0, 2.0, 3.0});
    REQUIRE(sys.label == "p0");
    REQUIRE_FALSE(sys.seed.has_value());
    REQUIRE_THROWS_AS(gen_p0(0), problem_error);
}

TEST_CASE("nsq generator puts n^2 on the diagonal") {
    const LinearSystem small = gen_nsq(4);
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(small.a(i, i) == 16.0);
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) REQUIRE(small.a(i, j) == static_cast<double>(j + 1));
        REQUIRE(small.b[i] == static_cast<double>(i + 1));
    }
    const LinearSystem big = gen_nsq(100);
    REQUIRE(big.a(0, 0) == 10000.0);
    REQUIRE(big.a(99, 99) == 10000.0);
    REQUIRE(big.a(99, 0) == 1.0);
}

TEST_CASE("Family-a systems alternate row signs and step the diagonal at the split") {
    const LinearSystem sys = gen_table6(Table6Family::a, 100, 5);
    REQUIRE(sys.a(0, 0) == 300.0);    // row 1 (odd), first half: 3n
    REQUIRE(sys.a(49, 49) == 300.0);  // row 50 still in the first half
    REQUIRE(sys.a(50, 50) == 400.0);  // row 51 onward: 4n
    REQUIRE(sys.a(99, 99) == 400.0);
    REQUIRE(sys.a(0, 1) == -2.0);  // odd row: -(j)
    REQUIRE(sys.a(0, 2) == -3.0);
    REQUIRE(sys.a(1, 0) == 1.0);  // even row: +j
    REQUIRE(sys.b[0] == 1.0);
    REQUIRE(sys.b[99] == 100.0);
    REQUIRE(sys.label == "t6a");
    REQUIRE(sys.seed.value() == 5);
}

TEST_CASE("Family-b systems flip the sign of the first-half diagonal") {
    const LinearSystem sys = gen_table6(Table6Family::b, 100, 5);
    REQUIRE(sys.a(0, 0) == -300.0);
    REQUIRE(sys.a(49, 49) == -300.0);
    REQUIRE(sys.a(50, 50) == 400.0);
    REQUIRE(sys.a(0, 1) == 2.0);  // off-diagonals are +j in every row
    REQUIRE(sys.a(1, 0) == 1.0);
}

TEST_CASE("Family-c diagonals scale as (-1)^i * n * i") {
    const LinearSystem sys = gen_table6(Table6Family::c, 4, 5);
    REQUIRE(sys.a(0, 0) == -4.0);
    REQUIRE(sys.a(1, 1) == 8.0);
    REQUIRE(sys.a(2, 2) == -12.0);
    REQUIRE(sys.a(3, 3) == 16.0);
    REQUIRE(sys.a(0, 1) == 2.0);
}

TEST_CASE("Family-d randomizes off-diagonal signs but is seed-deterministic") {
    const LinearSystem sys = gen_table6(Table6Family::d, 4, 9);
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(sys.a(i, i) == -4.0 * static_cast<double>(i + 1));
        REQUIRE(sys.b[i] == 8.0 * static_cast<double>(i + 1));
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) REQUIRE(std::fabs(sys.a(i, j)) == 4.0 * static_cast<double>(j + 1));
    }
    const LinearSystem again = gen_table6(Table6Family::d, 4, 9);
    const LinearSystem other = gen_table6(Table6Family::d, 4, 10);
    bool same = true, differs = false;
    for (std::size_t k = 0; k < 16; ++k) {
        same = same && (sys.a.data()[k] == again.a.data()[k]);
        differs = differs || (sys.a.data()[k] != other.a.data()[k]);
    }
    REQUIRE(same);
    REQUIRE(differs);
}

TEST_CASE("Odd orders split the diagonal step at ceil(n/2)") {
    const LinearSystem sys = gen_table6(Table6Family::a, 5, 1);
    REQUIRE(sys.a(2, 2) == 15.0);  // row 3 of 5 is still first-half: 3n
    REQUIRE(sys.a(3, 3) == 20.0);  // row 4 steps to 4n
}

TEST_CASE("Random-family rows pin fixed entries and bound the drawn ones") {
    const LinearSystem p1 = gen_table7(1, 30, 77);
    for (std::size_t i = 0; i < 30; ++i) {
        REQUIRE(p1.a(i, i) == 70.0);
        for (std::size_t j = 0; j < 30; ++j)
            if (i != j) {
                REQUIRE(p1.a(i, j) > -10.0);
                REQUIRE(p1.a(i, j) < 10.0);
            }
        REQUIRE(p1.b[i] > -70.0);
        REQUIRE(p1.b[i] < 70.0);
    }
    REQUIRE(p1.label == "t7_1");
    REQUIRE(p1.seed.value() == 77);

    const LinearSystem p3 = gen_table7(3, 20, 4);
    for (std::size_t i = 0; i < 20; ++i) {
        REQUIRE(p3.b[i] == 2.0);
        REQUIRE(p3.a(i, i) > 1.0);
        REQUIRE(p3.a(i, i) < 100.0);
    }

    // Sign-indefinite diagonal ranges must still never produce a near-zero pivot.
    const LinearSystem p5 = gen_table7(5, 40, 123);
    for (std::size_t i = 0; i < 40; ++i) REQUIRE(std::fabs(p5.a(i, i)) >= 1e-6);
}

TEST_CASE("Random-family generation is reproducible per seed") {
    const LinearSystem a1 = gen_table7(2, 25, 50);
    const LinearSystem a2 = gen_table7(2, 25, 50);
    const LinearSystem b1 = gen_table7(2, 25, 51);
    REQUIRE(a1.a.data() == a2.a.data());
    REQUIRE(a1.b == a2.b);
    REQUIRE(a1.a.data() != b1.a.data());
}

TEST_CASE("Per-problem halting thresholds") {
    REQUIRE(table7_eta(1) == 1e-12);
    REQUIRE(table7_eta(4) == 1e-11);
    REQUIRE(table7_eta(5) == 1e-8);
    REQUIRE(table7_eta(7) == 1e-6);
    REQUIRE(table7_eta(10) == 1e-11);
    REQUIRE_THROWS_AS(table7_eta(0), problem_error);
    REQUIRE_THROWS_AS(table7_eta(11), problem_error);
}

TEST_CASE("Problem names parse into specs and build the right systems") {
    ProblemSpec spec = parse_problem_name("p0");
    REQUIRE(spec.family == FamilyKind::p0);
    spec.n = 3;
    REQUIRE(make_system(spec).a(0, 0) == 6.0);

    REQUIRE(parse_problem_name("nsq").family == FamilyKind::nsq);

    spec = parse_problem_name("t6c");
    REQUIRE(spec.family == FamilyKind::table6);
    REQUIRE(spec.t6_family == Table6Family::c);

    spec = parse_problem_name("t7_10");
    REQUIRE(spec.family == FamilyKind::table7);
    REQUIRE(spec.t7_label == 10);

    for (const char* bad : {"bogus", "t6e", "t7_0", "t7_11", "t7_x", "", "p1"})
        REQUIRE_THROWS_AS(parse_problem_name(bad), problem_error);
}
