#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <utility>
#include <vector>

#include <evosr/hybrid.hpp>
#include <evosr/trace.hpp>

using namespace evosr;

namespace {

LinearSystem tiny() {
    return LinearSystem(DenseMatrix(2, 2, {2.0, 1.0, 1.0, 2.0}), {3.0, 3.0});
}

Population make_pop(std::vector<Individual> inds) {
    Population p;
    p.individuals = std::move(inds);
    return p;
}

}  // namespace

TEST_CASE("Recombination keeps the fitter vector and blends 99:1 into the other slot") {
    Population pop = make_pop({{{0.0, 0.0}, 0.5, 1.0}, {{100.0, 100.0}, 1.5, 9.0}});
    const Population out = recombine(pop, RecombinationPolicy::paper_n2());
    REQUIRE(out.individuals[0].x == RealVector{0.0, 0.0});
    REQUIRE(out.individuals[1].x[0] == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(out.individuals[1].x[1] == Catch::Approx(1.0).margin(1e-12));
    // Omegas ride along untouched.
    REQUIRE(out.individuals[0].omega == 0.5);
    REQUIRE(out.individuals[1].omega == 1.5);
}

TEST_CASE("Recombination ties take the second-fitter branch") {
    Population pop = make_pop({{{0.0, 0.0}, 0.5, 4.0}, {{100.0, 100.0}, 1.5, 4.0}});
    const Population out = recombine(pop, RecombinationPolicy::paper_n2());
    // Equal errors: slot 0 gets 0.01 x1 + 0.99 x2, slot 1 gets x1.
    REQUIRE(out.individuals[0].x[0] == Catch::Approx(99.0).margin(1e-12));
    REQUIRE(out.individuals[0].x[1] == Catch::Approx(99.0).margin(1e-12));
    REQUIRE(out.individuals[1].x == RealVector{0.0, 0.0});
}

TEST_CASE("Custom row-stochastic recombination mixes by rows") {
    Population pop = make_pop({{{2.0, 0.0}, 0.5, 1.0}, {{0.0, 4.0}, 1.5, 2.0}});
    const auto policy = RecombinationPolicy::custom(DenseMatrix(2, 2, {0.5, 0.5, 0.25, 0.75}));
    const Population out = recombine(pop, policy);
    REQUIRE(out.individuals[0].x[0] == Catch::Approx(1.0));
    REQUIRE(out.individuals[0].x[1] == Catch::Approx(2.0));
    REQUIRE(out.individuals[1].x[0] == Catch::Approx(0.5));
    REQUIRE(out.individuals[1].x[1] == Catch::Approx(3.0));
}

TEST_CASE("Ranking pairs adjacent error ranks") {
    Population pop = make_pop({{{}, 0.1, 5.0}, {{}, 0.2, 1.0}, {{}, 0.3, 3.0}, {{}, 0.4, 9.0}});
    const auto pairs = rank_and_pair(pop);
    REQUIRE(pairs.size() == 2);
    REQUIRE(pairs[0] == std::pair<std::size_t, std::size_t>{1, 2});
    REQUIRE(pairs[1] == std::pair<std::size_t, std::size_t>{0, 3});
}

TEST_CASE("Ranking is stable across exact ties and orders NaN last") {
    Population pop = make_pop({{{}, 0.1, 2.0}, {{}, 0.2, 2.0}, {{}, 0.3, std::nan("")}});
    pop.individuals.push_back({{}, 0.4, 1.0});
    const auto pairs = rank_and_pair(pop);
    // Sorted: 3 (1.0), then 0 and 1 tied in original order, then NaN index 2.
    REQUIRE(pairs[0] == std::pair<std::size_t, std::size_t>{3, 0});
    REQUIRE(pairs[1] == std::pair<std::size_t, std::size_t>{1, 2});
    REQUIRE(pop.best_index() == 3);
}

TEST_CASE("Adaptation moves the worse omega near the midpoint and drifts the better one") {
    AdaptationConfig cfg;  // bounds [0, 2]
    SECTION("worse first, better below it drifts down") {
        const auto [nwx, nwy] = adapt_pair_with(1.5, 0.5, 10.0, 1.0, cfg, 0.0, 0.01);
        REQUIRE(nwx == Catch::Approx(1.0).margin(1e-15));
        REQUIRE(nwy == Catch::Approx(0.495).margin(1e-15));
    }
    SECTION("worse first, better above it drifts up") {
        const auto [nwx, nwy] = adapt_pair_with(0.5, 1.5, 10.0, 1.0, cfg, 0.0, 0.01);
        REQUIRE(nwx == Catch::Approx(1.0).margin(1e-15));
        REQUIRE(nwy == Catch::Approx(1.505).margin(1e-15));
    }
    SECTION("roles swap when the second individual is worse") {
        const auto [nwx, nwy] = adapt_pair_with(1.5, 0.5, 1.0, 10.0, cfg, 0.002, 0.01);
        REQUIRE(nwy == Catch::Approx(0.502 * 2.0).margin(1e-15));
        REQUIRE(nwx == Catch::Approx(1.5 + 0.01 * (2.0 - 1.5)).margin(1e-15));
    }
    SECTION("exact ties leave both omegas alone") {
        const auto [nwx, nwy] = adapt_pair_with(1.3, 0.6, 4.0, 4.0, cfg, 0.009, 0.01);
        REQUIRE(nwx == 1.3);
        REQUIRE(nwy == 0.6);
    }
}

TEST_CASE("Adaptation results are clamped into the omega bounds") {
    AdaptationConfig cfg;
    cfg.omega_low = 0.0;
    cfg.omega_high = 1.0;
    const auto [nwx, nwy] = adapt_pair_with(0.99, 0.99, 10.0, 1.0, cfg, 0.009, 0.01);
    REQUIRE(nwx == 1.0);  // 0.509 * 1.98 = 1.00782, clamped
    REQUIRE(nwy <= 1.0);
}

TEST_CASE("Tied adaptation still consumes both random draws") {
    AdaptationConfig cfg;
    Rng used(42);
    const auto [wx, wy] = adapt_pair(1.2, 0.7, 5.0, 5.0, cfg, used);
    REQUIRE(wx == 1.2);
    REQUIRE(wy == 0.7);
    const double next_after_tie = used.unit();

    Rng manual(42);
    (void)manual.uniform_open(cfg.px_range.first, cfg.px_range.second);
    (void)manual.uniform_open(cfg.py_range.first, cfg.py_range.second);
    REQUIRE(next_after_tie == manual.unit());
}

TEST_CASE("Selection duplicates the best half but keeps ranked omega slots") {
    SECTION("population of two") {
        Population pop = make_pop({{{5.0, 5.0}, 0.3, 3.0}, {{7.0, 7.0}, 0.7, 1.0}});
        pop.generation = 4;
        const Population out = select_reproduce(pop);
        REQUIRE(out.generation == 5);
        REQUIRE(out.individuals[0].x == RealVector{7.0, 7.0});
        REQUIRE(out.individuals[1].x == RealVector{7.0, 7.0});
        REQUIRE(out.individuals[0].error == 1.0);
        REQUIRE(out.individuals[1].error == 1.0);
        // Rank-1 slot keeps the rank-1 omega, rank-2 slot the rank-2 omega.
        REQUIRE(out.individuals[0].omega == 0.7);
        REQUIRE(out.individuals[1].omega == 0.3);
    }
    SECTION("population of four") {
        Population pop = make_pop({{{1.0}, 0.1, 5.0},
                                   {{2.0}, 0.2, 1.0},
                                   {{3.0}, 0.3, 3.0},
                                   {{4.0}, 0.4, 9.0}});
        const Population out = select_reproduce(pop);
        // Ranked order is individuals 1, 2, 0, 3.
        REQUIRE(out.individuals[0].x == RealVector{2.0});
        REQUIRE(out.individuals[1].x == RealVector{2.0});
        REQUIRE(out.individuals[2].x == RealVector{3.0});
        REQUIRE(out.individuals[3].x == RealVector{3.0});
        REQUIRE(out.individuals[0].omega == 0.2);
        REQUIRE(out.individuals[1].omega == 0.3);
        REQUIRE(out.individuals[2].omega == 0.1);
        REQUIRE(out.individuals[3].omega == 0.4);
        REQUIRE(out.individuals[2].error == 3.0);
    }
}

TEST_CASE("Population init draws coordinates first, then omegas only when not pinned") {
    const LinearSystem sys = tiny();
    HybridConfig cfg;
    cfg.seed = 99;
    cfg.initial_omegas = {0.5, 1.5};
    const Population pinned = init_population(sys, cfg);
    REQUIRE(pinned.individuals[0].omega == 0.5);
    REQUIRE(pinned.individuals[1].omega == 1.5);
    for (const Individual& ind : pinned.individuals) {
        for (double c : ind.x) {
            REQUIRE(c > -30.0);
            REQUIRE(c < 30.0);
        }
        REQUIRE(ind.error == error_norm(sys, ind.x, NormKind::euclidean));
    }

    // Pinned omegas skip the omega draws: the coordinate stream matches a
    // config that draws omegas, and the stream position differs afterwards.
    HybridConfig drawn_cfg = cfg;
    drawn_cfg.initial_omegas.clear();
    const Population drawn = init_population(sys, drawn_cfg);
    for (std::size_t i = 0; i < 2; ++i)
        REQUIRE(drawn.individuals[i].x == pinned.individuals[i].x);
    for (const Individual& ind : drawn.individuals) {
        REQUIRE(ind.omega > 0.0);
        REQUIRE(ind.omega < 2.0);
    }

    Rng manual(99);
    for (int k = 0; k < 4; ++k) (void)manual.uniform_open(-30.0, 30.0);
    REQUIRE(drawn.individuals[0].omega == manual.uniform_open(0.0, 2.0));
}

TEST_CASE("Config validation rejects malformed setups") {
    const auto check = [](auto&& tweak) {
        HybridConfig cfg;
        tweak(cfg);
        REQUIRE_THROWS_AS(cfg.validate(), config_error);
    };
    check([](HybridConfig& c) { c.population_size = 3; });
    check([](HybridConfig& c) { c.population_size = 0; });
    check([](HybridConfig& c) { c.threshold = 0.0; });
    check([](HybridConfig& c) { c.max_generations = 0; });
    check([](HybridConfig& c) { c.init_domain = {3.0, 3.0}; });
    check([](HybridConfig& c) { c.initial_omegas = {1.0}; });
    check([](HybridConfig& c) { c.workers = 0; });
    check([](HybridConfig& c) { c.adaptation.omega_low = 2.0; });
    check([](HybridConfig& c) { c.population_size = 4; });  // needs custom recombination
    check([](HybridConfig& c) {
        c.population_size = 4;
        c.recombination = RecombinationPolicy::custom(DenseMatrix(4, 4, std::vector<double>(16, 0.3)));
    });

    HybridConfig ok;
    ok.population_size = 4;
    ok.recombination = RecombinationPolicy::custom(DenseMatrix::identity(4));
    REQUIRE_NOTHROW(ok.validate());
}

TEST_CASE("The hybrid solves the tiny system and records a well-formed trace") {
    const LinearSystem sys = tiny();
    HybridConfig cfg;
    cfg.seed = 7;
    cfg.initial_omegas = {0.5, 1.5};
    cfg.threshold = 1e-12;
    cfg.max_generations = 1000;

    const HybridResult res = run_hybrid(sys, cfg);
    REQUIRE(res.status == RunStatus::converged);
    REQUIRE(res.best.error < 1e-12);
    REQUIRE(error_norm(sys, res.best.x, NormKind::euclidean) == res.best.error);

    const auto& recs = res.trace.records();
    REQUIRE(recs.front().generation == 0);
    REQUIRE(recs.front().cost_units == 0);
    REQUIRE(recs.front().omegas == std::vector<double>{0.5, 1.5});
    REQUIRE(recs.back().generation == res.generations);
    REQUIRE(recs.back().best_error == res.best.error);
    // Jacobi-family sweep on n=2 costs one unit per generation.
    REQUIRE(recs.back().cost_units == res.generations);
    for (const auto& r : recs) {
        REQUIRE(r.omegas.size() == 2);
        for (double w : r.omegas) {
            REQUIRE(w >= 0.0);
            REQUIRE(w <= 2.0);
        }
    }
}

TEST_CASE("The hybrid reports max_iterations when the budget is too small") {
    const LinearSystem sys = tiny();
    HybridConfig cfg;
    cfg.seed = 7;
    cfg.max_generations = 3;
    const HybridResult res = run_hybrid(sys, cfg);
    REQUIRE(res.status == RunStatus::max_iterations);
    REQUIRE(res.generations == 3);
    REQUIRE(res.trace.size() == 4);  // generation 0 plus three sweeps
}

TEST_CASE("The hybrid converges immediately when the start is already good enough") {
    const LinearSystem sys = tiny();
    HybridConfig cfg;
    cfg.seed = 7;
    cfg.init_domain = {1.0 - 1e-15, 1.0 + 1e-15};  // solution is (1, 1)
    cfg.threshold = 1e-10;
    const HybridResult res = run_hybrid(sys, cfg);
    REQUIRE(res.status == RunStatus::converged);
    REQUIRE(res.generations == 0);
    REQUIRE(res.trace.size() == 1);
}

TEST_CASE("The hybrid flags divergence only when every individual has blown up") {
    const LinearSystem sys = tiny();
    HybridConfig cfg;
    cfg.seed = 11;
    // Bounds pinned inside the expansion region: every omega in [-2, -0.5]
    // has rho > 1 on this matrix, so adaptation cannot escape.
    cfg.adaptation.omega_low = -2.0;
    cfg.adaptation.omega_high = -0.5;
    cfg.initial_omegas = {-1.0, -1.0};
    cfg.max_generations = 2000;
    const HybridResult res = run_hybrid(sys, cfg);
    REQUIRE(res.status == RunStatus::diverged);
    REQUIRE(res.generations < 2000);
    const double last = res.trace.back().best_error;
    REQUIRE((!std::isfinite(last) || last > cfg.divergence_cap));
}

TEST_CASE("Hybrid traces are byte-identical across worker counts") {
    // A slightly larger diagonally dominant system so row partitioning matters.
    const std::size_t n = 9;
    DenseMatrix a(n, n);
    RealVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            a(i, j) = std::sin(0.7 + static_cast<double>(3 * i + 5 * j));
            off += std::fabs(a(i, j));
        }
        a(i, i) = off + 2.0;
        b[i] = static_cast<double>(i) - 4.0;
    }
    const LinearSystem sys(a, b);

    for (KernelKind kernel : {KernelKind::jacobi_sr, KernelKind::gauss_seidel_sr}) {
        HybridConfig cfg;
        cfg.kernel = kernel;
        cfg.seed = 2024;
        cfg.initial_omegas = {0.5, 1.5};
        cfg.threshold = 1e-12;
        cfg.max_generations = 400;

        cfg.workers = 1;
        const HybridResult one = run_hybrid(sys, cfg);
        cfg.workers = 4;
        const HybridResult four = run_hybrid(sys, cfg);

        REQUIRE(one.status == four.status);
        REQUIRE(trace_to_csv(one.trace) == trace_to_csv(four.trace));
        REQUIRE(one.best.x == four.best.x);
    }
}
