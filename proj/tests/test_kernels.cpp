#include "test_support.hpp"

#include "morsefiber/kernels.hpp"

#include <doctest.h>

using namespace morsefiber;
using namespace morsefiber::testing;
using kernels::Execution;

TEST_CASE("parallel kernels match the serial reference") {
    Rng rng(61);
    CHECK(kernels::max_threads() >= 1);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const auto f = random_filtration(rng, n);
        const RankInvariant rank(f, build_consistent_dgvf(f));
        const auto degrees = all_degrees(f);

        std::vector<Grade> points;
        for (int k = 0; k < 40; ++k) points.push_back(grade_near(rng, rank.closure(), n));
        std::vector<Line> lines;
        for (int k = 0; k < 12; ++k) lines.push_back(random_line(rng, n));

        CHECK(kernels::bar_batch(rank.closure(), points, Execution::Serial) ==
              kernels::bar_batch(rank.closure(), points, Execution::Parallel));
        CHECK(kernels::signature_batch(rank.closure(), lines, Execution::Serial) ==
              kernels::signature_batch(rank.closure(), lines, Execution::Parallel));

        const auto serial = kernels::fiber_batch(rank, lines, degrees, Execution::Serial);
        const RankInvariant cold(f, build_consistent_dgvf(f));
        const auto parallel = kernels::fiber_batch(cold, lines, degrees, Execution::Parallel);
        CHECK(serial == parallel);
        CHECK(kernels::reduction_batch(f, lines, degrees, Execution::Parallel) == serial);
        CHECK(kernels::reduction_batch(f, lines, degrees, Execution::Serial) == serial);

        for (std::size_t i = 0; i < points.size(); ++i) {
            CHECK(kernels::bar_batch(rank.closure(), points, Execution::Serial)[i] == bar(rank.closure(), points[i]));
        }
    }
}

TEST_CASE("empty batches") {
    const auto closure = f3_closure();
    CHECK(kernels::bar_batch(closure, {}, Execution::Parallel).empty());
    CHECK(kernels::signature_batch(closure, {}, Execution::Parallel).empty());
}

TEST_CASE("errors inside the parallel path propagate") {
    const auto closure = f3_closure();
    const std::vector<Grade> mixed{g({1, 1}), g({1, 1, 1}), g({8, 8})};
    CHECK_THROWS_AS(kernels::bar_batch(closure, mixed, Execution::Parallel), DimensionMismatch);
    CHECK_THROWS_AS(kernels::bar_batch(closure, mixed, Execution::Serial), DimensionMismatch);
}
