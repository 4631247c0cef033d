#include "test_support.hpp"

#include <doctest.h>

#include <numeric>
#include <unordered_set>

using namespace morsefiber;
using namespace morsefiber::testing;

namespace {

Subcomplex everything(const OneCriticalFiltration& f) {
    Subcomplex all(f.size());
    std::iota(all.begin(), all.end(), SimplexId{0});
    return all;
}

/// Brute-force rank of H_i(sub) → H_i(sup): enumerate every i-chain of `sub`
/// and every (i+1)-chain of `sup` as bitmasks, then |Z| / |Z ∩ B| = 2^rank.
std::size_t brute_force_rank(const SimplicialComplex& k, const Subcomplex& sub,
                             const Subcomplex& sup, int i) {
    std::vector<SimplexId> cells, cofaces;
    for (auto id : sup) {
        if (k.dim(id) == i) cells.push_back(id);
        if (k.dim(id) == i + 1) cofaces.push_back(id);
    }
    REQUIRE(cells.size() <= 20);
    REQUIRE(cofaces.size() <= 20);
    auto bit_of = [&](SimplexId id) {
        return std::uint64_t{1} << (std::find(cells.begin(), cells.end(), id) - cells.begin());
    };
    auto boundary = [&](SimplexId id) {
        std::vector<SimplexId> out = k.facets(id);
        std::sort(out.begin(), out.end());
        return out;
    };

    std::unordered_set<std::uint64_t> bounds;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cofaces.size()); ++mask) {
        std::uint64_t chain = 0;
        for (std::size_t j = 0; j < cofaces.size(); ++j) {
            if (mask >> j & 1) {
                for (auto f : k.facets(cofaces[j])) chain ^= bit_of(f);
            }
        }
        bounds.insert(chain);
    }

    std::uint64_t sub_mask = 0;
    for (auto id : sub) {
        if (k.dim(id) == i) sub_mask |= bit_of(id);
    }
    std::size_t cycles = 0, cycles_bounding = 0;
    for (std::uint64_t chain = 0; chain < (std::uint64_t{1} << cells.size()); ++chain) {
        if ((chain & ~sub_mask) != 0) continue;
        // ∂ chain over the two-element field, as a sorted symmetric difference.
        std::vector<SimplexId> acc;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (!(chain >> j & 1)) continue;
            std::vector<SimplexId> next;
            auto b = boundary(cells[j]);
            std::set_symmetric_difference(acc.begin(), acc.end(), b.begin(), b.end(),
                                          std::back_inserter(next));
            acc.swap(next);
        }
        if (!acc.empty()) continue;
        ++cycles;
        if (bounds.count(chain)) ++cycles_bounding;
    }
    std::size_t quotient = cycles / cycles_bounding, rank = 0;
    while (quotient > 1) {
        quotient /= 2;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("betti numbers of fixtures") {
    const auto f4 = f4_single_grade();
    CHECK(betti(f4.complex(), everything(f4), 0) == 1);
    CHECK(betti(f4.complex(), everything(f4), 1) == 1);
    CHECK(betti(f4.complex(), everything(f4), 2) == 0);

    const auto f = f1();
    CHECK(betti(f.complex(), sublevel_complex(f, g({1, 0})), 0) == 2);
    CHECK(betti(f.complex(), {}, 0) == 0);
    CHECK(betti(f.complex(), {}, 1) == 0);
}

TEST_CASE("rank of inclusion on F1") {
    const auto f = f1();
    const auto& k = f.complex();
    const auto low = sublevel_complex(f, g({1, 0}));
    const auto all = everything(f);
    CHECK(rank_inclusion(k, low, all, 0) == 1);
    CHECK(rank_inclusion(k, low, low, 0) == betti(k, low, 0));
    CHECK(rank_inclusion(k, {}, all, 0) == 0);
    CHECK_THROWS_AS(rank_inclusion(k, all, low, 0), std::invalid_argument);
}

TEST_CASE("boundary of a boundary vanishes") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_filtration(rng, 2);
        const auto all = everything(f);
        for (int p = 1; p <= f.complex().max_dim(); ++p) {
            const auto lower = boundary_matrix(f.complex(), all, p);
            const auto upper = boundary_matrix(f.complex(), all, p + 1);
            for (const auto& col : upper.columns) {
                BitColumn image(lower.rows.size());
                for (std::size_t r = 0; r < col.size(); ++r) {
                    if (col.get(r)) image ^= lower.columns[r];
                }
                CHECK_FALSE(image.any());
            }
            for (const auto& col : lower.columns) CHECK(col.count() == static_cast<std::size_t>(p + 1));
        }
    }
}

TEST_CASE("rank_inclusion agrees with brute-force enumeration") {
    Rng rng(32);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto f = random_filtration(rng, 2, 22);
        const Grade u = random_grade(rng, 2, 0, 4);
        Grade v = u;
        for (std::size_t i = 0; i < 2; ++i) v[i] += random_rational(rng, 0, 3);
        const auto ku = sublevel_complex(f, u);
        const auto kv = sublevel_complex(f, v);
        for (int i = 0; i <= 2; ++i) {
            std::size_t ncells = 0, ncofaces = 0;
            for (auto id : kv) {
                ncells += f.complex().dim(id) == i;
                ncofaces += f.complex().dim(id) == i + 1;
            }
            if (ncells > 16 || ncofaces > 16) continue;
            const auto fast = rank_inclusion(f.complex(), ku, kv, i);
            CHECK(fast == brute_force_rank(f.complex(), ku, kv, i));
            CHECK(fast <= std::min(betti(f.complex(), ku, i), betti(f.complex(), kv, i)));
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("line reduction on fixtures") {
    const auto f = f1();
    const Line line(g({1, 0}), g({1, 1}));
    const auto dgm = line_persistence_reduction(f, line, {0});
    CHECK(dgm.points() == std::vector<DiagramPoint>{{0, q(0), q(1), 1}, {0, q(0), std::nullopt, 1}});

    const auto vertex = parse_filtration("ocf 2\n0 ; 2 1\n");
    const auto single = line_persistence_reduction(vertex, line, {0, 1});
    CHECK(single.points() == std::vector<DiagramPoint>{{0, q(1), std::nullopt, 1}});

    const auto f4 = f4_single_grade(g({2, 2}));
    const auto both = line_persistence_reduction(f4, line, {0, 1, 2});
    // Everything enters at t = 2.
    CHECK(both.points() == std::vector<DiagramPoint>{{0, q(2), std::nullopt, 1}, {1, q(2), std::nullopt, 1}});
}

TEST_CASE("reduction diagram counts Betti numbers along the line") {
    Rng rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const auto f = random_filtration(rng, n);
        const auto line = random_line(rng, n);
        const auto degrees = all_degrees(f);
        const auto dgm = line_persistence_reduction(f, line, degrees);

        std::vector<Rational> samples;
        for (const auto& grade : f.grades()) {
            const auto t = entrance_parameter(line, grade);
            samples.push_back(t);
            samples.push_back(t + Rational(1, 7));
            samples.push_back(t - Rational(1, 7));
        }
        for (const auto& t : samples) {
            const auto complex_at_t = sublevel_complex(f, line.at(t));
            for (int d : degrees) {
                int alive = 0;
                for (const auto& p : dgm.points()) {
                    if (p.degree == d && p.birth <= t && (!p.death || t < *p.death)) alive += p.multiplicity;
                }
                CHECK(alive == static_cast<int>(betti(f.complex(), complex_at_t, d)));
            }
        }
    }
}
