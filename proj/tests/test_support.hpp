#pragma once

// Shared fixtures and random generators for the test suites.

#include "morsefiber/dgvf.hpp"
#include "morsefiber/fiber.hpp"
#include "morsefiber/filtration.hpp"
#include "morsefiber/homology.hpp"
#include "morsefiber/rank_invariant.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace morsefiber::testing {

inline Grade g(std::initializer_list<long> coords) { return Grade::from_ints(coords); }
inline Rational q(long p, long d = 1) { return Rational(p, d); }

/// a={0} (0,0), b={1} (1,0), ab={0,1} (1,1).
inline const char* kF1Text =
    "ocf 2\n"
    "0 ; 0 0\n"
    "1 ; 1 0\n"
    "0 1 ; 1 1\n";

inline OneCriticalFiltration f1() { return parse_filtration(kF1Text); }

/// Three isolated vertices at (3,2), (3,5), (6,2); every cell critical.
inline OneCriticalFiltration f2_filtration() {
    return OneCriticalFiltration(2, {{Simplex{0}, g({3, 2})}, {Simplex{1}, g({3, 5})},
                                     {Simplex{2}, g({6, 2})}});
}
inline std::vector<Grade> f2_critical() { return {g({3, 2}), g({3, 5}), g({6, 2})}; }

inline ClosedCriticalSet f3_closure() {
    return lub_closure({g({2, 3}), g({2, 6}), g({7, 3}), g({7, 6})});
}
inline Line f3_line_l() { return Line(g({0, 3}), g({7, 4})); }
inline Line f3_line_l1() { return Line(g({0, 2}), g({1, 1})); }
inline Line f3_line_l2() { return Line(g({0, 6}), g({4, 1})); }

/// Triangle-with-diagonal: a=0 b=1 c=2 d=3; edges ab bc cd ad ac; triangle acd.
inline std::vector<Simplex> f4_simplices() {
    return {Simplex{0},    Simplex{1},    Simplex{2},    Simplex{3},    Simplex{0, 1},
            Simplex{1, 2}, Simplex{2, 3}, Simplex{0, 3}, Simplex{0, 2}, Simplex{0, 2, 3}};
}

inline OneCriticalFiltration f4_single_grade(const Grade& at = Grade::from_ints({0, 0})) {
    std::vector<std::pair<Simplex, Grade>> graded;
    for (const auto& s : f4_simplices()) graded.emplace_back(s, at);
    return OneCriticalFiltration(at.dim(), std::move(graded));
}

/// Pairs (b,ab), (c,bc), (d,ad), (cd,acd).
inline std::vector<std::pair<Simplex, Simplex>> f4_pairs() {
    return {{Simplex{1}, Simplex{0, 1}},
            {Simplex{2}, Simplex{1, 2}},
            {Simplex{3}, Simplex{0, 3}},
            {Simplex{2, 3}, Simplex{0, 2, 3}}};
}

/// F4 with d, ad, cd, acd raised to (1,1) and everything else at (0,0).
inline OneCriticalFiltration f4_two_level() {
    const std::set<Simplex> high{Simplex{3}, Simplex{0, 3}, Simplex{2, 3}, Simplex{0, 2, 3}};
    std::vector<std::pair<Simplex, Grade>> graded;
    for (const auto& s : f4_simplices()) graded.emplace_back(s, high.count(s) ? g({1, 1}) : g({0, 0}));
    return OneCriticalFiltration(2, std::move(graded));
}

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long lo, long hi, long max_den = 2) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return Rational(num(rng), d);
}

inline Grade random_grade(Rng& rng, std::size_t n, long lo, long hi, long max_den = 2) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(random_rational(rng, lo, hi, max_den));
    return Grade(std::move(c));
}

/// Random face-closed complex with at most `max_simplices` simplices, in
/// (dim, vertices) order.
inline std::vector<Simplex> random_complex(Rng& rng, std::size_t max_simplices = 30, int max_dim = 3) {
    std::uniform_int_distribution<int> vcount(2, 7);
    const int nv = vcount(rng);
    std::set<Simplex> chosen;
    for (int v = 0; v < nv; ++v) chosen.insert(Simplex{static_cast<Vertex>(v)});

    std::uniform_int_distribution<int> pick_dim(1, max_dim);
    std::uniform_int_distribution<int> pick_vertex(0, nv - 1);
    for (int attempt = 0; attempt < 40; ++attempt) {
        const int d = std::min(pick_dim(rng), nv - 1);
        std::set<Vertex> vs;
        while (static_cast<int>(vs.size()) < d + 1) vs.insert(static_cast<Vertex>(pick_vertex(rng)));
        Simplex top(std::vector<Vertex>(vs.begin(), vs.end()));
        // Add all faces.
        std::set<Simplex> closure{top};
        std::vector<Simplex> stack{top};
        while (!stack.empty()) {
            auto s = stack.back();
            stack.pop_back();
            for (auto& f : s.facets()) {
                if (closure.insert(f).second) stack.push_back(f);
            }
        }
        std::set<Simplex> merged = chosen;
        merged.insert(closure.begin(), closure.end());
        if (merged.size() > max_simplices) continue;
        chosen = std::move(merged);
    }
    return {chosen.begin(), chosen.end()};
}

/// Random complex with a monotone grade function. About half of the
/// simplices share their grade with the lub of their facets so that
/// consistent pairs exist.
inline OneCriticalFiltration random_filtration(Rng& rng, std::size_t n,
                                               std::size_t max_simplices = 30, int max_dim = 3) {
    const auto ordered = random_complex(rng, max_simplices, max_dim);
    std::map<Simplex, Grade> grades;
    std::bernoulli_distribution keep(0.5);
    std::uniform_int_distribution<int> bump(0, 2);
    for (const auto& s : ordered) {
        if (s.dim() == 0) {
            grades[s] = random_grade(rng, n, 0, 3);
            continue;
        }
        Grade base = grades.at(s.facets().front());
        for (const auto& f : s.facets()) base = lub(base, grades.at(f));
        if (!keep(rng)) {
            for (std::size_t i = 0; i < n; ++i) base[i] += Rational(bump(rng), 2);
        }
        grades[s] = base;
    }
    std::vector<std::pair<Simplex, Grade>> graded(grades.begin(), grades.end());
    return OneCriticalFiltration(n, std::move(graded));
}

/// Lower-star filtration: random vertex grades, every simplex at the lub of
/// its vertices. Produces large equal-grade groups.
inline OneCriticalFiltration random_lower_star(Rng& rng, std::size_t n,
                                               std::size_t max_simplices = 40, int max_dim = 3) {
    const auto ordered = random_complex(rng, max_simplices, max_dim);
    std::map<Vertex, Grade> vertex_grade;
    std::vector<std::pair<Simplex, Grade>> graded;
    for (const auto& s : ordered) {
        if (s.dim() == 0) vertex_grade.emplace(s.vertices()[0], random_grade(rng, n, 0, 3, 1));
        Grade g = vertex_grade.at(s.vertices()[0]);
        for (Vertex v : s.vertices()) g = lub(g, vertex_grade.at(v));
        graded.emplace_back(s, std::move(g));
    }
    return OneCriticalFiltration(n, std::move(graded));
}

/// Positive-slope line with small rational coordinates.
inline Line random_line(Rng& rng, std::size_t n) {
    std::vector<Rational> base, dir;
    std::uniform_int_distribution<long> num(1, 4), den(1, 3);
    for (std::size_t i = 0; i < n; ++i) {
        base.push_back(random_rational(rng, -3, 3, 3));
        dir.push_back(Rational(num(rng), den(rng)));
    }
    return Line(Grade(std::move(base)), Grade(std::move(dir)));
}

/// A grade near the closure: an element of C̄ shifted by a small offset.
inline Grade grade_near(Rng& rng, const ClosedCriticalSet& closure, std::size_t n) {
    if (closure.empty()) return random_grade(rng, n, -1, 5);
    std::uniform_int_distribution<std::size_t> idx(0, closure.size() - 1);
    Grade u = closure.closed()[idx(rng)];
    std::uniform_int_distribution<int> mode(0, 3);
    if (mode(rng) == 0) return u;
    for (std::size_t i = 0; i < n; ++i) u[i] += random_rational(rng, -1, 1, 2);
    return u;
}

/// A line equivalent to `line` but distinct from it, or nullopt after retries.
inline std::optional<Line> perturb_within_class(Rng& rng, const ClosedCriticalSet& closure,
                                                const Line& line) {
    const auto target = signature(closure, line);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Rational> base, dir;
        const long scale = attempt < 100 ? 8 : 32;
        for (std::size_t i = 0; i < line.dim(); ++i) {
            base.push_back(line.base()[i] + random_rational(rng, -1, 1, scale) / 4);
            Rational m = line.direction()[i] * (1 + random_rational(rng, -1, 1, scale) / 8);
            dir.push_back(m);
        }
        // Reparametrize too: shift the base along the line and rescale.
        std::uniform_int_distribution<long> shift(-2, 2), stretch(1, 3);
        const Rational s(shift(rng)), k(stretch(rng));
        for (std::size_t i = 0; i < line.dim(); ++i) {
            base[i] += dir[i] * s;
            dir[i] *= k;
        }
        Line candidate(Grade(std::move(base)), Grade(std::move(dir)));
        if (candidate != line && signature(closure, candidate) == target) return candidate;
    }
    return std::nullopt;
}

}  // namespace morsefiber::testing
