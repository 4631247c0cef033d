#include "morsefiber/fiber.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace morsefiber {

std::uint64_t LineSignature::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
    };
    for (const auto& e : entries) {
        mix(e.value.to_string());
        mix(":");
        for (std::size_t i = 0; i < e.face.size(); ++i) {
            if (i) mix(",");
            mix(std::to_string(e.face[i]));
        }
        mix(";");
    }
    return h;
}

std::string LineSignature::class_id() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

LineSignature signature(const ClosedCriticalSet& closure, const Line& line) {
    LineSignature sig;
    sig.entries.reserve(closure.size());
    for (const Grade& c : closure.closed()) sig.entries.push_back({c, push(line, c).face});
    return sig;
}

bool equivalent(const ClosedCriticalSet& closure, const Line& a, const Line& b) {
    return signature(closure, a) == signature(closure, b);
}

Grade double_bar(const ClosedCriticalSet& closure, const Line& line, const Grade& u) {
    if (!closure.contains(u)) {
        throw std::invalid_argument("double_bar: " + u.to_string() + " is not in the closure");
    }
    const Face face_u = push(line, u).face;
    std::vector<const Grade*> candidates;
    for (const Grade& c : closure.closed()) {
        if (leq(u, c) && faces_intersect(u, face_u, c, push(line, c).face)) {
            candidates.push_back(&c);
        }
    }
    for (const Grade* c : candidates) {
        if (std::all_of(candidates.begin(), candidates.end(),
                        [c](const Grade* o) { return leq(*o, *c); })) {
            return *c;
        }
    }
    throw std::logic_error("double_bar: no maximum among " + std::to_string(candidates.size()) +
                           " candidates for " + u.to_string());
}

std::vector<PushedCritical> pushed_criticals(const ClosedCriticalSet& closure, const Line& line) {
    std::vector<PushedCritical> out;
    out.reserve(closure.size());
    for (const Grade& c : closure.closed()) {
        auto p = push(line, c);
        out.push_back({std::move(p.point), std::move(p.t), Grade{}});
    }
    std::sort(out.begin(), out.end(),
              [](const PushedCritical& a, const PushedCritical& b) { return a.t < b.t; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PushedCritical& a, const PushedCritical& b) { return a.t == b.t; }),
              out.end());
    for (auto& c : out) c.bar = *bar(closure, c.point);
    return out;
}

std::vector<int> all_degrees(const OneCriticalFiltration& filtration) {
    std::vector<int> out;
    for (int d = 0; d <= filtration.complex().max_dim(); ++d) out.push_back(d);
    return out;
}

FiberDiagram fiber_diagram(const RankInvariant& rank, const Line& line,
                           const std::vector<int>& degrees) {
    if (line.dim() != rank.filtration().parameters()) {
        throw DimensionMismatch(line.dim(), rank.filtration().parameters());
    }
    const auto crit = pushed_criticals(rank.closure(), line);
    const std::size_t m = crit.size();
    std::vector<DiagramPoint> points;

    for (int degree : degrees) {
        // rho[i][j] = ρ(cⁱ, cʲ) for 1 ≤ i ≤ j ≤ m; row 0 is the vanishing sentinel.
        std::vector<std::vector<long>> rho(m + 1, std::vector<long>(m + 1, 0));
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = i; j <= m; ++j) {
                rho[i][j] = static_cast<long>(rank.rank(degree, crit[i - 1].bar, crit[j - 1].bar));
            }
        }
        auto r = [&](std::size_t i, std::size_t j) { return i > j ? 0L : rho[i][j]; };

        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = i + 1; j <= m; ++j) {
                const long mu = r(i, j - 1) - r(i - 1, j - 1) - r(i, j) + r(i - 1, j);
                if (mu < 0) throw std::logic_error("negative multiplicity in fiber diagram");
                if (mu > 0) points.push_back({degree, crit[i - 1].t, crit[j - 1].t, static_cast<int>(mu)});
            }
            const long mu_inf = r(i, m) - r(i - 1, m);
            if (mu_inf < 0) throw std::logic_error("negative essential multiplicity");
            if (mu_inf > 0) {
                points.push_back({degree, crit[i - 1].t, std::nullopt, static_cast<int>(mu_inf)});
            }
        }
    }
    return FiberDiagram(line, std::move(points));
}

FiberDiagram transfer(const FiberDiagram& diagram, const Line& to,
                      const ClosedCriticalSet& closure) {
    const Line& from = diagram.line();
    if (!equivalent(closure, from, to)) {
        throw LinesNotEquivalent("lines " + from.to_string() + " and " + to.to_string() +
                                 " are not equivalent");
    }
    auto move_parameter = [&](const Rational& s) {
        auto b = bar(closure, from.at(s));
        if (!b) {
            throw std::invalid_argument("diagram coordinate " + to_string(s) +
                                        " lies below every critical value");
        }
        return push(to, *b).t;
    };
    std::vector<DiagramPoint> moved;
    moved.reserve(diagram.points().size());
    for (const auto& p : diagram.points()) {
        DiagramPoint q = p;
        q.birth = move_parameter(p.birth);
        if (p.death) q.death = move_parameter(*p.death);
        moved.push_back(std::move(q));
    }
    return FiberDiagram(to, std::move(moved));
}

}  // namespace morsefiber
