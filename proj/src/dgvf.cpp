#include "morsefiber/dgvf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace morsefiber {

GradientVectorField::GradientVectorField(std::vector<VectorPair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

GradientVectorField resolve_pairs(const SimplicialComplex& complex,
                                  const std::vector<std::pair<Simplex, Simplex>>& pairs) {
    std::vector<VectorPair> out;
    out.reserve(pairs.size());
    for (const auto& [sigma, tau] : pairs) {
        auto s = complex.find(sigma);
        if (!s) throw UnknownSimplex("unknown simplex " + sigma.to_string());
        auto t = complex.find(tau);
        if (!t) throw UnknownSimplex("unknown simplex " + tau.to_string());
        out.push_back({*s, *t});
    }
    return GradientVectorField(std::move(out));
}

std::vector<MatchingViolation> check_matching(const SimplicialComplex& complex,
                                              const GradientVectorField& field) {
    std::vector<MatchingViolation> out;
    std::vector<int> uses(complex.size(), 0);
    for (const auto& [s, t] : field.pairs()) {
        const auto& facets = complex.facets(t);
        if (std::find(facets.begin(), facets.end(), s) == facets.end()) {
            out.push_back({MatchingViolation::Kind::NotAFacet, t,
                           complex.simplex(s).to_string() + " is not a facet of " +
                               complex.simplex(t).to_string()});
        }
        ++uses[s];
        ++uses[t];
    }
    for (SimplexId id = 0; id < complex.size(); ++id) {
        if (uses[id] > 1) {
            out.push_back({MatchingViolation::Kind::MatchedTwice, id,
                           complex.simplex(id).to_string() + " occurs in " +
                               std::to_string(uses[id]) + " pairs"});
        }
    }
    return out;
}

bool check_acyclic(const SimplicialComplex& complex, const GradientVectorField& field) {
    constexpr SimplexId none = static_cast<SimplexId>(-1);
    std::vector<SimplexId> up(complex.size(), none);
    for (const auto& [s, t] : field.pairs()) up[s] = t;

    // V-path arcs: σ → σ' whenever (σ, β) ∈ V, σ' a facet of β, σ' ≠ σ.
    // Arcs keep the dimension, so one search over all nodes covers every dimension.
    enum : char { white, grey, black };
    std::vector<char> color(complex.size(), white);
    std::vector<std::pair<SimplexId, std::size_t>> stack;
    for (SimplexId root = 0; root < complex.size(); ++root) {
        if (color[root] != white || up[root] == none) continue;
        stack.push_back({root, 0});
        color[root] = grey;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const auto& facets = complex.facets(up[node]);
            if (next == facets.size()) {
                color[node] = black;
                stack.pop_back();
                continue;
            }
            const SimplexId succ = facets[next++];
            if (succ == node || up[succ] == none) continue;
            if (color[succ] == grey) return false;
            if (color[succ] == white) {
                color[succ] = grey;
                stack.push_back({succ, 0});
            }
        }
    }
    return true;
}

bool check_consistent(const OneCriticalFiltration& filtration, const GradientVectorField& field) {
    return std::all_of(field.pairs().begin(), field.pairs().end(), [&](const VectorPair& p) {
        return filtration.grade(p.facet) == filtration.grade(p.cofacet);
    });
}

GradientVectorField build_consistent_dgvf(const OneCriticalFiltration& filtration) {
    const auto& k = filtration.complex();
    std::map<Grade, std::vector<SimplexId>> groups;
    for (SimplexId id = 0; id < k.size(); ++id) groups[filtration.grade(id)].push_back(id);

    std::vector<char> alive(k.size(), 0);
    std::vector<VectorPair> pairs;
    for (auto& [grade, members] : groups) {
        // Cofacets of a group member that lie in K^grade share its grade.
        for (SimplexId id : members) alive[id] = 1;
        std::size_t remaining = members.size();
        auto live_cofacets = [&](SimplexId id) {
            std::size_t count = 0;
            SimplexId last = 0;
            for (SimplexId c : k.cofacets(id)) {
                if (alive[c]) {
                    ++count;
                    last = c;
                }
            }
            return std::pair{count, last};
        };

        while (remaining > 0) {
            bool collapsed = false;
            for (SimplexId id : members) {
                if (!alive[id]) continue;
                auto [count, tau] = live_cofacets(id);
                if (count != 1 || live_cofacets(tau).first != 0) continue;
                pairs.push_back({id, tau});
                alive[id] = alive[tau] = 0;
                remaining -= 2;
                collapsed = true;
            }
            if (collapsed) continue;
            // Stuck: remove the last (highest-dimensional) live cell as critical.
            auto it = std::find_if(members.rbegin(), members.rend(),
                                   [&](SimplexId id) { return alive[id] != 0; });
            alive[*it] = 0;
            --remaining;
        }
    }
    return GradientVectorField(std::move(pairs));
}

CriticalSet critical_cells(const SimplicialComplex& complex, const GradientVectorField& field) {
    std::vector<char> paired(complex.size(), 0);
    for (const auto& [s, t] : field.pairs()) paired[s] = paired[t] = 1;
    CriticalSet out;
    for (SimplexId id = 0; id < complex.size(); ++id) {
        if (paired[id]) continue;
        out.cells.push_back(id);
        out.by_degree[complex.dim(id)].push_back(id);
    }
    return out;
}

CollapseResult collapse_toward(const OneCriticalFiltration& filtration,
                               const GradientVectorField& field, const Grade& u,
                               const Grade& target) {
    if (!leq(target, u)) {
        throw std::invalid_argument("collapse target " + target.to_string() + " is not below " +
                                    u.to_string());
    }
    const auto& k = filtration.complex();
    std::vector<char> present(k.size(), 0);
    for (SimplexId id : sublevel_complex(filtration, u)) present[id] = 1;
    auto to_remove = [&](SimplexId id) {
        return present[id] && !leq(filtration.grade(id), target);
    };
    auto cofacet_count = [&](SimplexId id) {
        return std::count_if(k.cofacets(id).begin(), k.cofacets(id).end(),
                             [&](SimplexId c) { return present[c] != 0; });
    };

    std::size_t pending = 0;
    for (SimplexId id = 0; id < k.size(); ++id) pending += to_remove(id) ? 1 : 0;

    CollapseResult result;
    while (pending > 0) {
        bool progressed = false;
        for (const VectorPair& p : field.pairs()) {
            if (!to_remove(p.facet) || !to_remove(p.cofacet)) continue;
            // σ is a free facet of τ: τ is its only coface in the current complex.
            if (cofacet_count(p.facet) != 1 || cofacet_count(p.cofacet) != 0) continue;
            present[p.facet] = present[p.cofacet] = 0;
            pending -= 2;
            result.steps.push_back(p);
            progressed = true;
            break;
        }
        if (!progressed) {
            throw CollapseStuck("no free pair left with " + std::to_string(pending) +
                                " cells between " + u.to_string() + " and " + target.to_string());
        }
    }
    for (SimplexId id = 0; id < k.size(); ++id) {
        if (present[id]) result.complex.push_back(id);
    }
    return result;
}

namespace {

Simplex parse_vertex_list(std::string_view text, std::size_t line_no) {
    std::vector<Vertex> vertices;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        Vertex v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw FiltrationError(FiltrationError::Kind::Syntax, "bad vertex id '" + token + "'",
                                  line_no);
        }
        vertices.push_back(v);
    }
    try {
        return Simplex(std::move(vertices));
    } catch (const std::invalid_argument& e) {
        throw FiltrationError(FiltrationError::Kind::Syntax, e.what(), line_no);
    }
}

}  // namespace

std::vector<std::pair<Simplex, Simplex>> parse_dgvf(std::string_view text) {
    std::vector<std::pair<Simplex, Simplex>> out;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto semi = line.find(';');
        if (semi == std::string::npos) {
            throw FiltrationError(FiltrationError::Kind::Syntax, "missing ';'", line_no);
        }
        out.emplace_back(parse_vertex_list(std::string_view(line).substr(0, semi), line_no),
                         parse_vertex_list(std::string_view(line).substr(semi + 1), line_no));
    }
    return out;
}

std::string serialize_dgvf(const SimplicialComplex& complex, const GradientVectorField& field) {
    std::ostringstream out;
    for (const auto& [s, t] : field.pairs()) {
        for (Vertex v : complex.simplex(s).vertices()) out << v << ' ';
        out << ';';
        for (Vertex v : complex.simplex(t).vertices()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace morsefiber
