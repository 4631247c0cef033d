#include "morsefiber/rank_invariant.hpp"

#include "morsefiber/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <string>

namespace morsefiber {

std::size_t closure_cap_from_env() {
    const char* raw = std::getenv("MF_CBAR_CAP");
    if (!raw || !*raw) return kDefaultClosureCap;
    try {
        const long long value = std::stoll(raw);
        if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("MF_CBAR_CAP must be a positive integer, got '") + raw +
                                "'");
}

ClosedCriticalSet::ClosedCriticalSet(std::vector<Grade> base, std::vector<Grade> closed)
    : base_(std::move(base)), closed_(std::move(closed)) {
    std::sort(base_.begin(), base_.end());
    base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
    std::sort(closed_.begin(), closed_.end());
    closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
    if (closed_.empty()) return;
    axes_.resize(closed_.front().dim());
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        for (const Grade& c : closed_) axes_[i].push_back(c[i]);
        std::sort(axes_[i].begin(), axes_[i].end());
        axes_[i].erase(std::unique(axes_[i].begin(), axes_[i].end()), axes_[i].end());
    }
}

bool ClosedCriticalSet::contains(const Grade& u) const {
    return std::binary_search(closed_.begin(), closed_.end(), u);
}

std::vector<Grade> critical_values(const OneCriticalFiltration& filtration,
                                   const GradientVectorField& field) {
    std::vector<Grade> out;
    for (SimplexId id : critical_cells(filtration.complex(), field).cells) {
        out.push_back(filtration.grade(id));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ClosedCriticalSet lub_closure(const std::vector<Grade>& critical, std::size_t cap) {
    if (critical.empty()) throw EmptyCriticalSet("cannot close an empty critical set");
    std::set<Grade> closed(critical.begin(), critical.end());
    if (closed.size() > cap) {
        throw ClosureTooLarge("lub-closure exceeds " + std::to_string(cap) +
                              " grades (raise MF_CBAR_CAP to allow more)");
    }
    std::vector<Grade> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<Grade> next;
        const std::vector<Grade> snapshot(closed.begin(), closed.end());
        for (const Grade& a : frontier) {
            for (const Grade& b : snapshot) {
                auto [it, inserted] = closed.insert(lub(a, b));
                if (!inserted) continue;
                next.push_back(*it);
                if (closed.size() > cap) {
                    throw ClosureTooLarge("lub-closure exceeds " + std::to_string(cap) +
                                          " grades (raise MF_CBAR_CAP to allow more)");
                }
            }
        }
        frontier = std::move(next);
    }
    return ClosedCriticalSet(critical, std::vector<Grade>(closed.begin(), closed.end()));
}

std::optional<Grade> bar(const ClosedCriticalSet& closure, const Grade& u) {
    if (closure.empty()) return std::nullopt;
    if (u.dim() != closure.closed().front().dim()) {
        throw DimensionMismatch(u.dim(), closure.closed().front().dim());
    }
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u[i] < closure.axis_values(i).front()) return std::nullopt;
    }
    // C̄ is lub-closed, so the lub of everything below u is its maximum.
    std::optional<Grade> best;
    for (const Grade& c : closure.closed()) {
        if (!leq(c, u)) continue;
        best = best ? lub(*best, c) : c;
    }
    return best;
}

RankInvariant::RankInvariant(const OneCriticalFiltration& filtration,
                             const GradientVectorField& field, std::size_t cap)
    : filtration_(filtration) {
    auto critical = critical_values(filtration, field);
    if (critical.empty()) {
        if (filtration.size() != 0) {
            throw EmptyCriticalSet("nonempty complex without critical cells; the field is not a "
                                   "consistent gradient");
        }
        return;
    }
    closure_ = lub_closure(critical, cap);
}

RankInvariant::RankInvariant(const OneCriticalFiltration& filtration, ClosedCriticalSet closure)
    : filtration_(filtration), closure_(std::move(closure)) {}

std::size_t RankInvariant::rank_at_bars(int degree, const Grade& ubar, const Grade& vbar) const {
    return rank_inclusion(filtration_.complex(), sublevel_complex(filtration_, ubar),
                          sublevel_complex(filtration_, vbar), degree);
}

std::size_t RankInvariant::rank_unmemoized(int degree, const Grade& u, const Grade& v) const {
    if (!leq(u, v)) {
        throw std::invalid_argument("rank needs u ⪯ v, got " + u.to_string() + " and " +
                                    v.to_string());
    }
    auto ubar = bar(closure_, u);
    if (!ubar) return 0;
    return rank_at_bars(degree, *ubar, *bar(closure_, v));
}

std::size_t RankInvariant::rank(int degree, const Grade& u, const Grade& v) const {
    if (!leq(u, v)) {
        throw std::invalid_argument("rank needs u ⪯ v, got " + u.to_string() + " and " +
                                    v.to_string());
    }
    auto ubar = bar(closure_, u);
    if (!ubar) return 0;
    Key key{degree, std::move(*ubar), *bar(closure_, v)};
    {
        std::shared_lock lock(memo_mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const auto value = rank_at_bars(degree, std::get<1>(key), std::get<2>(key));
    std::unique_lock lock(memo_mutex_);
    return memo_.try_emplace(std::move(key), value).first->second;
}

std::size_t RankInvariant::memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
}

}  // namespace morsefiber
