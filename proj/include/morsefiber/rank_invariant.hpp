#pragma once

#include "morsefiber/dgvf.hpp"
#include "morsefiber/filtration.hpp"

#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace morsefiber {

inline constexpr std::size_t kDefaultClosureCap = 50'000;

class ClosureTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyCriticalSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closure cap, overridable through MF_CBAR_CAP.
std::size_t closure_cap_from_env();

/// C and its closure C̄ under least upper bounds. Immutable.
class ClosedCriticalSet {
public:
    ClosedCriticalSet() = default;
    ClosedCriticalSet(std::vector<Grade> base, std::vector<Grade> closed);

    /// C, sorted lexicographically and deduplicated.
    const std::vector<Grade>& base() const { return base_; }
    /// C̄, sorted lexicographically.
    const std::vector<Grade>& closed() const { return closed_; }
    std::size_t size() const { return closed_.size(); }
    bool empty() const { return closed_.empty(); }
    bool contains(const Grade& u) const;
    /// Sorted distinct values of coordinate `axis` over C̄.
    const std::vector<Rational>& axis_values(std::size_t axis) const { return axes_[axis]; }

private:
    std::vector<Grade> base_;
    std::vector<Grade> closed_;
    std::vector<std::vector<Rational>> axes_;
};

/// Grades of the critical cells of `field`, deduplicated and sorted.
std::vector<Grade> critical_values(const OneCriticalFiltration& filtration,
                                   const GradientVectorField& field);

/// Fixpoint of pairwise lub. Throws EmptyCriticalSet or ClosureTooLarge.
ClosedCriticalSet lub_closure(const std::vector<Grade>& critical,
                              std::size_t cap = kDefaultClosureCap);

/// max{c ∈ C̄ : c ⪯ u}, or nullopt when nothing in C̄ lies below u.
std::optional<Grade> bar(const ClosedCriticalSet& closure, const Grade& u);

/// Rank invariant ρ_i(u, v) evaluated at bar values, memoized on
/// (i, bar(u), bar(v)). The filtration must outlive this object.
class RankInvariant {
public:
    RankInvariant(const OneCriticalFiltration& filtration, const GradientVectorField& field,
                  std::size_t cap = kDefaultClosureCap);
    RankInvariant(const OneCriticalFiltration& filtration, ClosedCriticalSet closure);

    RankInvariant(const RankInvariant&) = delete;
    RankInvariant& operator=(const RankInvariant&) = delete;

    const OneCriticalFiltration& filtration() const { return filtration_; }
    const ClosedCriticalSet& closure() const { return closure_; }

    /// Throws std::invalid_argument unless u ⪯ v. Safe to call concurrently.
    std::size_t rank(int degree, const Grade& u, const Grade& v) const;
    /// Same value without touching the memo.
    std::size_t rank_unmemoized(int degree, const Grade& u, const Grade& v) const;
    std::size_t memo_size() const;

private:
    using Key = std::tuple<int, Grade, Grade>;

    std::size_t rank_at_bars(int degree, const Grade& ubar, const Grade& vbar) const;

    const OneCriticalFiltration& filtration_;
    ClosedCriticalSet closure_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::map<Key, std::size_t> memo_;
};

}  // namespace morsefiber
