#pragma once

#include "morsefiber/filtration.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morsefiber {

/// Pair (facet, cofacet) of simplex ids.
struct VectorPair {
    SimplexId facet;
    SimplexId cofacet;
    bool operator==(const VectorPair&) const = default;
    auto operator<=>(const VectorPair&) const = default;
};

/// A set of facet/cofacet pairs over a fixed complex. Whether it is a valid
/// matching, acyclic, or consistent is checked separately.
class GradientVectorField {
public:
    GradientVectorField() = default;
    explicit GradientVectorField(std::vector<VectorPair> pairs);

    const std::vector<VectorPair>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

private:
    std::vector<VectorPair> pairs_;
};

class UnknownSimplex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by collapse_toward when no elementary collapse applies before the
/// target is reached.
class CollapseStuck : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resolves vertex-list pairs against `complex`; throws UnknownSimplex.
GradientVectorField resolve_pairs(const SimplicialComplex& complex,
                                  const std::vector<std::pair<Simplex, Simplex>>& pairs);

struct MatchingViolation {
    enum class Kind { NotAFacet, MatchedTwice };
    Kind kind;
    SimplexId simplex;  // the cofacet for NotAFacet, the repeated simplex otherwise
    std::string message;
};

std::vector<MatchingViolation> check_matching(const SimplicialComplex& complex,
                                              const GradientVectorField& field);

/// No non-trivial closed V-path, checked per dimension by depth-first search.
bool check_acyclic(const SimplicialComplex& complex, const GradientVectorField& field);

/// Every pair enters the filtration at one grade.
bool check_consistent(const OneCriticalFiltration& filtration, const GradientVectorField& field);

/// Greedy collapse matching inside each equal-grade group. When no free pair
/// remains, a top-dimensional cell of the group is declared critical and
/// removed, and collapsing resumes.
GradientVectorField build_consistent_dgvf(const OneCriticalFiltration& filtration);

struct CriticalSet {
    std::vector<SimplexId> cells;
    std::map<int, std::vector<SimplexId>> by_degree;
};

CriticalSet critical_cells(const SimplicialComplex& complex, const GradientVectorField& field);

struct CollapseResult {
    Subcomplex complex;
    /// Elementary collapses in the order they were performed.
    std::vector<VectorPair> steps;
};

/// Collapses K^u down to K^target using only pairs of `field`.
CollapseResult collapse_toward(const OneCriticalFiltration& filtration,
                               const GradientVectorField& field, const Grade& u,
                               const Grade& target);

/// `.dgvf` text: one "σ-vertices ; τ-vertices" pair per line.
std::vector<std::pair<Simplex, Simplex>> parse_dgvf(std::string_view text);
std::string serialize_dgvf(const SimplicialComplex& complex, const GradientVectorField& field);

}  // namespace morsefiber
