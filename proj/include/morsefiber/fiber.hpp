#pragma once

#include "morsefiber/diagram.hpp"
#include "morsefiber/line.hpp"
#include "morsefiber/rank_invariant.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace morsefiber {

/// Face of ∂S₊(c) hit by push(L, c), for every c ∈ C̄ in C̄'s order.
struct LineSignature {
    struct Entry {
        Grade value;
        Face face;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    bool operator==(const LineSignature&) const = default;
    /// FNV-1a over the canonical text encoding.
    std::uint64_t hash() const;
    /// hash() as 16 lowercase hex digits.
    std::string class_id() const;
};

class LinesNotEquivalent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

LineSignature signature(const ClosedCriticalSet& closure, const Line& line);
bool equivalent(const ClosedCriticalSet& closure, const Line& a, const Line& b);

/// max{u' ∈ C̄ : u ⪯ u', S_L(u) ∩ S_L(u') ≠ ∅} by explicit face intersection.
/// Throws std::invalid_argument when u ∉ C̄.
Grade double_bar(const ClosedCriticalSet& closure, const Line& line, const Grade& u);

struct PushedCritical {
    Grade point;
    Rational t;
    Grade bar;
};

/// push_L(C̄) deduplicated and strictly increasing along the line.
std::vector<PushedCritical> pushed_criticals(const ClosedCriticalSet& closure, const Line& line);

/// All homology degrees the filtration can carry: 0..max simplex dimension.
std::vector<int> all_degrees(const OneCriticalFiltration& filtration);

/// Closed-form diagram from ranks at consecutive pushed critical values.
FiberDiagram fiber_diagram(const RankInvariant& rank, const Line& line,
                           const std::vector<int>& degrees);

/// Moves a diagram onto a line equivalent to the one it was computed on.
/// Throws LinesNotEquivalent.
FiberDiagram transfer(const FiberDiagram& diagram, const Line& to,
                      const ClosedCriticalSet& closure);

}  // namespace morsefiber
