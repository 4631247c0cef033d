#pragma once

#include "morsefiber/line.hpp"

#include <optional>
#include <string>
#include <vector>

namespace morsefiber {

/// One point of a line-fibered persistence diagram; death == nullopt means ∞.
struct DiagramPoint {
    int degree = 0;
    Rational birth;
    std::optional<Rational> death;
    int multiplicity = 1;

    bool operator==(const DiagramPoint&) const = default;
};

/// Persistence diagram of the restriction to one line, in that line's parameter.
class FiberDiagram {
public:
    explicit FiberDiagram(Line line, std::vector<DiagramPoint> points = {});

    const Line& line() const { return line_; }
    /// Canonical order: degree, birth, death (∞ last). Equal coordinates merged.
    const std::vector<DiagramPoint>& points() const { return points_; }

    Grade birth_point(const DiagramPoint& p) const { return line_.at(p.birth); }
    std::optional<Grade> death_point(const DiagramPoint& p) const;

    /// Only the points of the given degrees.
    FiberDiagram restricted_to(const std::vector<int>& degrees) const;

    bool operator==(const FiberDiagram&) const = default;
    std::string to_string() const;

private:
    Line line_;
    std::vector<DiagramPoint> points_;
};

}  // namespace morsefiber
