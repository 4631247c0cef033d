#include "morsefiber/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace morsefiber {

namespace {

bool point_key_less(const DiagramPoint& a, const DiagramPoint& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
    return a.death && *a.death < *b.death;
}

bool same_key(const DiagramPoint& a, const DiagramPoint& b) {
    return a.degree == b.degree && a.birth == b.birth && a.death == b.death;
}

}  // namespace

FiberDiagram::FiberDiagram(Line line, std::vector<DiagramPoint> points)
    : line_(std::move(line)) {
    std::sort(points.begin(), points.end(), point_key_less);
    for (auto& p : points) {
        if (p.multiplicity <= 0) continue;
        if (!points_.empty() && same_key(points_.back(), p)) {
            points_.back().multiplicity += p.multiplicity;
        } else {
            points_.push_back(std::move(p));
        }
    }
}

std::optional<Grade> FiberDiagram::death_point(const DiagramPoint& p) const {
    if (!p.death) return std::nullopt;
    return line_.at(*p.death);
}

FiberDiagram FiberDiagram::restricted_to(const std::vector<int>& degrees) const {
    std::vector<DiagramPoint> kept;
    for (const auto& p : points_) {
        if (std::find(degrees.begin(), degrees.end(), p.degree) != degrees.end()) kept.push_back(p);
    }
    return FiberDiagram(line_, std::move(kept));
}

std::string FiberDiagram::to_string() const {
    std::ostringstream out;
    out << line_.to_string() << "\n";
    for (const auto& p : points_) {
        out << "  H" << p.degree << " (" << morsefiber::to_string(p.birth) << ", "
            << (p.death ? morsefiber::to_string(*p.death) : std::string("inf")) << ") x"
            << p.multiplicity << "\n";
    }
    return out.str();
}

}  // namespace morsefiber
