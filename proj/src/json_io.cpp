#include "morsefiber/json_io.hpp"

#include <stdexcept>

namespace morsefiber {

Json to_json(const Grade& g) {
    Json out = Json::array();
    for (const Rational& c : g.coords()) out.push_back(to_string(c));
    return out;
}

Grade grade_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty array of rationals");
    std::vector<Rational> coords;
    for (const auto& c : j) {
        if (c.is_string()) {
            coords.push_back(parse_rational(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            coords.emplace_back(c.get<long long>());
        } else {
            throw std::invalid_argument("rationals must be strings or integers, got " + c.dump());
        }
    }
    return Grade(std::move(coords));
}

Json to_json(const Line& line) {
    return Json{{"base", to_json(line.base())}, {"dir", to_json(line.direction())}};
}

Line line_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("dir")) {
        throw std::invalid_argument("line needs 'base' and 'dir'");
    }
    return Line(grade_from_json(j.at("base")), grade_from_json(j.at("dir")));
}

Json point_to_json(const FiberDiagram& diagram, const DiagramPoint& p) {
    Json out{{"dim", p.degree},
             {"birthT", to_string(p.birth)},
             {"birthPoint", to_json(diagram.birth_point(p))},
             {"multiplicity", p.multiplicity}};
    if (p.death) {
        out["deathT"] = to_string(*p.death);
        out["deathPoint"] = to_json(*diagram.death_point(p));
    } else {
        out["deathT"] = "inf";
        out["deathPoint"] = "inf";
    }
    return out;
}

Json points_to_json(const FiberDiagram& diagram) {
    Json out = Json::array();
    for (const auto& p : diagram.points()) out.push_back(point_to_json(diagram, p));
    return out;
}

FiberDiagram diagram_from_json(const Line& line, const Json& points) {
    std::vector<DiagramPoint> out;
    for (const auto& j : points) {
        DiagramPoint p;
        p.degree = j.at("dim").get<int>();
        p.birth = parse_rational(j.at("birthT").get<std::string>());
        const auto death = j.at("deathT").get<std::string>();
        if (death != "inf") p.death = parse_rational(death);
        p.multiplicity = j.at("multiplicity").get<int>();
        out.push_back(std::move(p));
    }
    return FiberDiagram(line, std::move(out));
}

Json to_json(const LineSignature& sig) {
    Json out = Json::array();
    for (const auto& e : sig.entries) out.push_back(Json{{"value", to_json(e.value)}, {"face", e.face}});
    return out;
}

LineSignature signature_from_json(const Json& j) {
    LineSignature sig;
    for (const auto& e : j) {
        sig.entries.push_back({grade_from_json(e.at("value")), e.at("face").get<Face>()});
    }
    return sig;
}

Json pushed_criticals_to_json(const std::vector<PushedCritical>& crit) {
    Json out = Json::array();
    for (const auto& c : crit) {
        out.push_back(Json{{"t", to_string(c.t)}, {"point", to_json(c.point)}, {"bar", to_json(c.bar)}});
    }
    return out;
}

}  // namespace morsefiber
