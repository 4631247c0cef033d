#include "morsefiber/http_api.hpp"

#include <httplib.h>

namespace morsefiber {

namespace {

ApiResponse error(int status, std::string kind, std::string detail) {
    return {status, Json{{"error", std::move(kind)}, {"detail", std::move(detail)}}};
}

Json grades_to_json(const std::vector<Grade>& grades) {
    Json out = Json::array();
    for (const auto& g : grades) out.push_back(to_json(g));
    return out;
}

}  // namespace

ApiResponse FiberApi::summary() const {
    return {200, Json{{"n", service_.filtration().parameters()},
                      {"simplexCount", service_.filtration().size()},
                      {"criticalCount", service_.critical_cell_count()},
                      {"cBarSize", service_.closure().size()}}};
}

ApiResponse FiberApi::critical_values() const {
    return {200, Json{{"C", grades_to_json(service_.closure().base())},
                      {"Cbar", grades_to_json(service_.closure().closed())}}};
}

ApiResponse FiberApi::fiber(const std::string& body) {
    Json request;
    try {
        request = Json::parse(body);
    } catch (const Json::parse_error& e) {
        return error(400, "malformed JSON", e.what());
    }

    std::optional<Line> line;
    std::vector<int> degrees = service_.degrees();
    try {
        if (!request.is_object()) throw std::invalid_argument("request body must be an object");
        line = line_from_json(request);
        if (line->dim() != service_.filtration().parameters()) {
            throw DimensionMismatch(line->dim(), service_.filtration().parameters());
        }
        if (request.contains("degrees")) degrees = request.at("degrees").get<std::vector<int>>();
    } catch (const NonPositiveSlope& e) {
        return error(422, "non-positive slope", e.what());
    } catch (const std::exception& e) {
        return error(400, "malformed line", e.what());
    }

    auto result = service_.query(*line, degrees);
    return {200, Json{{"classId", result.class_id},
                      {"cacheStatus", result.status == CacheStatus::Hit ? "hit" : "miss"},
                      {"line", to_json(*line)},
                      {"points", points_to_json(result.diagram)},
                      {"pushedCriticals",
                       pushed_criticals_to_json(pushed_criticals(service_.closure(), *line))},
                      {"micros", result.micros}}};
}

ApiResponse FiberApi::classes() const {
    Json out = Json::array();
    for (const auto& c : service_.classes()) {
        out.push_back(Json{{"classId", c.class_id},
                           {"representative", to_json(c.representative)},
                           {"hitCount", c.hit_count}});
    }
    return {200, out};
}

void FiberApi::mount(httplib::Server& server, const std::string& static_dir) {
    auto reply = [](httplib::Response& res, const ApiResponse& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    server.Get("/api/v1/summary",
               [this, reply](const httplib::Request&, httplib::Response& res) { reply(res, summary()); });
    server.Get("/api/v1/critical-values", [this, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, critical_values());
    });
    server.Post("/api/v1/fiber", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, fiber(req.body));
    });
    server.Get("/api/v1/classes",
               [this, reply](const httplib::Request&, httplib::Response& res) { reply(res, classes()); });
    if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace morsefiber
