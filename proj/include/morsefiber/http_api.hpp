#pragma once

#include "morsefiber/query_cache.hpp"

#include <string>

namespace httplib {
class Server;
}

namespace morsefiber {

struct ApiResponse {
    int status = 200;
    Json body;
};

/// JSON endpoints of the explorer service, independent of the transport.
class FiberApi {
public:
    explicit FiberApi(FiberService& service) : service_(service) {}

    ApiResponse summary() const;
    ApiResponse critical_values() const;
    /// Body: {"base": [...], "dir": [...], "degrees": [...]}; degrees optional.
    ApiResponse fiber(const std::string& body);
    ApiResponse classes() const;

    /// Registers the /api/v1 routes. `static_dir`, when nonempty, is mounted at /.
    void mount(httplib::Server& server, const std::string& static_dir = {});

private:
    FiberService& service_;
};

}  // namespace morsefiber
