#include "morsefiber/cli.hpp"

#include "morsefiber/dgvf.hpp"
#include "morsefiber/fiber.hpp"
#include "morsefiber/homology.hpp"
#include "morsefiber/http_api.hpp"
#include "morsefiber/json_io.hpp"
#include "morsefiber/query_cache.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace morsefiber {

namespace {

/// Bad flag values: exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input data: exit code 1.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string dgvf_path;
    std::string format = "json";
    std::string u, v, base, dir;
    int dim = 0;
    std::vector<int> dims;
    bool oracle = false;
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string seeds;
    std::string snapshot;
    std::string static_dir;
};

struct Dataset {
    OneCriticalFiltration filtration;
    GradientVectorField field;
};

Dataset load_dataset(const Options& opt) {
    Dataset d{load_filtration(opt.input), {}};
    if (opt.dgvf_path.empty()) {
        d.field = build_consistent_dgvf(d.filtration);
        return d;
    }
    d.field = resolve_pairs(d.filtration.complex(), parse_dgvf(read_text_file(opt.dgvf_path)));
    const auto violations = check_matching(d.filtration.complex(), d.field);
    if (!violations.empty()) throw DataError("invalid matching: " + violations.front().message);
    if (!check_acyclic(d.filtration.complex(), d.field)) {
        throw DataError("vector field has a closed V-path");
    }
    if (!check_consistent(d.filtration, d.field)) {
        throw DataError("vector field pairs simplices of different grades");
    }
    return d;
}

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Grade flag_grade(const std::string& text, const std::string& name, std::size_t n) {
    return as_usage([&] {
        Grade g = Grade::parse(text);
        if (g.dim() != n) {
            throw std::invalid_argument("--" + name + " has " + std::to_string(g.dim()) +
                                        " coordinates, the filtration has " + std::to_string(n));
        }
        return g;
    });
}

Line flag_line(const Options& opt, std::size_t n) {
    return as_usage([&] { return Line(flag_grade(opt.base, "base", n), flag_grade(opt.dir, "dir", n)); });
}

void emit(std::ostream& out, const Options& opt, const Json& j, const std::string& text) {
    if (opt.format == "text") {
        out << text;
    } else {
        out << j.dump(2) << "\n";
    }
}

Json simplex_json(const Simplex& s) { return Json(s.vertices()); }

int cmd_validate(const Options& opt, std::ostream& out) {
    auto filtration = load_filtration(opt.input);
    Json report{{"n", filtration.parameters()}, {"simplexCount", filtration.size()}};
    std::ostringstream text;
    text << "filtration ok: " << filtration.size() << " simplices, n=" << filtration.parameters()
         << "\n";
    bool ok = true;
    if (!opt.dgvf_path.empty()) {
        auto field =
            resolve_pairs(filtration.complex(), parse_dgvf(read_text_file(opt.dgvf_path)));
        Json violations = Json::array();
        for (const auto& v : check_matching(filtration.complex(), field)) {
            violations.push_back(v.message);
            text << "matching violation: " << v.message << "\n";
        }
        const bool matching = violations.empty();
        const bool acyclic = matching && check_acyclic(filtration.complex(), field);
        const bool consistent = check_consistent(filtration, field);
        report["dgvf"] = Json{{"pairs", field.size()},
                              {"matchingViolations", violations},
                              {"acyclic", acyclic},
                              {"consistent", consistent}};
        text << "dgvf: " << field.size() << " pairs, acyclic=" << (acyclic ? "yes" : "no")
             << ", consistent=" << (consistent ? "yes" : "no") << "\n";
        ok = matching && acyclic && consistent;
    }
    report["valid"] = ok;
    emit(out, opt, report, text.str());
    return ok ? kExitOk : kExitValidation;
}

int cmd_dgvf(const Options& opt, std::ostream& out) {
    auto filtration = load_filtration(opt.input);
    out << serialize_dgvf(filtration.complex(), build_consistent_dgvf(filtration));
    return kExitOk;
}

int cmd_critical(const Options& opt, std::ostream& out) {
    auto d = load_dataset(opt);
    RankInvariant rank(d.filtration, d.field, closure_cap_from_env());
    Json cells = Json::array();
    std::ostringstream text;
    for (SimplexId id : critical_cells(d.filtration.complex(), d.field).cells) {
        cells.push_back(Json{{"simplex", simplex_json(d.filtration.complex().simplex(id))},
                             {"grade", to_json(d.filtration.grade(id))}});
        text << "critical " << d.filtration.complex().simplex(id).to_string() << " at "
             << d.filtration.grade(id).to_string() << "\n";
    }
    Json c = Json::array(), cbar = Json::array();
    for (const auto& g : rank.closure().base()) {
        c.push_back(to_json(g));
        text << "C " << g.to_string() << "\n";
    }
    for (const auto& g : rank.closure().closed()) {
        cbar.push_back(to_json(g));
        text << "Cbar " << g.to_string() << "\n";
    }
    emit(out, opt, Json{{"criticalCells", cells}, {"C", c}, {"Cbar", cbar}}, text.str());
    return kExitOk;
}

int cmd_rank(const Options& opt, std::ostream& out) {
    auto d = load_dataset(opt);
    const auto n = d.filtration.parameters();
    const Grade u = flag_grade(opt.u, "u", n);
    const Grade v = flag_grade(opt.v, "v", n);
    if (!leq(u, v)) throw UsageError("--u must be below --v in every coordinate");
    RankInvariant rank(d.filtration, d.field, closure_cap_from_env());
    const auto value = rank.rank(opt.dim, u, v);
    const auto ubar = bar(rank.closure(), u);
    Json j{{"dim", opt.dim}, {"u", to_json(u)}, {"v", to_json(v)}, {"rank", value}};
    j["uBar"] = ubar ? to_json(*ubar) : Json(nullptr);
    j["vBar"] = ubar ? to_json(*bar(rank.closure(), v)) : Json(nullptr);
    emit(out, opt, j, std::to_string(value) + "\n");
    return kExitOk;
}

int cmd_fiber(const Options& opt, std::ostream& out, std::ostream& err) {
    auto d = load_dataset(opt);
    const Line line = flag_line(opt, d.filtration.parameters());
    RankInvariant rank(d.filtration, d.field, closure_cap_from_env());
    const auto degrees = opt.dims.empty() ? all_degrees(d.filtration) : opt.dims;
    const auto dgm = fiber_diagram(rank, line, degrees);
    Json j{{"line", to_json(line)},
           {"classId", signature(rank.closure(), line).class_id()},
           {"points", points_to_json(dgm)},
           {"pushedCriticals", pushed_criticals_to_json(pushed_criticals(rank.closure(), line))}};
    if (opt.oracle) {
        const auto reference = line_persistence_reduction(d.filtration, line, degrees);
        if (reference != dgm) {
            err << "fiber diagram disagrees with matrix reduction\n"
                << "closed form:\n"
                << dgm.to_string() << "reduction:\n"
                << reference.to_string();
            return kExitValidation;
        }
        j["oracle"] = "agree";
    }
    emit(out, opt, j, dgm.to_string());
    return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    auto d = load_dataset(opt);
    const Line line = flag_line(opt, d.filtration.parameters());
    RankInvariant rank(d.filtration, d.field, closure_cap_from_env());
    const auto sig = signature(rank.closure(), line);
    std::ostringstream text;
    text << sig.class_id() << "\n";
    emit(out, opt, Json{{"classId", sig.class_id()}, {"signature", to_json(sig)}}, text.str());
    return kExitOk;
}

int cmd_serve(const Options& opt, std::ostream& out, std::ostream& err) {
    auto d = load_dataset(opt);
    FiberService service(std::move(d.filtration), std::move(d.field), closure_cap_from_env());
    if (!opt.snapshot.empty() && std::filesystem::exists(opt.snapshot)) {
        const auto added = service.restore(Json::parse(read_text_file(opt.snapshot)));
        out << "restored " << added << " classes from " << opt.snapshot << "\n";
    }
    if (!opt.seeds.empty()) {
        const auto stats = service.precompute(read_seed_file(opt.seeds));
        for (const auto& e : stats.errors) {
            err << "seed " << e.index + 1 << " '" << e.literal << "': " << e.message << "\n";
        }
        out << "precomputed " << stats.classes_discovered << " classes (" << stats.duplicates
            << " duplicate seeds)\n";
    }
    if (!opt.snapshot.empty()) {
        std::ofstream(opt.snapshot) << service.snapshot().dump(2) << "\n";
    }

    httplib::Server server;
    FiberApi api(service);
    api.mount(server, opt.static_dir);
    out << "listening on http://" << opt.host << ":" << opt.port << "\n" << std::flush;
    if (!server.listen(opt.host, opt.port)) {
        err << "cannot listen on " << opt.host << ":" << opt.port << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank invariant and line-fibered persistence diagrams of multi-parameter "
                 "filtrations",
                 "mfiber"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, ".ocf filtration file")->required();
        sub->add_option("--dgvf", opt.dgvf_path, ".dgvf gradient field (default: build one)");
        sub->add_option("--format", opt.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* validate = app.add_subcommand("validate", "check a filtration and optional vector field");
    add_common(validate);
    auto* dgvf = app.add_subcommand("dgvf", "build a consistent gradient field and print it");
    add_common(dgvf);
    auto* critical = app.add_subcommand("critical", "print critical values and their closure");
    add_common(critical);
    auto* rank = app.add_subcommand("rank", "rank invariant between two grades");
    add_common(rank);
    rank->add_option("--u", opt.u, "lower grade, e.g. 1/2,0")->required();
    rank->add_option("--v", opt.v, "upper grade")->required();
    rank->add_option("--dim", opt.dim, "homology degree")->required()->check(CLI::NonNegativeNumber);
    auto* fiber = app.add_subcommand("fiber", "persistence diagram along a line");
    add_common(fiber);
    fiber->add_option("--base", opt.base, "line base point")->required();
    fiber->add_option("--dir", opt.dir, "line direction (strictly positive)")->required();
    fiber->add_option("--dim", opt.dims, "homology degrees (default: all)")->delimiter(',');
    fiber->add_flag("--oracle", opt.oracle, "cross-check against matrix reduction");
    auto* classify = app.add_subcommand("classify", "equivalence class of a line");
    add_common(classify);
    classify->add_option("--base", opt.base, "line base point")->required();
    classify->add_option("--dir", opt.dir, "line direction (strictly positive)")->required();
    auto* serve = app.add_subcommand("serve", "HTTP API for interactive queries");
    add_common(serve);
    serve->add_option("--port", opt.port, "TCP port");
    serve->add_option("--host", opt.host, "bind address");
    serve->add_option("--seeds", opt.seeds, "file of line literals to precompute");
    serve->add_option("--snapshot", opt.snapshot, "cache snapshot to load and save");
    serve->add_option("--static", opt.static_dir, "directory served at /");
    auto* help = app.add_subcommand("help", "show usage");

    std::vector<const char*> argv{"mfiber"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (help->parsed()) {
            out << app.help();
            return kExitOk;
        }
        if (validate->parsed()) return cmd_validate(opt, out);
        if (dgvf->parsed()) return cmd_dgvf(opt, out);
        if (critical->parsed()) return cmd_critical(opt, out);
        if (rank->parsed()) return cmd_rank(opt, out);
        if (fiber->parsed()) return cmd_fiber(opt, out, err);
        if (classify->parsed()) return cmd_classify(opt, out);
        if (serve->parsed()) return cmd_serve(opt, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}

}  // namespace morsefiber
