#include "morsefiber/query_cache.hpp"

#include "morsefiber/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>

namespace morsefiber {

FiberService::FiberService(OneCriticalFiltration filtration, GradientVectorField field,
                           std::size_t cap)
    : filtration_(std::make_unique<const OneCriticalFiltration>(std::move(filtration))),
      field_(std::move(field)),
      rank_(std::make_unique<const RankInvariant>(*filtration_, field_, cap)),
      critical_cell_count_(critical_cells(filtration_->complex(), field_).cells.size()),
      degrees_(all_degrees(*filtration_)) {}

std::shared_ptr<ClassCacheEntry> FiberService::lookup(const LineSignature& sig) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(sig.hash());
    if (it == entries_.end()) return nullptr;
    for (const auto& e : it->second) {
        if (e->signature == sig) return e;
    }
    return nullptr;
}

std::shared_ptr<const ClassCacheEntry> FiberService::find(const LineSignature& sig) const {
    return lookup(sig);
}

std::shared_ptr<ClassCacheEntry> FiberService::insert(std::shared_ptr<ClassCacheEntry> entry) {
    std::unique_lock lock(mutex_);
    auto& bucket = entries_[entry->signature.hash()];
    for (const auto& e : bucket) {
        if (e->signature == entry->signature) return e;
    }
    bucket.push_back(entry);
    ++count_;
    return entry;
}

PrecomputeStats FiberService::precompute(const std::vector<Line>& seeds) {
    PrecomputeStats stats;
    const auto sigs = kernels::signature_batch(closure(), seeds, kernels::Execution::Parallel);

    std::vector<Line> fresh_lines;
    std::vector<LineSignature> fresh_sigs;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const bool seen_in_batch =
            std::find(fresh_sigs.begin(), fresh_sigs.end(), sigs[i]) != fresh_sigs.end();
        if (seen_in_batch || lookup(sigs[i])) {
            ++stats.duplicates;
            continue;
        }
        fresh_lines.push_back(seeds[i]);
        fresh_sigs.push_back(sigs[i]);
    }

    auto diagrams =
        kernels::fiber_batch(*rank_, fresh_lines, degrees_, kernels::Execution::Parallel);
    for (std::size_t i = 0; i < fresh_lines.size(); ++i) {
        auto entry = std::make_shared<ClassCacheEntry>(std::move(fresh_sigs[i]),
                                                       std::move(fresh_lines[i]),
                                                       std::move(diagrams[i]));
        if (insert(entry) == entry) {
            ++stats.classes_discovered;
        } else {
            ++stats.duplicates;
        }
    }
    return stats;
}

PrecomputeStats FiberService::precompute(const std::vector<std::string>& literals) {
    std::vector<Line> lines;
    std::vector<SeedError> errors;
    for (std::size_t i = 0; i < literals.size(); ++i) {
        try {
            Line line = Line::parse(literals[i]);
            if (line.dim() != filtration_->parameters()) {
                throw DimensionMismatch(line.dim(), filtration_->parameters());
            }
            lines.push_back(std::move(line));
        } catch (const std::exception& e) {
            errors.push_back({i, literals[i], e.what()});
        }
    }
    auto stats = precompute(lines);
    stats.errors = std::move(errors);
    return stats;
}

QueryResult FiberService::query(const Line& line, const std::vector<int>& degrees) {
    const auto start = std::chrono::steady_clock::now();
    if (line.dim() != filtration_->parameters()) {
        throw DimensionMismatch(line.dim(), filtration_->parameters());
    }
    auto sig = signature(closure(), line);
    auto id = sig.class_id();

    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    };

    if (auto entry = lookup(sig)) {
        ++entry->hit_count;
        auto moved = transfer(entry->diagram, line, closure()).restricted_to(degrees);
        return {std::move(moved), CacheStatus::Hit, std::move(id), elapsed()};
    }
    auto full = fiber_diagram(*rank_, line, degrees_);
    auto result = full.restricted_to(degrees);
    insert(std::make_shared<ClassCacheEntry>(std::move(sig), line, std::move(full)));
    return {std::move(result), CacheStatus::Miss, std::move(id), elapsed()};
}

FiberDiagram FiberService::direct(const Line& line, const std::vector<int>& degrees) const {
    return fiber_diagram(*rank_, line, degrees);
}

std::size_t FiberService::class_count() const {
    std::shared_lock lock(mutex_);
    return count_;
}

std::vector<ClassSummary> FiberService::classes() const {
    std::shared_lock lock(mutex_);
    std::vector<ClassSummary> out;
    for (const auto& [hash, bucket] : entries_) {
        for (const auto& e : bucket) {
            out.push_back({e->class_id(), e->representative, e->hit_count.load()});
        }
    }
    return out;
}

Json FiberService::snapshot() const {
    std::shared_lock lock(mutex_);
    Json out = Json::array();
    for (const auto& [hash, bucket] : entries_) {
        for (const auto& e : bucket) {
            out.push_back(Json{{"classId", e->class_id()},
                               {"representative", to_json(e->representative)},
                               {"signature", to_json(e->signature)},
                               {"points", points_to_json(e->diagram)},
                               {"hitCount", e->hit_count.load()}});
        }
    }
    return out;
}

std::size_t FiberService::restore(const Json& snapshot) {
    if (!snapshot.is_array()) throw std::invalid_argument("cache snapshot must be a JSON array");
    std::size_t added = 0;
    for (const auto& j : snapshot) {
        Line rep = line_from_json(j.at("representative"));
        auto stored = signature_from_json(j.at("signature"));
        if (stored != signature(closure(), rep)) {
            throw std::invalid_argument("snapshot entry " + j.at("classId").get<std::string>() +
                                        " does not match this dataset");
        }
        auto dgm = diagram_from_json(rep, j.at("points"));
        auto entry = std::make_shared<ClassCacheEntry>(std::move(stored), std::move(rep), std::move(dgm));
        entry->hit_count = j.value("hitCount", std::uint64_t{0});
        if (insert(entry) == entry) ++added;
    }
    return added;
}

std::vector<std::string> read_seed_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

}  // namespace morsefiber
