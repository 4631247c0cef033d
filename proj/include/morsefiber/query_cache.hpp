#pragma once

#include "morsefiber/fiber.hpp"
#include "morsefiber/json_io.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace morsefiber {

/// One line equivalence class: its representative and the representative's
/// diagram in every degree.
struct ClassCacheEntry {
    ClassCacheEntry(LineSignature sig, Line rep, FiberDiagram dgm)
        : signature(std::move(sig)), representative(std::move(rep)), diagram(std::move(dgm)) {}

    LineSignature signature;
    Line representative;
    FiberDiagram diagram;
    std::atomic<std::uint64_t> hit_count{0};

    std::string class_id() const { return signature.class_id(); }
};

enum class CacheStatus { Hit, Miss };

struct QueryResult {
    FiberDiagram diagram;
    CacheStatus status;
    std::string class_id;
    std::int64_t micros;
};

struct SeedError {
    std::size_t index;
    std::string literal;
    std::string message;
};

struct PrecomputeStats {
    std::size_t classes_discovered = 0;
    std::size_t duplicates = 0;
    std::vector<SeedError> errors;
};

struct ClassSummary {
    std::string class_id;
    Line representative;
    std::uint64_t hit_count;
};

/// Offline precomputation plus interactive line queries answered by transfer
/// from cached class representatives. Thread-safe.
class FiberService {
public:
    FiberService(OneCriticalFiltration filtration, GradientVectorField field,
                 std::size_t cap = kDefaultClosureCap);

    const OneCriticalFiltration& filtration() const { return *filtration_; }
    const GradientVectorField& field() const { return field_; }
    const RankInvariant& rank_invariant() const { return *rank_; }
    const ClosedCriticalSet& closure() const { return rank_->closure(); }
    std::size_t critical_cell_count() const { return critical_cell_count_; }
    const std::vector<int>& degrees() const { return degrees_; }

    PrecomputeStats precompute(const std::vector<Line>& seeds);
    /// Seeds as line literals; malformed ones are reported and skipped.
    PrecomputeStats precompute(const std::vector<std::string>& literals);

    QueryResult query(const Line& line, const std::vector<int>& degrees);
    /// Diagram computed from scratch, bypassing the cache.
    FiberDiagram direct(const Line& line, const std::vector<int>& degrees) const;

    std::size_t class_count() const;
    std::vector<ClassSummary> classes() const;
    std::shared_ptr<const ClassCacheEntry> find(const LineSignature& sig) const;

    Json snapshot() const;
    /// Loads entries, rejecting any whose representative no longer has the
    /// stored signature. Returns the number of entries added.
    std::size_t restore(const Json& snapshot);

private:
    /// Inserts unless an equal signature exists; returns the resident entry.
    std::shared_ptr<ClassCacheEntry> insert(std::shared_ptr<ClassCacheEntry> entry);
    std::shared_ptr<ClassCacheEntry> lookup(const LineSignature& sig) const;

    std::unique_ptr<const OneCriticalFiltration> filtration_;
    GradientVectorField field_;
    std::unique_ptr<const RankInvariant> rank_;
    std::size_t critical_cell_count_ = 0;
    std::vector<int> degrees_;

    mutable std::shared_mutex mutex_;
    std::map<std::uint64_t, std::vector<std::shared_ptr<ClassCacheEntry>>> entries_;
    std::size_t count_ = 0;
};

std::vector<std::string> read_seed_file(const std::string& path);

}  // namespace morsefiber
