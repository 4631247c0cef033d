#include "morsefiber/kernels.hpp"

#include "morsefiber/homology.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morsefiber::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

/// Runs body(i) for i in [0, count). Exceptions cannot cross an OpenMP region,
/// so the first one is captured and rethrown after the loop.
template <typename Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

template <typename T>
std::vector<T> unwrap(std::vector<std::optional<T>>&& slots) {
    std::vector<T> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace

std::vector<std::optional<Grade>> bar_batch(const ClosedCriticalSet& closure,
                                            std::span<const Grade> points, Execution exec) {
    std::vector<std::optional<Grade>> out(points.size());
    for_each_index(points.size(), exec, [&](std::size_t i) { out[i] = bar(closure, points[i]); });
    return out;
}

std::vector<LineSignature> signature_batch(const ClosedCriticalSet& closure,
                                           std::span<const Line> lines, Execution exec) {
    std::vector<LineSignature> out(lines.size());
    for_each_index(lines.size(), exec,
                   [&](std::size_t i) { out[i] = signature(closure, lines[i]); });
    return out;
}

std::vector<FiberDiagram> fiber_batch(const RankInvariant& rank, std::span<const Line> lines,
                                      const std::vector<int>& degrees, Execution exec) {
    std::vector<std::optional<FiberDiagram>> out(lines.size());
    for_each_index(lines.size(), exec,
                   [&](std::size_t i) { out[i] = fiber_diagram(rank, lines[i], degrees); });
    return unwrap(std::move(out));
}

std::vector<FiberDiagram> reduction_batch(const OneCriticalFiltration& filtration,
                                          std::span<const Line> lines,
                                          const std::vector<int>& degrees, Execution exec) {
    std::vector<std::optional<FiberDiagram>> out(lines.size());
    for_each_index(lines.size(), exec, [&](std::size_t i) {
        out[i] = line_persistence_reduction(filtration, lines[i], degrees);
    });
    return unwrap(std::move(out));
}

}  // namespace morsefiber::kernels
