#pragma once

// Batch kernels over independent queries. Each kernel has a serial reference
// path and an OpenMP path; both must return identical results.

#include "morsefiber/fiber.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace morsefiber::kernels {

enum class Execution { Serial, Parallel };

/// Number of OpenMP threads the parallel path would use (1 without OpenMP).
int max_threads();

std::vector<std::optional<Grade>> bar_batch(const ClosedCriticalSet& closure,
                                            std::span<const Grade> points, Execution exec);

std::vector<LineSignature> signature_batch(const ClosedCriticalSet& closure,
                                           std::span<const Line> lines, Execution exec);

std::vector<FiberDiagram> fiber_batch(const RankInvariant& rank, std::span<const Line> lines,
                                      const std::vector<int>& degrees, Execution exec);

/// Matrix-reduction diagrams for many lines; the oracle counterpart of fiber_batch.
std::vector<FiberDiagram> reduction_batch(const OneCriticalFiltration& filtration,
                                          std::span<const Line> lines,
                                          const std::vector<int>& degrees, Execution exec);

}  // namespace morsefiber::kernels
