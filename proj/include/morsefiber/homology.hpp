#pragma once

#include "morsefiber/diagram.hpp"
#include "morsefiber/filtration.hpp"

#include <cstdint>
#include <vector>

namespace morsefiber {

/// Dense bit vector over the two-element field.
class BitColumn {
public:
    BitColumn() = default;
    explicit BitColumn(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitColumn& operator^=(const BitColumn& other);
    bool any() const;
    /// Index of the highest set bit; size() when zero.
    std::size_t pivot() const;
    std::size_t count() const;

    bool operator==(const BitColumn&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// ∂_p restricted to a subcomplex: columns are its p-simplices, rows its
/// (p−1)-simplices, both in ascending SimplexId order.
struct BoundaryMatrix {
    int p = 0;
    std::vector<SimplexId> rows;
    std::vector<SimplexId> cols;
    std::vector<BitColumn> columns;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, const Subcomplex& sub, int p);

/// Rank over the two-element field (columns are copied).
std::size_t rank_z2(std::vector<BitColumn> columns);

std::size_t betti(const SimplicialComplex& complex, const Subcomplex& sub, int degree);

/// Rank of H_i(sub) → H_i(sup); throws std::invalid_argument unless sub ⊆ sup.
std::size_t rank_inclusion(const SimplicialComplex& complex, const Subcomplex& sub,
                           const Subcomplex& sup, int degree);

/// Result of plain column reduction over a simplex order.
struct PersistencePairing {
    /// Positions in the filtration order.
    struct Pair {
        std::size_t birth;
        std::size_t death;
    };
    std::vector<SimplexId> order;
    std::vector<Pair> pairs;
    std::vector<std::size_t> essential;
};

/// Standard reduction; `order` must list a face-closed complex with every
/// simplex after its facets.
PersistencePairing reduce_filtration(const SimplicialComplex& complex,
                                     std::vector<SimplexId> order);

/// Restricts the filtration to the line and reduces. Zero-length pairs are dropped.
FiberDiagram line_persistence_reduction(const OneCriticalFiltration& filtration, const Line& line,
                                        const std::vector<int>& degrees);

}  // namespace morsefiber
