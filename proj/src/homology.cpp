#include "morsefiber/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace morsefiber {

BitColumn& BitColumn::operator^=(const BitColumn& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitColumn::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitColumn::pivot() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    }
    return size_;
}

std::size_t BitColumn::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

namespace {

std::vector<SimplexId> of_dim(const SimplicialComplex& complex, const Subcomplex& sub, int p) {
    std::vector<SimplexId> out;
    for (SimplexId id : sub) {
        if (complex.dim(id) == p) out.push_back(id);
    }
    return out;
}

std::size_t position(const std::vector<SimplexId>& sorted, SimplexId id) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), id) -
                                    sorted.begin());
}

BitColumn boundary_column(const SimplicialComplex& complex, SimplexId id,
                          const std::vector<SimplexId>& rows) {
    BitColumn col(rows.size());
    for (SimplexId f : complex.facets(id)) {
        const auto pos = position(rows, f);
        if (pos == rows.size() || rows[pos] != f) {
            throw std::invalid_argument("subcomplex is not face-closed");
        }
        col.set(pos);
    }
    return col;
}

/// Reduces `columns` left to right in place and returns the rank. When
/// `track` is given, track[j] ends up as the combination of input columns
/// that produced reduced column j.
std::size_t reduce_dense(std::vector<BitColumn>& columns, std::vector<BitColumn>* track) {
    std::map<std::size_t, std::size_t> pivot_owner;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        while (columns[j].any()) {
            const auto piv = columns[j].pivot();
            auto it = pivot_owner.find(piv);
            if (it == pivot_owner.end()) {
                pivot_owner.emplace(piv, j);
                ++rank;
                break;
            }
            columns[j] ^= columns[it->second];
            if (track) (*track)[j] ^= (*track)[it->second];
        }
    }
    return rank;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, const Subcomplex& sub, int p) {
    BoundaryMatrix m;
    m.p = p;
    m.cols = of_dim(complex, sub, p);
    if (p > 0) m.rows = of_dim(complex, sub, p - 1);
    m.columns.reserve(m.cols.size());
    for (SimplexId id : m.cols) {
        m.columns.push_back(p > 0 ? boundary_column(complex, id, m.rows) : BitColumn(0));
    }
    return m;
}

std::size_t rank_z2(std::vector<BitColumn> columns) { return reduce_dense(columns, nullptr); }

std::size_t betti(const SimplicialComplex& complex, const Subcomplex& sub, int degree) {
    if (degree < 0) return 0;
    const auto simplices = of_dim(complex, sub, degree).size();
    const auto rank_down = degree > 0 ? rank_z2(boundary_matrix(complex, sub, degree).columns) : 0;
    const auto rank_up = rank_z2(boundary_matrix(complex, sub, degree + 1).columns);
    return simplices - rank_down - rank_up;
}

std::size_t rank_inclusion(const SimplicialComplex& complex, const Subcomplex& sub,
                           const Subcomplex& sup, int degree) {
    if (!std::includes(sup.begin(), sup.end(), sub.begin(), sub.end())) {
        throw std::invalid_argument("rank_inclusion: first complex is not a subcomplex of the second");
    }
    if (degree < 0) return 0;

    // Cycle basis of the smaller complex via reduction with tracking.
    const auto sub_cells = of_dim(complex, sub, degree);
    const auto sup_cells = of_dim(complex, sup, degree);
    std::vector<BitColumn> cycles;
    if (degree == 0) {
        for (SimplexId id : sub_cells) {
            BitColumn c(sup_cells.size());
            c.set(position(sup_cells, id));
            cycles.push_back(std::move(c));
        }
    } else {
        auto d = boundary_matrix(complex, sub, degree);
        std::vector<BitColumn> track;
        track.reserve(d.cols.size());
        for (std::size_t j = 0; j < d.cols.size(); ++j) {
            BitColumn t(d.cols.size());
            t.set(j);
            track.push_back(std::move(t));
        }
        reduce_dense(d.columns, &track);
        for (std::size_t j = 0; j < d.cols.size(); ++j) {
            if (d.columns[j].any()) continue;
            BitColumn c(sup_cells.size());
            for (std::size_t k = 0; k < d.cols.size(); ++k) {
                if (track[j].get(k)) c.set(position(sup_cells, d.cols[k]));
            }
            cycles.push_back(std::move(c));
        }
    }

    // rank = dim(B_sup + Z_sub) − dim B_sup.
    auto boundaries = boundary_matrix(complex, sup, degree + 1).columns;
    const auto rank_b = rank_z2(boundaries);
    boundaries.insert(boundaries.end(), cycles.begin(), cycles.end());
    return rank_z2(std::move(boundaries)) - rank_b;
}

PersistencePairing reduce_filtration(const SimplicialComplex& complex,
                                     std::vector<SimplexId> order) {
    PersistencePairing out;
    out.order = std::move(order);
    std::vector<std::size_t> pos_of(complex.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < out.order.size(); ++i) pos_of[out.order[i]] = i;

    // Sparse columns as ascending position lists; pivot = back().
    std::vector<std::vector<std::size_t>> cols(out.order.size());
    for (std::size_t j = 0; j < out.order.size(); ++j) {
        for (SimplexId f : complex.facets(out.order[j])) {
            if (pos_of[f] >= j) throw std::invalid_argument("order lists a simplex before its facet");
            cols[j].push_back(pos_of[f]);
        }
        std::sort(cols[j].begin(), cols[j].end());
    }

    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(out.order.size(), none);
    std::vector<char> is_death(out.order.size(), 0);
    std::vector<char> is_birth_paired(out.order.size(), 0);
    std::vector<std::size_t> scratch;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty() && owner[col.back()] != none) {
            const auto& other = cols[owner[col.back()]];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            owner[col.back()] = j;
            is_death[j] = 1;
            is_birth_paired[col.back()] = 1;
            out.pairs.push_back({col.back(), j});
        }
    }
    for (std::size_t i = 0; i < out.order.size(); ++i) {
        if (!is_death[i] && !is_birth_paired[i]) out.essential.push_back(i);
    }
    return out;
}

FiberDiagram line_persistence_reduction(const OneCriticalFiltration& filtration, const Line& line,
                                        const std::vector<int>& degrees) {
    if (line.dim() != filtration.parameters()) {
        throw DimensionMismatch(line.dim(), filtration.parameters());
    }
    std::vector<Rational> entrance;
    entrance.reserve(filtration.size());
    for (SimplexId id = 0; id < filtration.size(); ++id) {
        entrance.push_back(entrance_parameter(line, filtration.grade(id)));
    }
    std::vector<SimplexId> order(filtration.size());
    std::iota(order.begin(), order.end(), SimplexId{0});
    // SimplexId order is already (dimension, vertex list).
    std::stable_sort(order.begin(), order.end(),
                     [&](SimplexId a, SimplexId b) { return entrance[a] < entrance[b]; });

    const auto pairing = reduce_filtration(filtration.complex(), order);
    const auto& k = filtration.complex();
    auto wanted = [&](int d) { return std::find(degrees.begin(), degrees.end(), d) != degrees.end(); };

    std::vector<DiagramPoint> points;
    for (const auto& [b, d] : pairing.pairs) {
        const SimplexId birth = pairing.order[b];
        const SimplexId death = pairing.order[d];
        if (!wanted(k.dim(birth)) || entrance[birth] == entrance[death]) continue;
        points.push_back({k.dim(birth), entrance[birth], entrance[death], 1});
    }
    for (auto b : pairing.essential) {
        const SimplexId birth = pairing.order[b];
        if (!wanted(k.dim(birth))) continue;
        points.push_back({k.dim(birth), entrance[birth], std::nullopt, 1});
    }
    return FiberDiagram(line, std::move(points));
}

}  // namespace morsefiber
