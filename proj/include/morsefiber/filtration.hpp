#pragma once

#include "morsefiber/grade.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morsefiber {

using Vertex = std::uint32_t;
using SimplexId = std::size_t;

/// A simplex identified by its strictly increasing vertex list.
class Simplex {
public:
    Simplex() = default;
    /// Sorts the input; throws std::invalid_argument on duplicates or an empty list.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    /// Facets in order of the omitted vertex position.
    std::vector<Simplex> facets() const;
    /// True iff this is a proper face of `other`.
    bool is_face_of(const Simplex& other) const;
    std::string to_string() const;

    bool operator==(const Simplex&) const = default;
    /// (dimension, vertex list) order.
    std::strong_ordering operator<=>(const Simplex& other) const;

private:
    std::vector<Vertex> vertices_;
};

/// A face-closed finite simplicial complex. Simplices are stored sorted by
/// (dimension, vertex list); a SimplexId is an index into that order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Throws FiltrationError (kind FaceClosure / DuplicateSimplex).
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    const Simplex& simplex(SimplexId id) const { return simplices_[id]; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    int dim(SimplexId id) const { return simplices_[id].dim(); }
    int max_dim() const { return simplices_.empty() ? -1 : simplices_.back().dim(); }

    std::optional<SimplexId> find(const Simplex& s) const;
    const std::vector<SimplexId>& facets(SimplexId id) const { return facets_[id]; }
    const std::vector<SimplexId>& cofacets(SimplexId id) const { return cofacets_[id]; }

private:
    std::vector<Simplex> simplices_;
    std::map<Simplex, SimplexId> index_;
    std::vector<std::vector<SimplexId>> facets_;
    std::vector<std::vector<SimplexId>> cofacets_;
};

/// Sorted list of simplex ids of an ambient complex.
using Subcomplex = std::vector<SimplexId>;

/// True iff every facet of every member is also a member.
bool is_face_closed(const SimplicialComplex& complex, const Subcomplex& sub);

class FiltrationError : public std::runtime_error {
public:
    enum class Kind { Syntax, FaceClosure, Monotonicity, DuplicateSimplex, ParameterCount };

    FiltrationError(Kind kind, std::string message, std::optional<std::size_t> line = {},
                    std::optional<Simplex> subject = {});

    Kind kind() const { return kind_; }
    /// 1-based input line, when the error is attributable to one.
    std::optional<std::size_t> line() const { return line_; }
    /// Simplex the error is about, when there is one.
    const std::optional<Simplex>& subject() const { return subject_; }

private:
    Kind kind_;
    std::optional<std::size_t> line_;
    std::optional<Simplex> subject_;
};

/// Finite simplicial complex with a monotone grade function into ℚⁿ.
/// Immutable after construction.
class OneCriticalFiltration {
public:
    OneCriticalFiltration() = default;
    /// Validates face closure, monotonicity, uniqueness and parameter count.
    OneCriticalFiltration(std::size_t n, std::vector<std::pair<Simplex, Grade>> graded);

    std::size_t parameters() const { return n_; }
    const SimplicialComplex& complex() const { return complex_; }
    std::size_t size() const { return complex_.size(); }
    const Grade& grade(SimplexId id) const { return grades_[id]; }
    const std::vector<Grade>& grades() const { return grades_; }
    const Grade& grade(const Simplex& s) const;

private:
    std::size_t n_ = 0;
    SimplicialComplex complex_;
    std::vector<Grade> grades_;
};

/// { σ : grade(σ) ⪯ u }.
Subcomplex sublevel_complex(const OneCriticalFiltration& filtration, const Grade& u);

OneCriticalFiltration parse_filtration(std::string_view text);
/// `.ocf` text, simplices sorted by (dimension, vertex list).
std::string serialize_filtration(const OneCriticalFiltration& filtration);

OneCriticalFiltration load_filtration(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace morsefiber
