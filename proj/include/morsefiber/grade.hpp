#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morsefiber {

using Rational = boost::multiprecision::mpq_rational;

/// Thrown for malformed rational literals ("1.5", "3/0", "").
class RationalSyntaxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs);
};

/// Parses an integer ("-3") or a fraction ("7/4"). Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" (lowest terms, q > 0) otherwise.
std::string to_string(const Rational& value);

/// A point of the parameter space with exact coordinates.
class Grade {
public:
    Grade() = default;
    explicit Grade(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Grade(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Grade from_ints(std::initializer_list<long> coords);
    /// Comma-separated rationals, e.g. "1/2,0,3".
    static Grade parse(std::string_view text);

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    bool operator==(const Grade& other) const = default;
    /// Lexicographic total order used for containers and canonical output.
    /// Not the parameter-space order; see leq().
    std::strong_ordering operator<=>(const Grade& other) const;

    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

/// u ⪯ v coordinatewise.
bool leq(const Grade& u, const Grade& v);
/// u ⪯ v and u != v.
bool less(const Grade& u, const Grade& v);
/// Coordinatewise maximum (least upper bound).
Grade lub(const Grade& u, const Grade& v);

}  // namespace morsefiber
