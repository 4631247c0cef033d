#pragma once

#include "morsefiber/grade.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morsefiber {

class NonPositiveSlope : public std::invalid_argument {
public:
    NonPositiveSlope() : std::invalid_argument("direction must be strictly positive") {}
};

/// Nonempty subset A of {0..n-1} naming the open face S_A(u) of ∂S₊(u):
/// x_i = u_i for i ∈ A and x_i > u_i otherwise. Sorted, 0-based.
using Face = std::vector<std::size_t>;

/// Parametrized line base + t·direction with direction ≻ 0.
class Line {
public:
    /// Throws NonPositiveSlope or DimensionMismatch.
    Line(Grade base, Grade direction);

    /// "base=<1,0> dir=<1,1>" (angle brackets optional).
    static Line parse(std::string_view literal);

    const Grade& base() const { return base_; }
    const Grade& direction() const { return direction_; }
    std::size_t dim() const { return base_.dim(); }

    Grade at(const Rational& t) const;
    std::string to_string() const;

    bool operator==(const Line&) const = default;

private:
    Grade base_;
    Grade direction_;
};

struct PushResult {
    Grade point;
    Rational t;
    Face face;
};

/// The unique point of L on ∂S₊(u): t = maxᵢ (uᵢ − baseᵢ)/dirᵢ, face = argmax.
PushResult push(const Line& line, const Grade& u);

/// Smallest t with u ⪯ line.at(t).
Rational entrance_parameter(const Line& line, const Grade& u);

/// True iff S_A(u) ∩ S_B(v) ≠ ∅.
bool faces_intersect(const Grade& u, const Face& a, const Grade& v, const Face& b);

}  // namespace morsefiber
