#include "morsefiber/grade.hpp"

#include <algorithm>
#include <cctype>

namespace morsefiber {

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void check_same_dim(const Grade& u, const Grade& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw RationalSyntaxError("not a rational literal: '" + std::string(text) + "'");
    }
    boost::multiprecision::mpz_int p(std::string(num.front() == '+' ? num.substr(1) : num));
    if (slash == std::string_view::npos) return Rational(p);

    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw RationalSyntaxError("not a rational literal: '" + std::string(text) + "'");
    }
    boost::multiprecision::mpz_int q{std::string(den)};
    if (q == 0) throw RationalSyntaxError("zero denominator: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string to_string(const Rational& value) {
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Grade Grade::from_ints(std::initializer_list<long> coords) {
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (long c : coords) out.emplace_back(c);
    return Grade(std::move(out));
}

Grade Grade::parse(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Grade(std::move(out));
}

std::strong_ordering Grade::operator<=>(const Grade& other) const {
    const std::size_t common = std::min(dim(), other.dim());
    for (std::size_t i = 0; i < common; ++i) {
        if (coords_[i] < other.coords_[i]) return std::strong_ordering::less;
        if (other.coords_[i] < coords_[i]) return std::strong_ordering::greater;
    }
    return dim() <=> other.dim();
}

std::string Grade::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += morsefiber::to_string(coords_[i]);
    }
    return out + ")";
}

bool leq(const Grade& u, const Grade& v) {
    check_same_dim(u, v);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (v[i] < u[i]) return false;
    }
    return true;
}

bool less(const Grade& u, const Grade& v) { return leq(u, v) && u != v; }

Grade lub(const Grade& u, const Grade& v) {
    check_same_dim(u, v);
    std::vector<Rational> out(u.coords().begin(), u.coords().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < v[i]) out[i] = v[i];
    }
    return Grade(std::move(out));
}

}  // namespace morsefiber
