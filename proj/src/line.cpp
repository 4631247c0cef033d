#include "morsefiber/line.hpp"

#include <algorithm>
#include <cctype>

namespace morsefiber {

Line::Line(Grade base, Grade direction) : base_(std::move(base)), direction_(std::move(direction)) {
    if (base_.dim() != direction_.dim()) throw DimensionMismatch(base_.dim(), direction_.dim());
    if (base_.dim() == 0) throw std::invalid_argument("line needs at least one coordinate");
    for (const Rational& m : direction_.coords()) {
        if (m <= 0) throw NonPositiveSlope();
    }
}

namespace {

std::string_view value_after(std::string_view literal, std::string_view key) {
    std::size_t pos = 0;
    while ((pos = literal.find(key, pos)) != std::string_view::npos) {
        if (pos == 0 || std::isspace(static_cast<unsigned char>(literal[pos - 1]))) break;
        pos += key.size();
    }
    if (pos == std::string_view::npos) {
        throw std::invalid_argument("line literal lacks '" + std::string(key) + "'");
    }
    auto rest = literal.substr(pos + key.size());
    auto end = rest.find_first_of(" \t");
    auto value = rest.substr(0, end);
    if (!value.empty() && value.front() == '<') {
        if (value.back() != '>') throw std::invalid_argument("unbalanced '<' in line literal");
        value = value.substr(1, value.size() - 2);
    }
    return value;
}

}  // namespace

Line Line::parse(std::string_view literal) {
    return Line(Grade::parse(value_after(literal, "base=")),
                Grade::parse(value_after(literal, "dir=")));
}

Grade Line::at(const Rational& t) const {
    std::vector<Rational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = base_[i] + direction_[i] * t;
    return Grade(std::move(out));
}

std::string Line::to_string() const {
    auto body = [](const Grade& g) {
        std::string s;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (i) s += ",";
            s += morsefiber::to_string(g[i]);
        }
        return s;
    };
    return "base=<" + body(base_) + "> dir=<" + body(direction_) + ">";
}

Rational entrance_parameter(const Line& line, const Grade& u) {
    if (u.dim() != line.dim()) throw DimensionMismatch(u.dim(), line.dim());
    Rational t = (u[0] - line.base()[0]) / line.direction()[0];
    for (std::size_t i = 1; i < u.dim(); ++i) {
        Rational ti = (u[i] - line.base()[i]) / line.direction()[i];
        if (t < ti) t = std::move(ti);
    }
    return t;
}

PushResult push(const Line& line, const Grade& u) {
    PushResult out;
    out.t = entrance_parameter(line, u);
    out.point = line.at(out.t);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (out.point[i] == u[i]) out.face.push_back(i);
    }
    return out;
}

bool faces_intersect(const Grade& u, const Face& a, const Grade& v, const Face& b) {
    if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
    auto in = [](const Face& f, std::size_t i) { return std::binary_search(f.begin(), f.end(), i); };
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const bool ia = in(a, i);
        const bool ib = in(b, i);
        // x_i is pinned by whichever face contains i and must exceed the other bound.
        if (ia && ib && u[i] != v[i]) return false;
        if (ia && !ib && !(u[i] > v[i])) return false;
        if (!ia && ib && !(v[i] > u[i])) return false;
    }
    return true;
}

}  // namespace morsefiber
