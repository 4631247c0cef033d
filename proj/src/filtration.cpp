#include "morsefiber/filtration.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace morsefiber {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw std::invalid_argument("repeated vertex in simplex " + to_string());
    }
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    out.reserve(vertices_.size());
    for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
        Simplex f;
        f.vertices_.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i != skip) f.vertices_.push_back(vertices_[i]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

bool Simplex::is_face_of(const Simplex& other) const {
    return vertices_.size() < other.vertices_.size() &&
           std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

std::string Simplex::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vertices_[i]);
    }
    return out + "}";
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
    if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
    return vertices_ <=> other.vertices_;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    SimplicialComplex k;
    std::sort(simplices.begin(), simplices.end());
    if (auto dup = std::adjacent_find(simplices.begin(), simplices.end()); dup != simplices.end()) {
        throw FiltrationError(FiltrationError::Kind::DuplicateSimplex,
                              "duplicate simplex " + dup->to_string());
    }
    k.simplices_ = std::move(simplices);
    for (SimplexId id = 0; id < k.simplices_.size(); ++id) k.index_.emplace(k.simplices_[id], id);

    k.facets_.resize(k.size());
    k.cofacets_.resize(k.size());
    for (SimplexId id = 0; id < k.size(); ++id) {
        for (const Simplex& f : k.simplices_[id].facets()) {
            auto it = k.index_.find(f);
            if (it == k.index_.end()) {
                throw FiltrationError(FiltrationError::Kind::FaceClosure,
                                      "facet " + f.to_string() + " of " +
                                          k.simplices_[id].to_string() + " is missing",
                                      std::nullopt, k.simplices_[id]);
            }
            k.facets_[id].push_back(it->second);
            k.cofacets_[it->second].push_back(id);
        }
    }
    return k;
}

std::optional<SimplexId> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool is_face_closed(const SimplicialComplex& complex, const Subcomplex& sub) {
    std::vector<char> member(complex.size(), 0);
    for (SimplexId id : sub) member[id] = 1;
    for (SimplexId id : sub) {
        for (SimplexId f : complex.facets(id)) {
            if (!member[f]) return false;
        }
    }
    return true;
}

FiltrationError::FiltrationError(Kind kind, std::string message, std::optional<std::size_t> line,
                                 std::optional<Simplex> subject)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message : message),
      kind_(kind),
      line_(line),
      subject_(std::move(subject)) {}

OneCriticalFiltration::OneCriticalFiltration(std::size_t n,
                                             std::vector<std::pair<Simplex, Grade>> graded)
    : n_(n) {
    if (n == 0) {
        throw FiltrationError(FiltrationError::Kind::ParameterCount,
                              "parameter count must be at least 1");
    }
    std::vector<Simplex> simplices;
    simplices.reserve(graded.size());
    for (const auto& [s, g] : graded) {
        if (g.dim() != n) {
            throw FiltrationError(FiltrationError::Kind::ParameterCount,
                                  "simplex " + s.to_string() + " has " + std::to_string(g.dim()) +
                                      " grade coordinates, expected " + std::to_string(n));
        }
        simplices.push_back(s);
    }
    complex_ = SimplicialComplex::from_simplices(std::move(simplices));

    std::sort(graded.begin(), graded.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    grades_.reserve(graded.size());
    for (auto& entry : graded) grades_.push_back(std::move(entry.second));

    for (SimplexId id = 0; id < complex_.size(); ++id) {
        for (SimplexId f : complex_.facets(id)) {
            if (!leq(grades_[f], grades_[id])) {
                throw FiltrationError(FiltrationError::Kind::Monotonicity,
                                      "grade of " + complex_.simplex(id).to_string() + " " +
                                          grades_[id].to_string() + " is not above grade of facet " +
                                          complex_.simplex(f).to_string() + " " +
                                          grades_[f].to_string(),
                                      std::nullopt, complex_.simplex(id));
            }
        }
    }
}

const Grade& OneCriticalFiltration::grade(const Simplex& s) const {
    auto id = complex_.find(s);
    if (!id) throw std::out_of_range("simplex " + s.to_string() + " not in filtration");
    return grades_[*id];
}

Subcomplex sublevel_complex(const OneCriticalFiltration& filtration, const Grade& u) {
    if (u.dim() != filtration.parameters()) throw DimensionMismatch(u.dim(), filtration.parameters());
    Subcomplex out;
    for (SimplexId id = 0; id < filtration.size(); ++id) {
        if (leq(filtration.grade(id), u)) out.push_back(id);
    }
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

OneCriticalFiltration parse_filtration(std::string_view text) {
    using Kind = FiltrationError::Kind;
    std::optional<std::size_t> n;
    std::vector<std::pair<Simplex, Grade>> graded;
    std::map<Simplex, std::size_t> seen_on_line;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (!n) {
            std::size_t value = 0;
            if (tokens.size() != 2 || tokens[0] != "ocf" ||
                std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), value).ec !=
                    std::errc{} ||
                value == 0) {
                throw FiltrationError(Kind::Syntax, "expected header 'ocf <n>'", line_no);
            }
            n = value;
            continue;
        }

        auto semi = std::find(tokens.begin(), tokens.end(), std::string_view(";"));
        if (semi == tokens.end()) throw FiltrationError(Kind::Syntax, "missing ';'", line_no);

        std::vector<Vertex> vertices;
        for (auto it = tokens.begin(); it != semi; ++it) {
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(it->data(), it->data() + it->size(), v);
            if (ec != std::errc{} || ptr != it->data() + it->size()) {
                throw FiltrationError(Kind::Syntax, "bad vertex id '" + std::string(*it) + "'",
                                      line_no);
            }
            vertices.push_back(v);
        }
        if (vertices.empty()) throw FiltrationError(Kind::Syntax, "empty vertex list", line_no);

        std::vector<Rational> coords;
        for (auto it = semi + 1; it != tokens.end(); ++it) {
            try {
                coords.push_back(parse_rational(*it));
            } catch (const RationalSyntaxError& e) {
                throw FiltrationError(Kind::Syntax, e.what(), line_no);
            }
        }
        if (coords.size() != *n) {
            throw FiltrationError(Kind::ParameterCount,
                                  "expected " + std::to_string(*n) + " grade coordinates, got " +
                                      std::to_string(coords.size()),
                                  line_no);
        }

        Simplex simplex;
        try {
            simplex = Simplex(std::move(vertices));
        } catch (const std::invalid_argument& e) {
            throw FiltrationError(Kind::Syntax, e.what(), line_no);
        }
        if (auto [it, inserted] = seen_on_line.emplace(simplex, line_no); !inserted) {
            throw FiltrationError(Kind::DuplicateSimplex,
                                  "duplicate simplex " + simplex.to_string() + " (first on line " +
                                      std::to_string(it->second) + ")",
                                  line_no);
        }
        graded.emplace_back(std::move(simplex), Grade(std::move(coords)));
    }
    if (!n) throw FiltrationError(Kind::Syntax, "missing header 'ocf <n>'", line_no);

    try {
        return OneCriticalFiltration(*n, std::move(graded));
    } catch (const FiltrationError& e) {
        if (e.line() || !e.subject()) throw;
        auto it = seen_on_line.find(*e.subject());
        if (it == seen_on_line.end()) throw;
        throw FiltrationError(e.kind(), e.what(), it->second, e.subject());
    }
}

std::string serialize_filtration(const OneCriticalFiltration& filtration) {
    std::ostringstream out;
    out << "ocf " << filtration.parameters() << "\n";
    const auto& k = filtration.complex();
    for (SimplexId id = 0; id < k.size(); ++id) {
        for (Vertex v : k.simplex(id).vertices()) out << v << ' ';
        out << ';';
        for (const Rational& c : filtration.grade(id).coords()) out << ' ' << to_string(c);
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OneCriticalFiltration load_filtration(const std::string& path) {
    return parse_filtration(read_text_file(path));
}

}  // namespace morsefiber
