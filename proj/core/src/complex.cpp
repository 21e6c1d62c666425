#include "symtc/complex.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symtc/errors.hpp"

namespace symtc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string where(const std::string& origin, int line) {
    return origin + ":" + std::to_string(line) + ": ";
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void check_simplex(std::vector<int>& simplex, const std::string& ctx) {
    if (simplex.empty()) throw InputError(ctx + "empty simplex");
    std::sort(simplex.begin(), simplex.end());
    for (size_t i = 0; i + 1 < simplex.size(); ++i)
        if (simplex[i] == simplex[i + 1])
            throw InputError(ctx + "duplicate vertex " + std::to_string(simplex[i]) + " in simplex");
    if (simplex.front() < 0) throw InputError(ctx + "negative vertex index");
}

Complex parse_json(const std::string& text, const std::string& origin) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(origin + ": invalid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices"))
        throw InputError(origin + ": JSON complex needs \"vertices\" and \"simplices\" keys");
    Complex c;
    c.vertex_count = j.at("vertices").get<int>();
    for (const auto& s : j.at("simplices")) {
        std::vector<int> simplex = s.get<std::vector<int>>();
        check_simplex(simplex, origin + ": ");
        c.maximal_simplices.push_back(std::move(simplex));
    }
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    validate(c);
    return c;
}

Complex parse_text(const std::string& text, const std::string& origin) {
    Complex c;
    std::optional<int> declared_vertices;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string ctx = where(origin, lineno);
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            std::string comment = trim(line.substr(hash + 1));
            if (comment.rfind("vertices:", 0) == 0) {
                try {
                    declared_vertices = std::stoi(trim(comment.substr(9)));
                } catch (const std::exception&) {
                    throw InputError(ctx + "bad vertices directive");
                }
            } else if (comment.rfind("name:", 0) == 0) {
                c.name = trim(comment.substr(5));
            }
            line = line.substr(0, hash);
        }
        if (is_blank(line)) continue;
        std::vector<int> simplex;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) throw InputError(ctx + "empty vertex entry");
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                simplex.push_back(v);
            } catch (const std::exception&) {
                throw InputError(ctx + "bad vertex index '" + tok + "'");
            }
        }
        check_simplex(simplex, ctx);
        max_vertex = std::max(max_vertex, simplex.back());
        c.maximal_simplices.push_back(std::move(simplex));
    }
    c.vertex_count = declared_vertices.value_or(max_vertex + 1);
    validate(c);
    return c;
}

}  // namespace

void validate(const Complex& c) {
    if (c.maximal_simplices.empty()) throw InputError("empty complex");
    if (c.vertex_count <= 0) throw InputError("complex has no vertices");
    for (const auto& s : c.maximal_simplices) {
        if (s.empty()) throw InputError("empty simplex");
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= c.vertex_count)
                throw InputError("vertex index " + std::to_string(s[i]) + " out of range [0, " +
                                 std::to_string(c.vertex_count) + ")");
            if (i > 0 && s[i] <= s[i - 1])
                throw InputError("simplex is not strictly increasing");
        }
    }
}

Complex parse_complex(const std::string& text, const std::string& origin) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return parse_json(text, origin);
        break;
    }
    return parse_text(text, origin);
}

std::string serialize_complex(const Complex& c) {
    std::ostringstream out;
    if (c.name) out << "# name: " << *c.name << "\n";
    out << "# vertices: " << c.vertex_count << "\n";
    for (const auto& s : c.maximal_simplices) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out << ",";
            out << s[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string serialize_complex_json(const Complex& c) {
    ordered_json j;
    j["vertices"] = c.vertex_count;
    j["simplices"] = c.maximal_simplices;
    if (c.name) j["name"] = *c.name;
    return j.dump(2) + "\n";
}

Complex make_sphere(int n) {
    if (n < 0) throw InputError("sphere dimension must be >= 0");
    Complex c;
    c.name = "sphere:" + std::to_string(n);
    c.vertex_count = n + 2;
    if (n == 0) {
        c.maximal_simplices = {{0}, {1}};
        return c;
    }
    // all n+1-element subsets of {0..n+1}: the facets of the boundary
    for (int omit = n + 1; omit >= 0; --omit) {
        std::vector<int> s;
        for (int v = 0; v <= n + 1; ++v)
            if (v != omit) s.push_back(v);
        c.maximal_simplices.push_back(std::move(s));
    }
    std::sort(c.maximal_simplices.begin(), c.maximal_simplices.end());
    return c;
}

Complex make_torus() {
    // 3x3 grid on the torus, vertex (r,c) -> 3r+c, diagonal split per cell
    Complex c;
    c.name = "torus";
    c.vertex_count = 9;
    auto v = [](int r, int col) { return 3 * (r % 3) + (col % 3); };
    for (int r = 0; r < 3; ++r) {
        for (int col = 0; col < 3; ++col) {
            std::vector<int> t1 = {v(r, col), v(r, col + 1), v(r + 1, col + 1)};
            std::vector<int> t2 = {v(r, col), v(r + 1, col), v(r + 1, col + 1)};
            std::sort(t1.begin(), t1.end());
            std::sort(t2.begin(), t2.end());
            c.maximal_simplices.push_back(t1);
            c.maximal_simplices.push_back(t2);
        }
    }
    std::sort(c.maximal_simplices.begin(), c.maximal_simplices.end());
    return c;
}

Complex make_rp2() {
    // 6-vertex triangulation (antipodal quotient of the icosahedron)
    Complex c;
    c.name = "rp2";
    c.vertex_count = 6;
    c.maximal_simplices = {
        {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5},
    };
    return c;
}

Complex make_point() {
    Complex c;
    c.name = "point";
    c.vertex_count = 1;
    c.maximal_simplices = {{0}};
    return c;
}

Complex make_interval() {
    Complex c;
    c.name = "interval";
    c.vertex_count = 2;
    c.maximal_simplices = {{0, 1}};
    return c;
}

Complex generate(const std::string& selector) {
    std::string kind = selector;
    std::optional<int> param;
    size_t colon = selector.find(':');
    if (colon != std::string::npos) {
        kind = selector.substr(0, colon);
        try {
            param = std::stoi(selector.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("bad generator parameter in '" + selector + "'");
        }
    }
    if (kind == "sphere") {
        if (!param) throw InputError("sphere generator needs a dimension, e.g. sphere:2");
        return make_sphere(*param);
    }
    if (param) throw InputError("generator '" + kind + "' takes no parameter");
    if (kind == "torus") return make_torus();
    if (kind == "rp2") return make_rp2();
    if (kind == "point") return make_point();
    if (kind == "interval") return make_interval();
    throw InputError("unknown generator '" + kind +
                     "' (expected sphere:N, torus, rp2, point, interval)");
}

std::vector<std::vector<std::vector<int>>> closure(const Complex& c) {
    validate(c);
    std::set<std::vector<int>> seen;
    for (const auto& top : c.maximal_simplices) {
        int k = static_cast<int>(top.size());
        // nonempty subsets via bitmask
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(top[i]);
            seen.insert(std::move(face));
        }
    }
    size_t maxdim = 0;
    for (const auto& s : seen) maxdim = std::max(maxdim, s.size() - 1);
    std::vector<std::vector<std::vector<int>>> grades(maxdim + 1);
    for (const auto& s : seen) grades[s.size() - 1].push_back(s);
    // std::set iteration is already sorted; per-grade lists inherit the order
    return grades;
}

}  // namespace symtc
