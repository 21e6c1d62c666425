#ifndef SYMTC_COMPLEX_HPP
#define SYMTC_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

namespace symtc {

/// A finite ordered simplicial complex given by its maximal simplices.
/// Vertices are integers 0..vertex_count-1; the integer order is the global
/// vertex order used everywhere downstream (products, front/back faces).
struct Complex {
    int vertex_count = 0;
    std::vector<std::vector<int>> maximal_simplices;  // each strictly increasing
    std::optional<std::string> name;

    bool operator==(const Complex&) const = default;
};

/// Validates invariants: strictly increasing tuples, indices in range,
/// nonempty. Throws InputError with a description on violation.
void validate(const Complex& c);

/// Parse the text format (one comma-separated maximal simplex per line,
/// '#' comments, blank lines ignored, "# vertices:"/"# name:" directives)
/// or the JSON equivalent {"vertices": N, "simplices": [[...],...]}.
/// The format is auto-detected. `origin` is used in error messages.
Complex parse_complex(const std::string& text, const std::string& origin = "<input>");

/// Canonical text serialization; parse(serialize(c)) == c and
/// serialize(parse(serialize(c))) is bit-identical to serialize(c).
std::string serialize_complex(const Complex& c);

/// Canonical JSON serialization with stable key order; round-trips likewise.
std::string serialize_complex_json(const Complex& c);

/// Built-in generators.
Complex make_sphere(int n);        // boundary of the (n+1)-simplex; n >= 0
Complex make_torus();              // 9-vertex, 18-triangle triangulation
Complex make_rp2();                // 6-vertex triangulation
Complex make_point();
Complex make_interval();

/// Generator dispatch for names like "sphere:2", "torus", "point".
Complex generate(const std::string& selector);

/// All simplices of the closure, grouped by dimension; each dimension's
/// list is lexicographically sorted. closure(c)[k] lists the k-simplices.
std::vector<std::vector<std::vector<int>>> closure(const Complex& c);

}  // namespace symtc

#endif
