// symtc: bounds for symmetrized topological complexity of finite complexes
// via the mod-2 cohomology of symmetric squares.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symtc/bounds.hpp"
#include "symtc/errors.hpp"
#include "symtc/pipeline.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace symtc;

struct CommonOpts {
    std::string in_file;
    std::string generator;
    int connectivity = 0;
    bool connectivity_given = false;
    std::string format = "text";
    std::string cache_dir;
    bool dump_debug = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    auto* in = cmd->add_option("--in", o.in_file, "complex file (text or JSON format)");
    auto* gen = cmd->add_option("--generate", o.generator,
                                "built-in generator: sphere:N, torus, rp2, point, interval");
    in->excludes(gen);
    cmd->add_option("--connectivity", o.connectivity,
                    "declared connectivity s (guarded, not proven)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--cache", o.cache_dir,
                    "cache directory (default: $SYMTC_CACHE_DIR when set)");
    cmd->add_flag("--dump-debug", o.dump_debug, "dump grade counts and orbit tables to stderr");
}

Complex load_complex(const CommonOpts& o) {
    if (!o.generator.empty()) return generate(o.generator);
    if (o.in_file.empty())
        throw InputError("no input: pass --in FILE or --generate NAME[:PARAM]");
    std::ifstream in(o.in_file, std::ios::binary);
    if (!in) throw InputError(o.in_file + ": file not found");
    std::stringstream buf;
    buf << in.rdbuf();
    Complex c = parse_complex(buf.str(), o.in_file);
    if (!c.name) c.name = o.in_file;
    return c;
}

std::optional<std::string> cache_dir_of(const CommonOpts& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    if (const char* env = std::getenv("SYMTC_CACHE_DIR"); env && *env) return std::string(env);
    return std::nullopt;
}

SquareWorkspace load_workspace(const CommonOpts& o, const Complex& c) {
    SquareWorkspace w = build_square_workspace(c, cache_dir_of(o));
    if (o.dump_debug) std::cerr << debug_dump_json(w);
    return w;
}

ordered_json matrix_json(const F2Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json ring_json(const CohomologyRing& ring) {
    ordered_json j;
    j["betti"] = ring.betti_vector();
    ordered_json tensors = ordered_json::object();
    for (int p = 1; p <= ring.top_grade(); ++p) {
        if (ring.betti(p) == 0) continue;
        for (int q = 1; p + q <= ring.top_grade(); ++q) {
            if (ring.betti(q) == 0 || ring.betti(p + q) == 0) continue;
            const F2Matrix& t = ring.tensor(p, q);
            ordered_json by_left = ordered_json::array();
            for (int i = 0; i < ring.betti(p); ++i) {
                ordered_json by_right = ordered_json::array();
                for (int k = 0; k < ring.betti(q); ++k) {
                    ordered_json coords = ordered_json::array();
                    for (int c = 0; c < ring.betti(p + q); ++c)
                        coords.push_back(t.get(i * ring.betti(q) + k, c) ? 1 : 0);
                    by_right.push_back(std::move(coords));
                }
                by_left.push_back(std::move(by_right));
            }
            tensors[std::to_string(p) + "x" + std::to_string(q)] = std::move(by_left);
        }
    }
    j["tensors"] = std::move(tensors);
    return j;
}

void ring_text(std::ostream& out, const std::string& label, const CohomologyRing& ring) {
    out << label << ": betti (";
    auto b = ring.betti_vector();
    for (size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << ")\n";
    for (int p = 1; p <= ring.top_grade(); ++p) {
        for (int q = 1; p + q <= ring.top_grade(); ++q) {
            if (ring.betti(p) == 0 || ring.betti(q) == 0 || ring.betti(p + q) == 0) continue;
            const F2Matrix& t = ring.tensor(p, q);
            for (int i = 0; i < ring.betti(p); ++i) {
                for (int k = 0; k < ring.betti(q); ++k) {
                    F2Vector row = t.row(i * ring.betti(q) + k);
                    if (row.is_zero()) continue;
                    out << "  H^" << p << "[" << i << "] * H^" << q << "[" << k << "] =";
                    for (int c = 0; c < row.size(); ++c)
                        if (row.get(c)) out << " H^" << (p + q) << "[" << c << "]";
                    out << "\n";
                }
            }
        }
    }
}

std::string space_label(const Complex& c) { return c.name.value_or("<unnamed>"); }

int cmd_homology(const CommonOpts& o) {
    Complex c = load_complex(o);
    SquareWorkspace w = load_workspace(o, c);
    std::vector<int> bx = betti_numbers(*w.square.base);
    std::vector<int> bprod = betti_numbers(*w.square.total);
    std::vector<int> bsp2 = betti_numbers(*w.square.quotient);
    std::vector<int> bdx = betti_numbers(*w.square.diagonal);
    if (o.format == "json") {
        ordered_json j;
        j["space"] = space_label(c);
        j["betti"] = ordered_json{{"X", bx}, {"XxX", bprod}, {"SP2", bsp2}, {"dX", bdx}};
        std::cout << j.dump(2) << "\n";
    } else {
        auto line = [](const char* tag, const std::vector<int>& b) {
            std::ostringstream s;
            s << tag << " (";
            for (size_t i = 0; i < b.size(); ++i) s << (i ? "," : "") << b[i];
            s << ")";
            return s.str();
        };
        std::cout << "space: " << space_label(c) << "\n"
                  << line("betti X:   ", bx) << "\n"
                  << line("betti XxX: ", bprod) << "\n"
                  << line("betti SP2: ", bsp2) << "\n"
                  << line("betti dX:  ", bdx) << "\n";
    }
    return 0;
}

int cmd_ring(const CommonOpts& o) {
    Complex c = load_complex(o);
    SquareWorkspace w = load_workspace(o, c);
    SquareRings r = build_square_rings(w.square);
    if (o.dump_debug) {
        // coboundary matrices of the quotient, one 0/1 row per line
        const auto& cc = r.ring_sp2->cochains();
        for (int k = 0; k < r.ring_sp2->top_grade(); ++k)
            std::cerr << "# delta_" << k << " of SP2 (" << cc.delta[k].rows() << "x"
                      << cc.delta[k].cols() << ")\n"
                      << cc.delta[k].to_string();
    }
    if (o.format == "json") {
        ordered_json j;
        j["space"] = space_label(c);
        j["rings"] = ordered_json{{"X", ring_json(*r.ring_x)},
                                  {"SP2", ring_json(*r.ring_sp2)},
                                  {"dX", ring_json(*r.ring_dx)},
                                  {"SP2_rel_dX", ring_json(*r.ring_relative)}};
        ordered_json restriction = ordered_json::array();
        for (int k = 0; k <= r.ring_sp2->top_grade(); ++k)
            restriction.push_back(matrix_json(r.restriction.mats[k]));
        ordered_json rel_abs = ordered_json::array();
        for (int k = 0; k <= r.ring_relative->top_grade(); ++k)
            rel_abs.push_back(matrix_json(r.rel_to_abs.mats[k]));
        j["maps"] =
            ordered_json{{"restriction", restriction}, {"relative_to_absolute", rel_abs}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "space: " << space_label(c) << "\n";
        ring_text(std::cout, "H*(X)", *r.ring_x);
        ring_text(std::cout, "H*(SP2 X)", *r.ring_sp2);
        ring_text(std::cout, "H*(dX)", *r.ring_dx);
        ring_text(std::cout, "H*(SP2 X, dX)", *r.ring_relative);
        std::cout << "restriction H*(SP2)->H*(dX) ranks:";
        for (int k = 0; k <= r.ring_sp2->top_grade(); ++k)
            std::cout << " " << rank(r.restriction.mats[k]);
        std::cout << "\nrelative->absolute ranks:";
        for (int k = 0; k <= r.ring_relative->top_grade(); ++k)
            std::cout << " " << rank(r.rel_to_abs.mats[k]);
        std::cout << "\n";
    }
    return 0;
}

int cmd_bounds(const CommonOpts& o) {
    Complex c = load_complex(o);
    SquareWorkspace w = load_workspace(o, c);
    SquareRings r = build_square_rings(w.square);
    BoundsReport rep =
        bounds_report(r, o.connectivity, o.connectivity_given, space_label(c));
    std::cout << (o.format == "json" ? report_to_json(rep) : report_to_text(rep));
    return 0;
}

int cmd_generate(const CommonOpts& o) {
    Complex c = load_complex(o);
    std::cout << (o.format == "json" ? serialize_complex_json(c) : serialize_complex(c));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds for symmetrized topological complexity via symmetric squares"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App* homology = app.add_subcommand("homology", "Betti numbers of X, XxX, SP2(X), dX");
    CLI::App* ring = app.add_subcommand("ring", "cohomology rings and canonical maps");
    CLI::App* bounds = app.add_subcommand("bounds", "certified lower/upper bounds");
    CLI::App* gen = app.add_subcommand("generate", "emit a complex file");
    for (CLI::App* cmd : {homology, ring, bounds, gen}) add_common(cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opts.connectivity_given = bounds->count("--connectivity") > 0;

    try {
        if (homology->parsed()) return cmd_homology(opts);
        if (ring->parsed()) return cmd_ring(opts);
        if (bounds->parsed()) return cmd_bounds(opts);
        if (gen->parsed()) return cmd_generate(opts);
        return 2;
    } catch (const GuardRefuted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
