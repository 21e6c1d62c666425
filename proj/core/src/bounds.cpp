#include "symtc/bounds.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symtc/errors.hpp"

namespace symtc {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kConnectivityCaveat =
    "Consistency is NOT a proof of s-connectivity (mod-2 homology cannot see it).";

/// Graded vector: one coordinate block per grade of the ring.
struct GradedVector {
    std::vector<F2Vector> parts;  // parts[k] has size ring.betti(k)

    bool is_zero() const {
        return std::all_of(parts.begin(), parts.end(),
                           [](const F2Vector& v) { return v.is_zero(); });
    }
};

GradedVector zero_vector(const CohomologyRing& ring) {
    GradedVector gv;
    gv.parts.resize(ring.top_grade() + 1);
    for (int k = 0; k <= ring.top_grade(); ++k) gv.parts[k] = F2Vector(ring.betti(k));
    return gv;
}

GradedVector multiply(const CohomologyRing& ring, const GradedVector& a, const GradedVector& b) {
    GradedVector out = zero_vector(ring);
    int top = ring.top_grade();
    for (int p = 0; p <= top; ++p) {
        if (a.parts[p].is_zero()) continue;
        for (int q = 0; p + q <= top; ++q) {
            if (b.parts[q].is_zero()) continue;
            out.parts[p + q] ^= ring.cup(p, a.parts[p], q, b.parts[q]);
        }
    }
    return out;
}

}  // namespace

GradedSubspace GradedSubspace::positive_part(RingPtr ring) {
    GradedSubspace v;
    v.ring = ring;
    v.spans.resize(ring->top_grade() + 1);
    v.spans[0] = F2Matrix(0, ring->betti(0));
    for (int k = 1; k <= ring->top_grade(); ++k) v.spans[k] = F2Matrix::identity(ring->betti(k));
    return v;
}

GradedSubspace GradedSubspace::kernel_of(const RingMap& f) {
    GradedSubspace v;
    v.ring = f.domain;
    int top = f.domain->top_grade();
    v.spans.resize(top + 1);
    v.spans[0] = F2Matrix(0, f.domain->betti(0));
    for (int k = 1; k <= top; ++k) v.spans[k] = f.kernel_in_grade(k).basis();
    return v;
}

bool GradedSubspace::is_zero() const {
    for (size_t k = 1; k < spans.size(); ++k)
        if (spans[k].rows() > 0) return false;
    return true;
}

int cup_length(const GradedSubspace& v) {
    const CohomologyRing& ring = *v.ring;
    int top = ring.top_grade();

    // W_1 = span(v); W_{j+1} = span{ b . w : b in v, w in W_j }.
    // Elements of grade >= 1 only, so W_j sits in grades >= j and the
    // iteration stops after at most `top` rounds.
    std::vector<Subspace> w(top + 1);
    for (int k = 1; k <= top; ++k) w[k] = Subspace::span_of_rows(v.spans[k]);

    auto all_zero = [&](const std::vector<Subspace>& sub) {
        for (int k = 1; k <= top; ++k)
            if (sub[k].dim() > 0) return false;
        return true;
    };

    if (all_zero(w)) return 0;
    int length = 1;
    while (length <= top) {
        std::vector<Subspace> next(top + 1);
        for (int k = 0; k <= top; ++k) next[k] = Subspace(ring.betti(k));
        bool nonzero = false;
        for (int p = 1; p <= top; ++p) {
            for (int i = 0; i < v.spans[p].rows(); ++i) {
                F2Vector b = v.spans[p].row(i);
                for (int q = 1; p + q <= top; ++q) {
                    for (int r = 0; r < w[q].basis().rows(); ++r) {
                        F2Vector prod = ring.cup(p, b, q, w[q].basis().row(r));
                        if (!prod.is_zero() && next[p + q].insert(prod)) nonzero = true;
                    }
                }
            }
        }
        if (!nonzero) return length;
        for (int k = 1; k <= top; ++k)
            w[k] = Subspace::span_of_rows(next[k].basis());
        ++length;
    }
    return length;
}

int cup_length_brute_force(const GradedSubspace& v) {
    const CohomologyRing& ring = *v.ring;
    int top = ring.top_grade();

    // all nonzero elements of the graded subspace (mixed grades allowed)
    std::vector<GradedVector> elements;
    std::vector<std::pair<int, int>> generators;  // (grade, row)
    for (int k = 1; k <= top; ++k)
        for (int r = 0; r < v.spans[k].rows(); ++r) generators.emplace_back(k, r);
    size_t ng = generators.size();
    internal_check(ng <= 20, "brute-force cup length: subspace too large");
    for (uint64_t mask = 1; mask < (uint64_t{1} << ng); ++mask) {
        GradedVector gv = zero_vector(ring);
        for (size_t g = 0; g < ng; ++g)
            if (mask & (uint64_t{1} << g))
                gv.parts[generators[g].first] ^= v.spans[generators[g].first].row(generators[g].second);
        if (!gv.is_zero()) elements.push_back(std::move(gv));
    }
    if (elements.empty()) return 0;

    // depth-first search over products; a zero product stays zero
    int best = 1;
    struct Frame {
        GradedVector value;
        int depth;
    };
    std::vector<Frame> stack;
    for (const auto& e : elements) stack.push_back(Frame{e, 1});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        best = std::max(best, f.depth);
        if (f.depth > top) continue;  // positive grades: products beyond top vanish
        for (const auto& e : elements) {
            GradedVector prod = multiply(ring, f.value, e);
            if (!prod.is_zero()) stack.push_back(Frame{std::move(prod), f.depth + 1});
        }
    }
    return best;
}

ConnectivityVerdict connectivity_check(const SimplicialSet& x, int s) {
    std::vector<int> b = betti_numbers(x);
    for (int k = 0; k <= s; ++k) {
        int reduced = (k == 0) ? b[0] - 1 : (k < static_cast<int>(b.size()) ? b[k] : 0);
        if (reduced != 0) return ConnectivityVerdict::refuted;
    }
    return ConnectivityVerdict::consistent;
}

int upper_bound_sigma(int dim, int s) {
    internal_check(dim >= 0 && s >= 0, "upper_bound_sigma: negative input");
    int num = 2 * dim + 1;
    int den = s + 1;
    return (num % den == 0) ? num / den - 1 : num / den;
}

SquareRings build_square_rings(const EquivariantPair& square) {
    SquareRings r;
    r.x = square.base;
    r.square = square;
    internal_check(static_cast<bool>(square.quotient), "build_square_rings: need the full square");

    r.ring_x = cohomology(cochain_complex(r.x));
    r.ring_product = cohomology(cochain_complex(square.total));
    r.ring_sp2 = cohomology(cochain_complex(square.quotient));
    r.ring_dx = cohomology(cochain_complex(square.diagonal));
    auto mask = square.diagonal_mask();
    r.ring_relative = cohomology(cochain_complex(square.quotient, &mask));

    r.diagonal_restriction = induced(square.diagonal_inclusion, r.ring_product, r.ring_x);
    r.restriction = induced(square.image_diagonal_inclusion, r.ring_sp2, r.ring_dx);
    r.rel_to_abs = relative_to_absolute(r.ring_relative, r.ring_sp2);
    return r;
}

SquareRings build_square_rings(const SSetPtr& x) {
    return build_square_rings(symmetric_square(x));
}

namespace {
void require_connected(const SquareRings& r) {
    if (component_count(*r.x) != 1)
        throw InputError("input space is disconnected; bounds require a connected complex");
}
}  // namespace

int lower_bound_tc(const SquareRings& r) {
    require_connected(r);
    return cup_length(GradedSubspace::kernel_of(r.diagonal_restriction));
}

int lower_bound_sigma_kernel(const SquareRings& r) {
    require_connected(r);
    return cup_length(GradedSubspace::kernel_of(r.restriction));
}

int lower_bound_sigma_relative(const SquareRings& r) {
    require_connected(r);
    return cup_length(GradedSubspace::positive_part(r.ring_relative));
}

int lower_bound_tc(const SSetPtr& x) { return lower_bound_tc(build_square_rings(x)); }
int lower_bound_sigma_kernel(const SSetPtr& x) {
    return lower_bound_sigma_kernel(build_square_rings(x));
}
int lower_bound_sigma_relative(const SSetPtr& x) {
    return lower_bound_sigma_relative(build_square_rings(x));
}

BoundsReport bounds_report(const SquareRings& r, int declared_s, bool user_declared,
                           const std::string& label) {
    if (declared_s < 0) throw InputError("declared connectivity must be >= 0");
    require_connected(r);
    if (connectivity_check(*r.x, declared_s) == ConnectivityVerdict::refuted)
        throw GuardRefuted("declared connectivity s=" + std::to_string(declared_s) +
                           " is refuted: reduced mod-2 Betti numbers are nonzero in a grade <= s");

    BoundsReport rep;
    rep.space = label;
    rep.betti_x = r.ring_x->betti_vector();
    rep.betti_product = r.ring_product->betti_vector();
    rep.betti_sp2 = r.ring_sp2->betti_vector();
    rep.betti_dx = r.ring_dx->betti_vector();
    rep.declared_connectivity = declared_s;
    rep.connectivity_user_declared = user_declared;

    rep.tc_lower = lower_bound_tc(r);
    rep.sigma_kernel_lower = lower_bound_sigma_kernel(r);
    rep.sigma_relative_lower = lower_bound_sigma_relative(r);
    internal_check(rep.sigma_kernel_lower <= rep.sigma_relative_lower,
                   "kernel bound exceeds relative bound");

    int dim = r.x->dimension();
    int formula = upper_bound_sigma(dim, declared_s);
    // the strict-inequality formula never certifies 0; only contractibility does
    rep.sigma_upper = std::max(formula, 1);

    rep.interval_lo =
        std::max({rep.tc_lower, rep.sigma_kernel_lower, rep.sigma_relative_lower});
    rep.interval_hi = rep.sigma_upper;
    if (rep.interval_lo > rep.interval_hi)
        throw GuardRefuted(
            "declared connectivity s=" + std::to_string(declared_s) +
            " is refuted: certified lower bound " + std::to_string(rep.interval_lo) +
            " exceeds the dimension-connectivity upper bound " + std::to_string(rep.interval_hi));

    rep.provenance = {
        "tc_lower: zero-divisor cup-length of ker(H*(X x X; F2) -> H*(X; F2)), a lower bound "
        "for ordinary TC and hence for the symmetrized invariant",
        "sigma_kernel_lower: cup-length of ker(H*(SP^2 X; F2) -> H*(dX; F2)) (symmetric-square "
        "kernel bound for the symmetrized invariant)",
        "sigma_relative_lower: cup-length of H*(SP^2 X, dX; F2) (monoidal relative bound; "
        "applies to the symmetrized invariant because finite complexes are paracompact ENRs)",
        "sigma_upper: dimension-connectivity bound, the largest integer below (2 dim X + 1)/(s+1) "
        "for an s-connected polyhedron, with s = " + std::to_string(declared_s),
    };
    rep.caveats = {std::string("Connectivity guard for s=") + std::to_string(declared_s) +
                   " passed. " + kConnectivityCaveat};
    if (!user_declared)
        rep.caveats.push_back("s defaulted to 0 (path-connectivity only); declare higher "
                              "connectivity to sharpen the upper bound.");
    if (rep.interval_lo == 0)
        rep.caveats.push_back(
            "All lower bounds vanish. The upper-bound formula never certifies 0; for "
            "contractible spaces the true value is 0 and the reported upper bound stays >= 1.");
    if (upper_bound_sigma(dim, declared_s) < 1)
        rep.caveats.push_back("Formula value " + std::to_string(formula) +
                              " was clamped to 1: the strict inequality cannot certify 0.");
    return rep;
}

BoundsReport bounds_report(const SSetPtr& x, int declared_s, bool user_declared,
                           const std::string& label) {
    return bounds_report(build_square_rings(x), declared_s, user_declared, label);
}

std::string report_to_json(const BoundsReport& r) {
    ordered_json j;
    j["space"] = r.space;
    j["betti"] = ordered_json{{"X", r.betti_x},
                              {"XxX", r.betti_product},
                              {"SP2", r.betti_sp2},
                              {"dX", r.betti_dx}};
    j["bounds"] = ordered_json{{"tc_lower", r.tc_lower},
                               {"sigma_kernel_lower", r.sigma_kernel_lower},
                               {"sigma_relative_lower", r.sigma_relative_lower},
                               {"sigma_upper", r.sigma_upper}};
    j["interval"] = {r.interval_lo, r.interval_hi};
    j["connectivity"] = ordered_json{{"s", r.declared_connectivity},
                                     {"user_declared", r.connectivity_user_declared}};
    j["provenance"] = r.provenance;
    j["caveats"] = r.caveats;
    return j.dump(2) + "\n";
}

namespace {
std::string betti_line(const std::vector<int>& b) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) out << ",";
        out << b[i];
    }
    out << ")";
    return out.str();
}
}  // namespace

std::string report_to_text(const BoundsReport& r) {
    std::ostringstream out;
    out << "space: " << r.space << "\n";
    out << "betti X:    " << betti_line(r.betti_x) << "\n";
    out << "betti XxX:  " << betti_line(r.betti_product) << "\n";
    out << "betti SP2:  " << betti_line(r.betti_sp2) << "\n";
    out << "betti dX:   " << betti_line(r.betti_dx) << "\n";
    out << "declared connectivity s = " << r.declared_connectivity
        << (r.connectivity_user_declared ? " (user declared)" : " (default)") << "\n";
    out << "lower bounds: tc = " << r.tc_lower << ", sigma_kernel = " << r.sigma_kernel_lower
        << ", sigma_relative = " << r.sigma_relative_lower << "\n";
    out << "upper bound:  sigma_upper = " << r.sigma_upper << "\n";
    out << "TC^Sigma in [" << r.interval_lo << ", " << r.interval_hi << "]\n";
    for (const auto& p : r.provenance) out << "provenance: " << p << "\n";
    for (const auto& c : r.caveats) out << "caveat: " << c << "\n";
    return out.str();
}

}  // namespace symtc
