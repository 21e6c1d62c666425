#ifndef SYMTC_BOUNDS_HPP
#define SYMTC_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "symtc/cohomology.hpp"
#include "symtc/sym_square.hpp"

namespace symtc {

/// A graded family of spanning vectors inside a cohomology ring, grades >= 1.
/// spans[k] rows are class coordinate vectors in grade k (spans[0] unused).
struct GradedSubspace {
    RingPtr ring;
    std::vector<F2Matrix> spans;

    static GradedSubspace positive_part(RingPtr ring);
    static GradedSubspace kernel_of(const RingMap& f);  // inside f's domain

    bool is_zero() const;
};

/// Largest k such that some k-fold product of elements of v is nonzero,
/// computed by iterated spans of products (exact). Zero subspace gives 0.
int cup_length(const GradedSubspace& v);

/// Test-friendly exhaustive search over all tuples of nonzero subspace
/// elements; exponential, intended for positive-degree dimension <= 6.
int cup_length_brute_force(const GradedSubspace& v);

enum class ConnectivityVerdict { consistent, refuted };

/// Homological refutation guard: refuted iff some reduced mod-2 Betti
/// number is nonzero in a grade <= s. Consistency is NOT a proof of
/// s-connectivity (mod-2 homology cannot see it).
ConnectivityVerdict connectivity_check(const SimplicialSet& x, int s);

/// Largest integer strictly below (2*dim+1)/(s+1), the dimension-
/// connectivity upper bound for an s-connected polyhedron.
int upper_bound_sigma(int dim, int s);

/// Cohomology rings and canonical maps of one space's symmetric square,
/// shared by the bound operations and the CLI.
struct SquareRings {
    SSetPtr x;
    EquivariantPair square;
    RingPtr ring_x;         // H*(X)
    RingPtr ring_product;   // H*(X x X)
    RingPtr ring_sp2;       // H*(SP^2 X)
    RingPtr ring_dx;        // H*(dX)
    RingPtr ring_relative;  // H*(SP^2 X, dX)
    RingMap diagonal_restriction;  // H*(X x X) -> H*(X)
    RingMap restriction;           // H*(SP^2) -> H*(dX)
    RingMap rel_to_abs;            // H*(SP^2, dX) -> H*(SP^2)
};

SquareRings build_square_rings(const SSetPtr& x);
SquareRings build_square_rings(const EquivariantPair& square);

/// Zero-divisor cup-length: cup-length of ker(H*(X x X) -> H*(X)).
/// Lower bound for TC, hence for the symmetrized invariant. X connected.
int lower_bound_tc(const SquareRings& r);

/// Cup-length of ker(H*(SP^2 X) -> H*(dX)); lower bound for the
/// symmetrized invariant. X connected.
int lower_bound_sigma_kernel(const SquareRings& r);

/// Cup-length of the positive-degree part of H*(SP^2 X, dX); the monoidal
/// relative bound, valid for the symmetrized invariant itself because
/// finite complexes are paracompact ENRs. X connected.
int lower_bound_sigma_relative(const SquareRings& r);

// Convenience overloads building the rings internally.
int lower_bound_tc(const SSetPtr& x);
int lower_bound_sigma_kernel(const SSetPtr& x);
int lower_bound_sigma_relative(const SSetPtr& x);

struct BoundsReport {
    std::string space;
    std::vector<int> betti_x, betti_product, betti_sp2, betti_dx;
    int tc_lower = 0;
    int sigma_kernel_lower = 0;
    int sigma_relative_lower = 0;
    int sigma_upper = 0;
    int interval_lo = 0;
    int interval_hi = 0;
    int declared_connectivity = 0;
    bool connectivity_user_declared = false;
    std::vector<std::string> provenance;
    std::vector<std::string> caveats;

    bool operator==(const BoundsReport&) const = default;
};

/// Full report. Throws InputError on disconnected input and GuardRefuted
/// when the declared connectivity is refuted (by homology below grade s,
/// or by a lower bound exceeding the upper bound).
BoundsReport bounds_report(const SquareRings& r, int declared_s, bool user_declared,
                           const std::string& label);
BoundsReport bounds_report(const SSetPtr& x, int declared_s,
                           bool user_declared = false, const std::string& label = "");

/// Stable-key JSON / human-readable renderings.
std::string report_to_json(const BoundsReport& r);
std::string report_to_text(const BoundsReport& r);

}  // namespace symtc

#endif
