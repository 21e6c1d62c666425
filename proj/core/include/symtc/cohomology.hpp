#ifndef SYMTC_COHOMOLOGY_HPP
#define SYMTC_COHOMOLOGY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "symtc/f2.hpp"
#include "symtc/simplicial_set.hpp"

namespace symtc {

/// Normalized mod-2 cochains of a simplicial set, absolute or relative.
/// Generators in grade k are the nondegenerate k-simplices (minus the
/// subcomplex in relative mode); the coboundary transposes the normalized
/// boundary (degenerate faces dropped, signs trivial mod 2).
struct CochainComplex {
    SSetPtr space;
    /// Per-grade mask: 1 marks subcomplex simplices (empty = absolute mode).
    std::vector<std::vector<char>> subcomplex;
    std::vector<std::vector<int32_t>> gens;       // [k] -> simplex ids
    std::vector<std::vector<int32_t>> gen_index;  // [k][id] -> index or -1
    /// delta[k] maps grade k to grade k+1; rows |gens[k+1]|, cols |gens[k]|.
    /// delta[top] has zero rows.
    std::vector<F2Matrix> delta;

    bool relative() const { return !subcomplex.empty(); }
    int top_grade() const { return static_cast<int>(gens.size()) - 1; }
    int gen_count(int k) const {
        return (k >= 0 && k <= top_grade()) ? static_cast<int>(gens[k].size()) : 0;
    }
};

/// Build the normalized cochain complex; `subcomplex` (if given) must be a
/// per-grade mask closed under faces, else InputError. delta.delta = 0 is
/// asserted at build.
CochainComplex cochain_complex(const SSetPtr& s,
                               const std::vector<std::vector<char>>* subcomplex = nullptr);

/// Graded basis of mod-2 cohomology with the Alexander-Whitney product.
/// Basis representatives come from the deterministic elimination order;
/// multiplication tensors are filled lazily and cached.
class CohomologyRing {
public:
    explicit CohomologyRing(CochainComplex cc);

    const CochainComplex& cochains() const { return cc_; }
    const SSetPtr& space() const { return cc_.space; }
    bool is_relative() const { return cc_.relative(); }
    int top_grade() const { return cc_.top_grade(); }

    int betti(int k) const {
        return (k >= 0 && k <= top_grade()) ? reps_[k].rows() : 0;
    }
    std::vector<int> betti_vector() const;

    /// Representative cocycles, one row per basis class of grade k.
    const F2Matrix& representatives(int k) const { return reps_[k]; }

    /// Coordinates of a cocycle in the grade-k basis (throws InternalError
    /// if the vector is not a cocycle).
    F2Vector class_coords(int k, const F2Vector& cocycle) const;

    /// Cochain representative of a coordinate vector.
    F2Vector representative_of(int k, const F2Vector& coords) const;

    /// Coordinates of the unit class (absolute mode, grade 0).
    F2Vector unit() const;

    /// Cochain-level front/back-face product into grade p+q.
    F2Vector cup_cochains(int p, const F2Vector& a, int q, const F2Vector& b) const;

    /// Product of classes in basis coordinates.
    F2Vector cup(int p, const F2Vector& coords_a, int q, const F2Vector& coords_b) const;

    /// Multiplication tensor at bidegree (p,q): row i*betti(q)+j holds the
    /// coordinates of (basis_i . basis_j) in the grade p+q basis.
    const F2Matrix& tensor(int p, int q) const;

private:
    CochainComplex cc_;
    std::vector<F2Matrix> reps_;          // per grade
    std::vector<SpanSolver> coord_solver_;  // coboundary rows then rep rows
    std::vector<int> coboundary_dims_;
    mutable std::mutex tensor_mutex_;
    mutable std::map<std::pair<int, int>, F2Matrix> tensor_cache_;
};

using RingPtr = std::shared_ptr<const CohomologyRing>;

/// Per-grade Betti numbers of a simplicial set (mod 2).
std::vector<int> betti_numbers(const SimplicialSet& s);

inline RingPtr cohomology(CochainComplex cc) {
    return std::make_shared<CohomologyRing>(std::move(cc));
}

/// The map induced on cohomology by a simplicial map f: S -> T, i.e.
/// f*: H*(T) -> H*(S). `mats[k]` sends grade-k coordinates of the domain
/// H*(T) to coordinates of the codomain H*(S).
struct RingMap {
    RingPtr domain;    // H*(T)
    RingPtr codomain;  // H*(S)
    std::vector<F2Matrix> mats;

    F2Vector apply(int k, const F2Vector& coords) const;
    /// Null space in grade k of the domain.
    Subspace kernel_in_grade(int k) const;
};

RingMap induced(const SSetMap& f, RingPtr ring_of_target, RingPtr ring_of_source);

/// The map H*(S, A) -> H*(S) induced by cochain inclusion (relative
/// cochains are cochains vanishing on the subcomplex).
RingMap relative_to_absolute(RingPtr relative, RingPtr absolute);

RingMap compose(const RingMap& second, const RingMap& first);

/// Per-grade check that image(rel_to_abs) equals kernel(restriction) inside
/// H*(S); returns the grades and verdicts for reporting.
bool exactness_holds(const RingMap& rel_to_abs, const RingMap& restriction);

}  // namespace symtc

#endif
