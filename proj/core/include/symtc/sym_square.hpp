#ifndef SYMTC_SYM_SQUARE_HPP
#define SYMTC_SYM_SQUARE_HPP

#include <cstdint>
#include <vector>

#include "symtc/simplicial_set.hpp"

namespace symtc {

/// A nondegenerate m-simplex of X x X: a jointly nondegenerate pair of
/// encoded m-simplices of X (the degeneracy words share no index).
struct ProductPair {
    SimplexKey a, b;
    bool operator==(const ProductPair&) const = default;
};

/// An orbit of the coordinate swap on nondegenerate product simplices.
/// The representative is the lexicographically smaller of (a,b), (b,a).
struct OrbitInfo {
    int32_t rep = 0;          // product simplex id of the representative
    bool on_diagonal = false; // representative has equal components
};

/// X x X with its swap involution, and (when built by symmetric_square)
/// the quotient SP^2(X), the diagonal dX and the canonical maps.
struct EquivariantPair {
    SSetPtr base;      // X
    SSetPtr total;     // X x X
    SSetPtr quotient;  // SP^2(X); null when only the product was built
    SSetPtr diagonal;  // dX as its own simplicial set (grade-wise copy of X)

    SSetMap involution;                // total -> total, (a,b) -> (b,a)
    SSetMap diagonal_inclusion;        // base -> total, s -> (s,s)
    SSetMap projection;                // total -> quotient
    SSetMap image_diagonal_inclusion;  // diagonal -> quotient

    // provenance tables, indexed by grade then id
    std::vector<std::vector<ProductPair>> pairs;  // product id -> components
    std::vector<std::vector<int32_t>> swap_of;    // product id -> swapped id
    std::vector<std::vector<int32_t>> orbit_of;   // product id -> orbit id
    std::vector<std::vector<OrbitInfo>> orbits;   // orbit id -> info

    /// Per-grade mask over quotient simplices: 1 on the dX subcomplex.
    std::vector<std::vector<char>> diagonal_mask() const;
};

/// Build X x X with the swap involution (quotient fields left empty).
EquivariantPair product_with_swap(const SSetPtr& x);

/// Build the full symmetric square package.
EquivariantPair symmetric_square(const SSetPtr& x);

/// The diagonal X -> X x X (builds the product; prefer the field on
/// EquivariantPair when one is already in hand).
SSetMap diagonal_map(const SSetPtr& x);

}  // namespace symtc

#endif
