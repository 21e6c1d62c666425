#ifndef SYMTC_SIMPLICIAL_SET_HPP
#define SYMTC_SIMPLICIAL_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "symtc/complex.hpp"

namespace symtc {

/// A possibly-degenerate simplex written in Eilenberg-Zilber normal form:
/// s_{i_1} ... s_{i_k} y with i_1 > ... > i_k, y nondegenerate. `word` holds
/// the index set {i_1,...,i_k} as a bitmask (the order is forced), `dim` and
/// `id` locate y. Total dimension is dim + popcount(word).
struct SimplexKey {
    int32_t dim = 0;
    int32_t id = 0;
    uint32_t word = 0;

    int total_dim() const { return dim + std::popcount(word); }
    bool degenerate() const { return word != 0; }
    auto operator<=>(const SimplexKey&) const = default;
};

/// Normal form of s_j applied after the degeneracy word w
/// (s_j s_i = s_{i+1} s_j for j <= i shifts every index >= j up by one).
inline uint32_t word_insert(uint32_t w, int j) {
    uint32_t low = w & ((uint32_t{1} << j) - 1);
    uint32_t high = (w >> j) << (j + 1);
    return high | low | (uint32_t{1} << j);
}

/// A finite simplicial set: nondegenerate simplices per grade, with every
/// face resolved to (nondegenerate simplex, degeneracy word).
class SimplicialSet {
public:
    SimplicialSet() = default;
    /// faces[n][id] lists d_0..d_n of each nondegenerate n-simplex.
    /// Validates dimensions, ranges and the simplicial identities.
    SimplicialSet(std::vector<int> counts,
                  std::vector<std::vector<std::vector<SimplexKey>>> faces);

    int dimension() const { return static_cast<int>(counts_.size()) - 1; }
    int count(int n) const {
        return (n >= 0 && n < static_cast<int>(counts_.size())) ? counts_[n] : 0;
    }
    const std::vector<int>& counts() const { return counts_; }
    int total_count() const;

    /// Face table lookup for a nondegenerate simplex.
    const SimplexKey& face_of(int dim, int id, int i) const { return faces_[dim][id][i]; }

    /// d_i applied to an arbitrary encoded simplex.
    SimplexKey face(const SimplexKey& x, int i) const;

    /// s_W applied to an encoded simplex (indices of `word` applied
    /// innermost-first, i.e. in increasing order).
    static SimplexKey apply_word(SimplexKey x, uint32_t word);

    /// All encoded simplices of total dimension m, sorted by (dim, id, word).
    std::vector<SimplexKey> simplices_of_total_dim(int m) const;

    /// Exhaustive re-check of the simplicial identities; throws InternalError.
    void validate() const;

private:
    std::vector<int> counts_;
    std::vector<std::vector<std::vector<SimplexKey>>> faces_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

/// A simplicial map given on nondegenerate simplices; the image may be
/// degenerate. Extends to all simplices by f(s_W y) = s_W f(y).
struct SSetMap {
    SSetPtr source;
    SSetPtr target;
    std::vector<std::vector<SimplexKey>> image;  // [dim][id] in source

    SimplexKey apply(const SimplexKey& x) const {
        return SimplicialSet::apply_word(image[x.dim][x.id], x.word);
    }
};

SSetMap identity_map(const SSetPtr& s);
SSetMap compose(const SSetMap& g, const SSetMap& f);  // g after f

/// Checks that the map commutes with every face operator; throws on failure.
void validate(const SSetMap& f);

/// The simplicial set of an ordered simplicial complex: nondegenerate
/// k-simplices are the k-simplices of the closure, faces delete vertices.
SimplicialSet to_simplicial_set(const Complex& c);

/// Alternating sum of nondegenerate simplex counts.
int euler_characteristic(const SimplicialSet& s);

/// Number of connected components (via vertices and 1-simplices).
int component_count(const SimplicialSet& s);

}  // namespace symtc

#endif
