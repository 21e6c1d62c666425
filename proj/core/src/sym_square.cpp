#include "symtc/sym_square.hpp"

#include <algorithm>
#include <map>

#include "symtc/errors.hpp"

namespace symtc {

namespace {

using PairIndex = std::vector<std::map<std::pair<SimplexKey, SimplexKey>, int32_t>>;

/// Enumerate jointly nondegenerate pairs per grade, in lexicographic order.
void enumerate_pairs(const SimplicialSet& x, std::vector<std::vector<ProductPair>>& pairs,
                     PairIndex& index) {
    int dim_product = 2 * x.dimension();
    pairs.assign(dim_product + 1, {});
    index.assign(dim_product + 1, {});
    for (int m = 0; m <= dim_product; ++m) {
        auto encodings = x.simplices_of_total_dim(m);
        for (const auto& a : encodings) {
            for (const auto& b : encodings) {
                if ((a.word & b.word) != 0) continue;  // jointly degenerate
                int32_t id = static_cast<int32_t>(pairs[m].size());
                pairs[m].push_back(ProductPair{a, b});
                index[m].emplace(std::make_pair(a, b), id);
            }
        }
    }
}

/// Resolve the face of a product simplex to (nondegenerate pair, word).
/// The word of the face is the intersection of the component words; the
/// carrier is obtained by cancelling one shared degeneracy at a time.
SimplexKey resolve_pair_face(const SimplicialSet& x, SimplexKey fa, SimplexKey fb,
                             const PairIndex& index) {
    uint32_t shared = fa.word & fb.word;
    uint32_t remaining = shared;
    std::vector<int> strips;
    while (remaining) {
        int j = 31 - std::countl_zero(remaining);
        strips.push_back(j);
        fa = x.face(fa, j + 1);
        fb = x.face(fb, j + 1);
        remaining = fa.word & fb.word;
    }
    // the cancelled degeneracies compose to exactly the recorded word
    uint32_t composed = 0;
    for (auto it = strips.rbegin(); it != strips.rend(); ++it)
        composed = word_insert(composed, *it);
    internal_check(composed == shared, "product face: degeneracy word mismatch");

    int m = fa.total_dim();
    auto it = index[m].find(std::make_pair(fa, fb));
    internal_check(it != index[m].end(), "product face: pair not enumerated");
    return SimplexKey{m, it->second, shared};
}

SSetPtr build_product_sset(const SimplicialSet& x,
                           const std::vector<std::vector<ProductPair>>& pairs,
                           const PairIndex& index) {
    std::vector<int> counts(pairs.size());
    std::vector<std::vector<std::vector<SimplexKey>>> faces(pairs.size());
    for (size_t m = 0; m < pairs.size(); ++m) {
        counts[m] = static_cast<int>(pairs[m].size());
        faces[m].resize(pairs[m].size());
        if (m == 0) continue;
        for (size_t id = 0; id < pairs[m].size(); ++id) {
            const ProductPair& p = pairs[m][id];
            faces[m][id].reserve(m + 1);
            for (int i = 0; i <= static_cast<int>(m); ++i)
                faces[m][id].push_back(resolve_pair_face(x, x.face(p.a, i), x.face(p.b, i), index));
        }
    }
    return std::make_shared<SimplicialSet>(std::move(counts), std::move(faces));
}

}  // namespace

std::vector<std::vector<char>> EquivariantPair::diagonal_mask() const {
    std::vector<std::vector<char>> mask(orbits.size());
    for (size_t m = 0; m < orbits.size(); ++m) {
        mask[m].resize(orbits[m].size(), 0);
        for (size_t o = 0; o < orbits[m].size(); ++o)
            if (orbits[m][o].on_diagonal) mask[m][o] = 1;
    }
    return mask;
}

EquivariantPair product_with_swap(const SSetPtr& x) {
    internal_check(static_cast<bool>(x), "product_with_swap: null input");
    EquivariantPair ep;
    ep.base = x;

    PairIndex index;
    enumerate_pairs(*x, ep.pairs, index);
    ep.total = build_product_sset(*x, ep.pairs, index);

    // swap table and involution
    ep.swap_of.resize(ep.pairs.size());
    ep.involution.source = ep.total;
    ep.involution.target = ep.total;
    ep.involution.image.resize(ep.pairs.size());
    for (size_t m = 0; m < ep.pairs.size(); ++m) {
        ep.swap_of[m].resize(ep.pairs[m].size());
        ep.involution.image[m].resize(ep.pairs[m].size());
        for (size_t id = 0; id < ep.pairs[m].size(); ++id) {
            const ProductPair& p = ep.pairs[m][id];
            auto it = index[m].find(std::make_pair(p.b, p.a));
            internal_check(it != index[m].end(), "swap of enumerated pair missing");
            ep.swap_of[m][id] = it->second;
            ep.involution.image[m][id] = SimplexKey{static_cast<int>(m), it->second, 0};
        }
    }

    // diagonal inclusion X -> X x X
    ep.diagonal_inclusion.source = x;
    ep.diagonal_inclusion.target = ep.total;
    ep.diagonal_inclusion.image.resize(x->dimension() + 1);
    for (int p = 0; p <= x->dimension(); ++p) {
        ep.diagonal_inclusion.image[p].resize(x->count(p));
        for (int id = 0; id < x->count(p); ++id) {
            SimplexKey k{p, id, 0};
            auto it = index[p].find(std::make_pair(k, k));
            internal_check(it != index[p].end(), "diagonal pair missing");
            ep.diagonal_inclusion.image[p][id] = SimplexKey{p, it->second, 0};
        }
    }

    validate(ep.involution);
    validate(ep.diagonal_inclusion);
    // involution is an involution
    for (size_t m = 0; m < ep.swap_of.size(); ++m)
        for (size_t id = 0; id < ep.swap_of[m].size(); ++id)
            internal_check(ep.swap_of[m][ep.swap_of[m][id]] == static_cast<int32_t>(id),
                           "swap is not an involution");
    return ep;
}

EquivariantPair symmetric_square(const SSetPtr& x) {
    EquivariantPair ep = product_with_swap(x);

    // orbits: scan product ids in order, representative = smaller id, which is
    // the lexicographically smaller encoding of the two
    size_t grades = ep.pairs.size();
    ep.orbit_of.resize(grades);
    ep.orbits.resize(grades);
    for (size_t m = 0; m < grades; ++m) {
        ep.orbit_of[m].assign(ep.pairs[m].size(), -1);
        for (size_t id = 0; id < ep.pairs[m].size(); ++id) {
            if (ep.orbit_of[m][id] >= 0) continue;
            int32_t twin = ep.swap_of[m][id];
            int32_t oid = static_cast<int32_t>(ep.orbits[m].size());
            ep.orbit_of[m][id] = oid;
            ep.orbit_of[m][twin] = oid;
            ep.orbits[m].push_back(OrbitInfo{static_cast<int32_t>(id),
                                             twin == static_cast<int32_t>(id)});
        }
    }

    // quotient face tables: the face of an orbit is the orbit of the face of
    // its representative; degeneracy words carry over unchanged
    std::vector<int> counts(grades);
    std::vector<std::vector<std::vector<SimplexKey>>> faces(grades);
    for (size_t m = 0; m < grades; ++m) {
        counts[m] = static_cast<int>(ep.orbits[m].size());
        faces[m].resize(ep.orbits[m].size());
        if (m == 0) continue;
        for (size_t o = 0; o < ep.orbits[m].size(); ++o) {
            SimplexKey rep{static_cast<int>(m), ep.orbits[m][o].rep, 0};
            faces[m][o].reserve(m + 1);
            for (int i = 0; i <= static_cast<int>(m); ++i) {
                SimplexKey f = ep.total->face(rep, i);
                faces[m][o].push_back(SimplexKey{f.dim, ep.orbit_of[f.dim][f.id], f.word});
            }
        }
    }
    ep.quotient = std::make_shared<SimplicialSet>(std::move(counts), std::move(faces));

    ep.projection.source = ep.total;
    ep.projection.target = ep.quotient;
    ep.projection.image.resize(grades);
    for (size_t m = 0; m < grades; ++m) {
        ep.projection.image[m].resize(ep.pairs[m].size());
        for (size_t id = 0; id < ep.pairs[m].size(); ++id)
            ep.projection.image[m][id] =
                SimplexKey{static_cast<int>(m), ep.orbit_of[m][id], 0};
    }

    // dX: a grade-wise copy of X, plus its inclusion into the quotient
    ep.diagonal = std::make_shared<SimplicialSet>(*x);
    ep.image_diagonal_inclusion.source = ep.diagonal;
    ep.image_diagonal_inclusion.target = ep.quotient;
    ep.image_diagonal_inclusion.image.resize(x->dimension() + 1);
    for (int p = 0; p <= x->dimension(); ++p) {
        ep.image_diagonal_inclusion.image[p].resize(x->count(p));
        for (int id = 0; id < x->count(p); ++id) {
            SimplexKey in_product = ep.diagonal_inclusion.image[p][id];
            int32_t oid = ep.orbit_of[in_product.dim][in_product.id];
            ep.image_diagonal_inclusion.image[p][id] = SimplexKey{p, oid, 0};
            internal_check(ep.orbits[p][oid].on_diagonal,
                           "diagonal simplex maps to off-diagonal orbit");
        }
    }

    validate(ep.projection);
    validate(ep.image_diagonal_inclusion);

    // projection . involution = projection
    SSetMap pi = compose(ep.projection, ep.involution);
    internal_check(pi.image == ep.projection.image, "projection not swap-invariant");
    // projection . diagonal_inclusion = image_diagonal_inclusion under dX = X
    SSetMap pd = compose(ep.projection, ep.diagonal_inclusion);
    internal_check(pd.image == ep.image_diagonal_inclusion.image,
                   "diagonal square does not commute");
    return ep;
}

SSetMap diagonal_map(const SSetPtr& x) { return product_with_swap(x).diagonal_inclusion; }

}  // namespace symtc
