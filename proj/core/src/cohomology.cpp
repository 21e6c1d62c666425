#include "symtc/cohomology.hpp"

#include <algorithm>

#include "symtc/errors.hpp"

namespace symtc {

CochainComplex cochain_complex(const SSetPtr& s,
                               const std::vector<std::vector<char>>* subcomplex) {
    internal_check(static_cast<bool>(s), "cochain_complex: null space");
    CochainComplex cc;
    cc.space = s;
    int top = s->dimension();

    if (subcomplex) {
        if (static_cast<int>(subcomplex->size()) < top + 1) {
            cc.subcomplex = *subcomplex;
            cc.subcomplex.resize(top + 1);
        } else {
            cc.subcomplex = *subcomplex;
        }
        for (int n = 0; n <= top; ++n) {
            cc.subcomplex[n].resize(s->count(n), 0);
            // closure under faces: the nondegenerate part of every face of a
            // subcomplex simplex must lie in the subcomplex
            for (int id = 0; id < s->count(n); ++id) {
                if (!cc.subcomplex[n][id] || n == 0) continue;
                for (int i = 0; i <= n; ++i) {
                    const SimplexKey& f = s->face_of(n, id, i);
                    if (!cc.subcomplex[f.dim][f.id])
                        throw InputError("relative subcomplex is not closed under faces");
                }
            }
        }
    }

    cc.gens.resize(top + 1);
    cc.gen_index.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        cc.gen_index[k].assign(s->count(k), -1);
        for (int id = 0; id < s->count(k); ++id) {
            if (cc.relative() && cc.subcomplex[k][id]) continue;
            cc.gen_index[k][id] = static_cast<int32_t>(cc.gens[k].size());
            cc.gens[k].push_back(id);
        }
    }

    cc.delta.resize(top + 1);
    for (int k = 0; k < top; ++k) {
        F2Matrix d(static_cast<int>(cc.gens[k + 1].size()), static_cast<int>(cc.gens[k].size()));
        for (size_t row = 0; row < cc.gens[k + 1].size(); ++row) {
            int32_t y = cc.gens[k + 1][row];
            for (int i = 0; i <= k + 1; ++i) {
                const SimplexKey& f = s->face_of(k + 1, y, i);
                if (f.degenerate()) continue;  // normalized chains
                int32_t col = cc.gen_index[k][f.id];
                if (col >= 0) d.flip(static_cast<int>(row), col);
            }
        }
        cc.delta[k] = std::move(d);
    }
    cc.delta[top] = F2Matrix(0, static_cast<int>(cc.gens[top].size()));

    // complex axiom
    for (int k = 0; k + 1 < top; ++k) {
        F2Matrix sq = cc.delta[k + 1] * cc.delta[k];
        for (int r = 0; r < sq.rows(); ++r)
            internal_check(sq.row_is_zero(r), "coboundary squared is nonzero");
    }
    return cc;
}

CohomologyRing::CohomologyRing(CochainComplex cc) : cc_(std::move(cc)) {
    int top = cc_.top_grade();
    reps_.resize(top + 1);
    coboundary_dims_.resize(top + 1, 0);
    coord_solver_.reserve(top + 1);
    for (int k = 0; k <= top; ++k) {
        int n = cc_.gen_count(k);
        Subspace cocycles = kernel(cc_.delta[k]);
        Subspace coboundaries =
            (k == 0) ? Subspace::span_of_rows(F2Matrix(0, n)) : image(cc_.delta[k - 1]);
        std::vector<F2Vector> reps = quotient_basis(cocycles, coboundaries);
        reps_[k] = F2Matrix::from_rows(reps, n);
        coboundary_dims_[k] = coboundaries.dim();

        SpanSolver solver(n, coboundaries.dim() + static_cast<int>(reps.size()));
        for (int r = 0; r < coboundaries.basis().rows(); ++r)
            solver.add(coboundaries.basis().row(r));
        for (const auto& rep : reps) solver.add(rep);
        coord_solver_.push_back(std::move(solver));
    }
}

std::vector<int> CohomologyRing::betti_vector() const {
    std::vector<int> b(top_grade() + 1);
    for (int k = 0; k <= top_grade(); ++k) b[k] = betti(k);
    return b;
}

F2Vector CohomologyRing::class_coords(int k, const F2Vector& cocycle) const {
    if (k > top_grade()) {
        internal_check(cocycle.size() == 0, "class_coords: grade out of range");
        return F2Vector(0);
    }
    auto combo = coord_solver_[k].express(cocycle);
    internal_check(combo.has_value(), "class_coords: vector is not a cocycle");
    F2Vector out(betti(k));
    for (int i = 0; i < betti(k); ++i)
        if (combo->get(coboundary_dims_[k] + i)) out.set(i, true);
    return out;
}

F2Vector CohomologyRing::representative_of(int k, const F2Vector& coords) const {
    F2Vector out(cc_.gen_count(k));
    if (k > top_grade()) return out;
    for (int i = 0; i < reps_[k].rows(); ++i)
        if (coords.get(i)) out ^= reps_[k].row(i);
    return out;
}

F2Vector CohomologyRing::unit() const {
    internal_check(!is_relative(), "unit class exists only in absolute mode");
    F2Vector ones(cc_.gen_count(0));
    for (int i = 0; i < ones.size(); ++i) ones.set(i, true);
    return class_coords(0, ones);
}

F2Vector CohomologyRing::cup_cochains(int p, const F2Vector& a, int q,
                                      const F2Vector& b) const {
    int n = p + q;
    F2Vector out(cc_.gen_count(n));
    if (n > top_grade()) return out;
    const SimplicialSet& s = *cc_.space;

    auto eval = [&](const F2Vector& vec, int grade, const SimplexKey& key) -> bool {
        if (key.degenerate()) return false;  // normalized cochains kill degeneracies
        int32_t idx = cc_.gen_index[grade][key.id];
        if (idx < 0) return false;  // vanishes on the subcomplex
        return vec.get(idx);
    };

    for (size_t gi = 0; gi < cc_.gens[n].size(); ++gi) {
        SimplexKey x{n, cc_.gens[n][gi], 0};
        SimplexKey front = x;
        for (int i = n; i > p; --i) front = s.face(front, i);
        if (!eval(a, p, front)) continue;
        SimplexKey back = x;
        for (int i = 0; i < p; ++i) back = s.face(back, 0);
        if (!eval(b, q, back)) continue;
        out.flip(static_cast<int>(gi));
    }
    return out;
}

F2Vector CohomologyRing::cup(int p, const F2Vector& coords_a, int q,
                             const F2Vector& coords_b) const {
    int n = p + q;
    if (n > top_grade()) return F2Vector(0);
    F2Vector a = representative_of(p, coords_a);
    F2Vector b = representative_of(q, coords_b);
    return class_coords(n, cup_cochains(p, a, q, b));
}

const F2Matrix& CohomologyRing::tensor(int p, int q) const {
    std::lock_guard<std::mutex> lock(tensor_mutex_);
    auto key = std::make_pair(p, q);
    auto it = tensor_cache_.find(key);
    if (it != tensor_cache_.end()) return it->second;

    int dp = betti(p), dq = betti(q), dn = betti(p + q);
    F2Matrix t(dp * dq, dn);
    for (int i = 0; i < dp; ++i) {
        F2Vector ei(dp);
        ei.set(i, true);
        for (int j = 0; j < dq; ++j) {
            F2Vector ej(dq);
            ej.set(j, true);
            t.set_row(i * dq + j, cup(p, ei, q, ej));
        }
    }
    return tensor_cache_.emplace(key, std::move(t)).first->second;
}

std::vector<int> betti_numbers(const SimplicialSet& s) {
    // rank bookkeeping without building the full ring
    CochainComplex cc = cochain_complex(std::make_shared<SimplicialSet>(s));
    std::vector<int> b(cc.top_grade() + 1);
    for (int k = 0; k <= cc.top_grade(); ++k) {
        int cycles = cc.gen_count(k) - rank(cc.delta[k]);
        int boundaries = (k == 0) ? 0 : rank(cc.delta[k - 1]);
        b[k] = cycles - boundaries;
    }
    return b;
}

F2Vector RingMap::apply(int k, const F2Vector& coords) const {
    if (k >= static_cast<int>(mats.size())) return F2Vector(codomain->betti(k));
    return mats[k].apply(coords);
}

Subspace RingMap::kernel_in_grade(int k) const {
    if (k >= static_cast<int>(mats.size())) {
        // beyond the codomain's top grade everything maps to zero
        return Subspace::span_of_rows(F2Matrix::identity(domain->betti(k)));
    }
    return kernel(mats[k]);
}

RingMap induced(const SSetMap& f, RingPtr ring_of_target, RingPtr ring_of_source) {
    internal_check(f.target.get() == ring_of_target->space().get(),
                   "induced: target ring mismatch");
    internal_check(f.source.get() == ring_of_source->space().get(),
                   "induced: source ring mismatch");
    const CochainComplex& ct = ring_of_target->cochains();
    const CochainComplex& cs = ring_of_source->cochains();

    RingMap out;
    out.domain = ring_of_target;
    out.codomain = ring_of_source;
    int grades = std::max(ring_of_target->top_grade(), ring_of_source->top_grade()) + 1;
    out.mats.resize(grades);
    for (int k = 0; k < grades; ++k) {
        int dt = ring_of_target->betti(k);
        int ds = ring_of_source->betti(k);
        F2Matrix m(ds, dt);
        for (int j = 0; j < dt; ++j) {
            F2Vector ej(dt);
            ej.set(j, true);
            F2Vector rep = ring_of_target->representative_of(k, ej);
            // pull back along f on generators
            F2Vector pulled(cs.gen_count(k));
            if (k <= cs.top_grade()) {
                for (size_t gi = 0; gi < cs.gens[k].size(); ++gi) {
                    SimplexKey img = f.image[k][cs.gens[k][gi]];
                    if (img.degenerate()) continue;
                    if (k > ct.top_grade()) continue;
                    int32_t idx = ct.gen_index[k][img.id];
                    if (idx >= 0 && rep.get(idx)) pulled.flip(static_cast<int>(gi));
                }
            }
            F2Vector coords = ring_of_source->class_coords(k, pulled);
            for (int r = 0; r < ds; ++r)
                if (coords.get(r)) m.set(r, j, true);
        }
        out.mats[k] = std::move(m);
    }
    return out;
}

RingMap relative_to_absolute(RingPtr relative, RingPtr absolute) {
    internal_check(relative->is_relative() && !absolute->is_relative(),
                   "relative_to_absolute: wrong ring flavors");
    internal_check(relative->space().get() == absolute->space().get(),
                   "relative_to_absolute: rings live on different spaces");
    const CochainComplex& cr = relative->cochains();
    const CochainComplex& ca = absolute->cochains();

    RingMap out;
    out.domain = relative;
    out.codomain = absolute;
    out.mats.resize(relative->top_grade() + 1);
    for (int k = 0; k <= relative->top_grade(); ++k) {
        int dr = relative->betti(k);
        int da = absolute->betti(k);
        F2Matrix m(da, dr);
        for (int j = 0; j < dr; ++j) {
            F2Vector ej(dr);
            ej.set(j, true);
            F2Vector rep = relative->representative_of(k, ej);
            // a relative cochain is in particular an absolute cochain
            F2Vector widened(ca.gen_count(k));
            for (size_t gi = 0; gi < cr.gens[k].size(); ++gi) {
                if (!rep.get(static_cast<int>(gi))) continue;
                int32_t abs_idx = ca.gen_index[k][cr.gens[k][gi]];
                internal_check(abs_idx >= 0, "relative generator missing from absolute complex");
                widened.flip(abs_idx);
            }
            F2Vector coords = absolute->class_coords(k, widened);
            for (int r = 0; r < da; ++r)
                if (coords.get(r)) m.set(r, j, true);
        }
        out.mats[k] = std::move(m);
    }
    return out;
}

RingMap compose(const RingMap& second, const RingMap& first) {
    internal_check(first.codomain.get() == second.domain.get(), "RingMap compose mismatch");
    RingMap out;
    out.domain = first.domain;
    out.codomain = second.codomain;
    size_t grades = std::min(first.mats.size(), second.mats.size());
    out.mats.resize(grades);
    for (size_t k = 0; k < grades; ++k) out.mats[k] = second.mats[k] * first.mats[k];
    return out;
}

bool exactness_holds(const RingMap& rel_to_abs, const RingMap& restriction) {
    internal_check(rel_to_abs.codomain.get() == restriction.domain.get(),
                   "exactness check: maps do not share the middle ring");
    int top = restriction.domain->top_grade();
    for (int k = 0; k <= top; ++k) {
        Subspace img = (k < static_cast<int>(rel_to_abs.mats.size()))
                           ? image(rel_to_abs.mats[k])
                           : Subspace(restriction.domain->betti(k));
        Subspace ker = restriction.kernel_in_grade(k);
        if (!(img == ker)) return false;
    }
    return true;
}

}  // namespace symtc
