#include "symtc/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "symtc/errors.hpp"

namespace symtc {

SimplicialSet::SimplicialSet(std::vector<int> counts,
                             std::vector<std::vector<std::vector<SimplexKey>>> faces)
    : counts_(std::move(counts)), faces_(std::move(faces)) {
    while (!counts_.empty() && counts_.back() == 0) {
        counts_.pop_back();
        faces_.pop_back();
    }
    internal_check(!counts_.empty(), "simplicial set with no simplices");
    validate();
}

int SimplicialSet::total_count() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

SimplexKey SimplicialSet::apply_word(SimplexKey x, uint32_t word) {
    while (word) {
        int j = std::countr_zero(word);
        word &= word - 1;
        x.word = word_insert(x.word, j);
    }
    return x;
}

SimplexKey SimplicialSet::face(const SimplexKey& x, int i) const {
    internal_check(i >= 0 && i <= x.total_dim(), "face index out of range");
    // walk d_i past the degeneracy word, outermost (largest) index first
    int cur = i;
    uint32_t w = x.word;
    int out[32];
    int nout = 0;
    while (w != 0) {
        int top = 31 - std::countl_zero(w);
        if (cur < top) {  // d_i s_t = s_{t-1} d_i
            out[nout++] = top - 1;
            w &= ~(uint32_t{1} << top);
        } else if (cur == top || cur == top + 1) {  // d_t s_t = d_{t+1} s_t = id
            SimplexKey r{x.dim, x.id, w & ~(uint32_t{1} << top)};
            for (int k = nout - 1; k >= 0; --k) r.word = word_insert(r.word, out[k]);
            return r;
        } else {  // d_i s_t = s_t d_{i-1}
            out[nout++] = top;
            w &= ~(uint32_t{1} << top);
            --cur;
        }
    }
    SimplexKey r = faces_[x.dim][x.id][cur];
    for (int k = nout - 1; k >= 0; --k) r.word = word_insert(r.word, out[k]);
    return r;
}

std::vector<SimplexKey> SimplicialSet::simplices_of_total_dim(int m) const {
    std::vector<SimplexKey> out;
    internal_check(m >= 0 && m < 31, "total dimension out of supported range");
    for (int p = 0; p <= std::min(m, dimension()); ++p) {
        int bits = m - p;
        for (int id = 0; id < counts_[p]; ++id) {
            for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
                if (std::popcount(mask) != bits) continue;
                out.push_back(SimplexKey{p, id, mask});
            }
        }
    }
    return out;
}

void SimplicialSet::validate() const {
    internal_check(counts_.size() == faces_.size(), "counts/faces grade mismatch");
    for (int n = 0; n <= dimension(); ++n) {
        internal_check(static_cast<int>(faces_[n].size()) == counts_[n],
                       "face table size mismatch");
        for (int id = 0; id < counts_[n]; ++id) {
            const auto& fs = faces_[n][id];
            internal_check(static_cast<int>(fs.size()) == (n == 0 ? 0 : n + 1),
                           "wrong number of faces");
            for (const auto& f : fs) {
                internal_check(f.total_dim() == n - 1, "face has wrong dimension");
                internal_check(f.dim >= 0 && f.dim < n, "face carrier dimension bad");
                internal_check(f.id >= 0 && f.id < counts_[f.dim], "face id out of range");
            }
        }
    }
    // simplicial identities d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= dimension(); ++n) {
        for (int id = 0; id < counts_[n]; ++id) {
            SimplexKey x{n, id, 0};
            for (int j = 1; j <= n; ++j) {
                SimplexKey dj = face(x, j);
                for (int i = 0; i < j; ++i) {
                    SimplexKey lhs = face(dj, i);
                    SimplexKey rhs = face(face(x, i), j - 1);
                    internal_check(lhs == rhs, "simplicial identity violated");
                }
            }
        }
    }
}

SSetMap identity_map(const SSetPtr& s) {
    SSetMap f;
    f.source = s;
    f.target = s;
    f.image.resize(s->dimension() + 1);
    for (int n = 0; n <= s->dimension(); ++n) {
        f.image[n].reserve(s->count(n));
        for (int id = 0; id < s->count(n); ++id) f.image[n].push_back(SimplexKey{n, id, 0});
    }
    return f;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
    internal_check(f.target.get() == g.source.get(), "compose: maps do not chain");
    SSetMap h;
    h.source = f.source;
    h.target = g.target;
    h.image.resize(f.image.size());
    for (size_t n = 0; n < f.image.size(); ++n) {
        h.image[n].reserve(f.image[n].size());
        for (const auto& k : f.image[n]) h.image[n].push_back(g.apply(k));
    }
    return h;
}

void validate(const SSetMap& f) {
    internal_check(f.source && f.target, "map without source/target");
    internal_check(static_cast<int>(f.image.size()) == f.source->dimension() + 1,
                   "map image table has wrong grade count");
    for (int n = 0; n <= f.source->dimension(); ++n) {
        internal_check(static_cast<int>(f.image[n].size()) == f.source->count(n),
                       "map image table size mismatch");
        for (int id = 0; id < f.source->count(n); ++id) {
            const SimplexKey& y = f.image[n][id];
            internal_check(y.total_dim() == n, "map does not preserve dimension");
            internal_check(y.id >= 0 && y.id < f.target->count(y.dim),
                           "map image id out of range");
            for (int i = 0; i <= n && n > 0; ++i) {
                SimplexKey lhs = f.target->face(y, i);
                SimplexKey rhs = f.apply(f.source->face(SimplexKey{n, id, 0}, i));
                internal_check(lhs == rhs, "map does not commute with faces");
            }
        }
    }
}

SimplicialSet to_simplicial_set(const Complex& c) {
    auto grades = closure(c);
    std::vector<std::map<std::vector<int>, int>> index(grades.size());
    for (size_t n = 0; n < grades.size(); ++n)
        for (size_t id = 0; id < grades[n].size(); ++id) index[n][grades[n][id]] = static_cast<int>(id);

    std::vector<int> counts(grades.size());
    std::vector<std::vector<std::vector<SimplexKey>>> faces(grades.size());
    for (size_t n = 0; n < grades.size(); ++n) {
        counts[n] = static_cast<int>(grades[n].size());
        faces[n].resize(grades[n].size());
        if (n == 0) continue;
        for (size_t id = 0; id < grades[n].size(); ++id) {
            const auto& tuple = grades[n][id];
            for (size_t i = 0; i < tuple.size(); ++i) {
                std::vector<int> sub = tuple;
                sub.erase(sub.begin() + static_cast<long>(i));
                auto it = index[n - 1].find(sub);
                internal_check(it != index[n - 1].end(), "closure is missing a face");
                faces[n][id].push_back(SimplexKey{static_cast<int>(n) - 1, it->second, 0});
            }
        }
    }
    return SimplicialSet(std::move(counts), std::move(faces));
}

int euler_characteristic(const SimplicialSet& s) {
    int chi = 0;
    for (int n = 0; n <= s.dimension(); ++n) chi += (n % 2 == 0) ? s.count(n) : -s.count(n);
    return chi;
}

int component_count(const SimplicialSet& s) {
    int nv = s.count(0);
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int e = 0; e < s.count(1); ++e) {
        int a = find(s.face_of(1, e, 0).id);
        int b = find(s.face_of(1, e, 1).id);
        if (a != b) parent[a] = b;
    }
    int comps = 0;
    for (int v = 0; v < nv; ++v)
        if (find(v) == v) ++comps;
    return comps;
}

}  // namespace symtc
