#include "symtc/f2.hpp"

#include <algorithm>
#include <bit>

#include "symtc/errors.hpp"

namespace symtc {

void F2Vector::operator^=(const F2Vector& o) {
    internal_check(size_ == o.size_, "F2Vector xor: size mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
}

bool F2Vector::is_zero() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

int F2Vector::leading() const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

int F2Vector::popcount() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

std::string F2Vector::to_string() const {
    std::string s(size_, '0');
    for (int i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows, int cols) {
    F2Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
    return m;
}

void F2Matrix::xor_rows(int dst, int src) {
    uint64_t* d = data_.data() + idx(dst);
    const uint64_t* s = data_.data() + idx(src);
    for (int i = 0; i < row_words_; ++i) d[i] ^= s[i];
}

void F2Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* pa = data_.data() + idx(a);
    uint64_t* pb = data_.data() + idx(b);
    for (int i = 0; i < row_words_; ++i) std::swap(pa[i], pb[i]);
}

bool F2Matrix::row_is_zero(int r) const {
    const uint64_t* p = data_.data() + idx(r);
    for (int i = 0; i < row_words_; ++i)
        if (p[i]) return false;
    return true;
}

int F2Matrix::row_leading(int r) const {
    const uint64_t* p = data_.data() + idx(r);
    for (int i = 0; i < row_words_; ++i)
        if (p[i]) return i * 64 + std::countr_zero(p[i]);
    return -1;
}

F2Vector F2Matrix::row(int r) const {
    F2Vector v(cols_);
    const uint64_t* p = data_.data() + idx(r);
    std::copy(p, p + row_words_, v.words_.begin());
    return v;
}

void F2Matrix::set_row(int r, const F2Vector& v) {
    internal_check(v.size() == cols_, "set_row: size mismatch");
    std::copy(v.words_.begin(), v.words_.end(), data_.begin() + idx(r));
}

void F2Matrix::append_row(const F2Vector& v) {
    internal_check(v.size() == cols_ || rows_ == 0, "append_row: size mismatch");
    if (rows_ == 0 && cols_ == 0) {
        cols_ = v.size();
        row_words_ = (cols_ + 63) / 64;
    }
    data_.resize(data_.size() + row_words_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

void F2Matrix::insert_row(int pos, const F2Vector& v) {
    append_row(v);
    std::rotate(data_.begin() + static_cast<long>(pos) * row_words_,
                data_.begin() + static_cast<long>(rows_ - 1) * row_words_, data_.end());
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = data_.data() + idx(r);
        for (int wi = 0; wi < row_words_; ++wi) {
            uint64_t w = p[wi];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                t.set(wi * 64 + b, r, true);
            }
        }
    }
    return t;
}

F2Vector F2Matrix::apply(const F2Vector& x) const {
    internal_check(x.size() == cols_, "apply: size mismatch");
    F2Vector y(rows_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = data_.data() + idx(r);
        uint64_t acc = 0;
        for (size_t i = 0; i < x.words_.size(); ++i) acc ^= p[i] & x.words_[i];
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    internal_check(cols_ == o.rows_, "matrix product: shape mismatch");
    F2Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = data_.data() + idx(r);
        uint64_t* orow = out.data_.data() + out.idx(r);
        for (int wi = 0; wi < row_words_; ++wi) {
            uint64_t w = p[wi];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                const uint64_t* src = o.data_.data() + o.idx(wi * 64 + b);
                for (int k = 0; k < o.row_words_; ++k) orow[k] ^= src[k];
            }
        }
    }
    return out;
}

std::string F2Matrix::to_string() const {
    std::string s;
    s.reserve(static_cast<size_t>(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

std::vector<int> rref(F2Matrix& m) {
    std::vector<int> pivots;
    int top = 0;
    for (int col = 0; col < m.cols() && top < m.rows(); ++col) {
        int pr = -1;
        for (int r = top; r < m.rows(); ++r) {
            if (m.get(r, col)) { pr = r; break; }
        }
        if (pr < 0) continue;
        m.swap_rows(top, pr);
        for (int r = 0; r < m.rows(); ++r)
            if (r != top && m.get(r, col)) m.xor_rows(r, top);
        pivots.push_back(col);
        ++top;
    }
    return pivots;
}

int rank(const F2Matrix& m) {
    F2Matrix c = m;
    return static_cast<int>(rref(c).size());
}

Subspace Subspace::span_of_rows(const F2Matrix& m) {
    F2Matrix c = m;
    std::vector<int> piv = rref(c);
    Subspace s(m.cols());
    s.pivots_ = piv;
    s.basis_ = F2Matrix(static_cast<int>(piv.size()), m.cols());
    for (size_t r = 0; r < piv.size(); ++r) s.basis_.set_row(static_cast<int>(r), c.row(static_cast<int>(r)));
    return s;
}

F2Vector Subspace::reduce(const F2Vector& v) const {
    internal_check(v.size() == ambient_, "Subspace::reduce: size mismatch");
    F2Vector r = v;
    for (int i = 0; i < basis_.rows(); ++i)
        if (r.get(pivots_[i])) r ^= basis_.row(i);
    return r;
}

bool Subspace::contains(const F2Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::insert(const F2Vector& v) {
    F2Vector r = reduce(v);
    int p = r.leading();
    if (p < 0) return false;
    // keep RREF: clear column p in existing rows, insert in pivot order
    int pos = 0;
    while (pos < static_cast<int>(pivots_.size()) && pivots_[pos] < p) ++pos;
    basis_.insert_row(pos, r);
    pivots_.insert(pivots_.begin() + pos, p);
    for (int i = 0; i < basis_.rows(); ++i)
        if (i != pos && basis_.get(i, p)) basis_.xor_rows(i, pos);
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace kernel(const F2Matrix& m) {
    F2Matrix c = m;
    std::vector<int> piv = rref(c);
    Subspace s(m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<F2Vector> rows;
    for (int col = 0; col < m.cols(); ++col) {
        if (is_pivot[col]) continue;
        F2Vector v(m.cols());
        v.set(col, true);
        for (size_t r = 0; r < piv.size(); ++r)
            if (c.get(static_cast<int>(r), col)) v.set(piv[r], true);
        rows.push_back(std::move(v));
    }
    return Subspace::span_of_rows(F2Matrix::from_rows(rows, m.cols()));
}

Subspace image(const F2Matrix& m) { return Subspace::span_of_rows(m.transposed()); }

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
    // row-reduce the augmented matrix [m | b]
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    std::vector<int> piv = rref(aug);
    F2Vector x(m.cols());
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == m.cols()) return std::nullopt;  // pivot in augmented column
        if (aug.get(static_cast<int>(r), m.cols())) x.set(piv[r], true);
    }
    return x;
}

std::vector<F2Vector> quotient_basis(const Subspace& z, const Subspace& b) {
    if (z.ambient() != b.ambient()) throw InputError("quotient_basis: ambient mismatch");
    if (!z.contains(b)) throw InputError("quotient_basis: denominator is not a subspace of numerator");
    Subspace acc = b;
    std::vector<F2Vector> reps;
    for (int i = 0; i < z.basis().rows(); ++i) {
        F2Vector r = acc.reduce(z.basis().row(i));
        if (!r.is_zero()) {
            reps.push_back(r);
            acc.insert(r);
        }
    }
    internal_check(static_cast<int>(reps.size()) == z.dim() - b.dim(),
                   "quotient_basis: dimension bookkeeping failed");
    return reps;
}

bool SpanSolver::add(const F2Vector& v) {
    internal_check(v.size() == ambient_, "SpanSolver::add: size mismatch");
    if (added_ == capacity_) {  // grow tracking width, amortized
        capacity_ = capacity_ * 2;
        for (auto& row : rows_) {
            F2Vector wide(capacity_);
            for (int i = 0; i < added_; ++i)
                if (row.combo.get(i)) wide.set(i, true);
            row.combo = std::move(wide);
        }
    }
    F2Vector res = v;
    F2Vector combo(capacity_);
    combo.set(added_, true);
    ++added_;
    for (const auto& row : rows_) {
        if (res.get(row.pivot)) {
            res ^= row.vec;
            combo ^= row.combo;
        }
    }
    int p = res.leading();
    if (p < 0) return false;
    Row nr{std::move(res), std::move(combo), p};
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                               [](const Row& r, int piv) { return r.pivot < piv; });
    rows_.insert(it, std::move(nr));
    return true;
}

std::optional<F2Vector> SpanSolver::express(const F2Vector& target) const {
    internal_check(target.size() == ambient_, "SpanSolver::express: size mismatch");
    F2Vector res = target;
    F2Vector acc(capacity_);
    for (const auto& row : rows_) {
        if (res.get(row.pivot)) {
            res ^= row.vec;
            acc ^= row.combo;
        }
    }
    if (!res.is_zero()) return std::nullopt;
    F2Vector combo(added_);
    for (int i = 0; i < added_; ++i)
        if (acc.get(i)) combo.set(i, true);
    return combo;
}

}  // namespace symtc
