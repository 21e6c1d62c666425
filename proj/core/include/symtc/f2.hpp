#ifndef SYMTC_F2_HPP
#define SYMTC_F2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symtc {

/// Dense bit-packed vector over the two-element field.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void operator^=(const F2Vector& o);
    bool is_zero() const;
    /// Index of the first set bit, or -1.
    int leading() const;
    int popcount() const;

    bool operator==(const F2Vector& o) const { return size_ == o.size_ && words_ == o.words_; }

    /// One '0'/'1' character per entry (debug dump format).
    std::string to_string() const;

private:
    friend class F2Matrix;
    int size_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense bit-packed matrix over the two-element field, row major.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), row_words_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * row_words_, 0) {}

    static F2Matrix identity(int n);
    static F2Matrix from_rows(const std::vector<F2Vector>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[idx(r) + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool v) {
        uint64_t m = uint64_t{1} << (c & 63);
        size_t i = idx(r) + (c >> 6);
        if (v) data_[i] |= m; else data_[i] &= ~m;
    }
    void flip(int r, int c) { data_[idx(r) + (c >> 6)] ^= uint64_t{1} << (c & 63); }

    void xor_rows(int dst, int src);  // row dst ^= row src
    void swap_rows(int a, int b);
    bool row_is_zero(int r) const;
    int row_leading(int r) const;  // first set column in row r, or -1

    F2Vector row(int r) const;
    void set_row(int r, const F2Vector& v);
    void append_row(const F2Vector& v);
    void insert_row(int pos, const F2Vector& v);

    F2Matrix transposed() const;
    F2Vector apply(const F2Vector& x) const;  // matrix * column vector
    F2Matrix operator*(const F2Matrix& o) const;

    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Rows of '0'/'1' characters, one row per line (debug dump format).
    std::string to_string() const;

private:
    size_t idx(int r) const { return static_cast<size_t>(r) * row_words_; }
    int rows_ = 0, cols_ = 0;
    int row_words_ = 0;
    std::vector<uint64_t> data_;
};

/// A subspace of F2^ambient held as a reduced-row-echelon basis.
/// Pivot order is deterministic: leftmost nonzero column, topmost row.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Echelonize the rows of m (dropping zero rows).
    static Subspace span_of_rows(const F2Matrix& m);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const F2Matrix& basis() const { return basis_; }

    bool contains(const F2Vector& v) const;
    bool contains(const Subspace& other) const;
    /// v reduced modulo the basis (zero iff contained).
    F2Vector reduce(const F2Vector& v) const;
    /// Insert v if independent; returns true if the dimension grew.
    bool insert(const F2Vector& v);

    bool operator==(const Subspace& o) const;

private:
    int ambient_ = 0;
    F2Matrix basis_;             // RREF rows
    std::vector<int> pivots_;    // pivot column per basis row, increasing
};

/// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<int> rref(F2Matrix& m);

int rank(const F2Matrix& m);

/// Null space {x : m x = 0} as a subspace of F2^cols.
Subspace kernel(const F2Matrix& m);

/// Column space as a subspace of F2^rows.
Subspace image(const F2Matrix& m);

/// Any solution x of m x = b, or nullopt if inconsistent.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

/// Coset representatives for z/b (b must be contained in z).
/// Deterministic given the input bases; throws InputError on violation.
std::vector<F2Vector> quotient_basis(const Subspace& z, const Subspace& b);

/// Incremental span with expression tracking: each added vector is reduced
/// against the rows seen so far, and express() later recovers a combination
/// of the *added* vectors producing a target. Pass the expected number of
/// adds to avoid re-widening the tracking vectors.
class SpanSolver {
public:
    explicit SpanSolver(int ambient, int expected_adds = 0)
        : ambient_(ambient), capacity_(expected_adds > 0 ? expected_adds : 16) {}

    int ambient() const { return ambient_; }
    int added() const { return added_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Returns true if the vector enlarged the span.
    bool add(const F2Vector& v);

    /// Coefficients over the added vectors, or nullopt if target is outside
    /// the span. The coefficient vector has size added().
    std::optional<F2Vector> express(const F2Vector& target) const;

private:
    struct Row {
        F2Vector vec;    // reduced residual
        F2Vector combo;  // expression of vec over the added vectors
        int pivot;
    };
    int ambient_;
    int added_ = 0;
    int capacity_;
    std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace symtc

#endif
