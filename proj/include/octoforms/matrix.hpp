#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "octoforms/rational.hpp"

namespace octoforms {

/// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const Rational> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Rational> entries() const noexcept { return data_; }
    [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
        return std::span<const Rational>(data_).subspan(r * cols_, cols_);
    }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t nonzeros() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& s);
    Matrix operator-() const;

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Rational& s) { return lhs *= s; }
    friend Matrix operator*(const Rational& s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact product; throws std::invalid_argument on a.cols != b.rows.
Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<Rational> mat_vec(const Matrix& a, std::span<const Rational> v);

Matrix transpose(const Matrix& a);
bool is_symmetric(const Matrix& a);
bool is_skew(const Matrix& a);
Rational trace(const Matrix& a);

/// [a, b] = ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);
/// ab + ba
Matrix anticommutator(const Matrix& a, const Matrix& b);

/// [[a, b], [c, d]] from four equally sized square blocks.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
/// Kronecker product: block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);
/// diag(a, a, ..., a) with `copies` blocks.
Matrix block_diagonal(const Matrix& a, std::size_t copies);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& a);

/// Frobenius pairing tr(a^T b).
Rational frobenius(const Matrix& a, const Matrix& b);

/// Row-sparse exact matrix. Used where the dense form is too large (field
/// systems on R^512, Lie closures on R^128).
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}
    explicit SparseMatrix(const Matrix& dense);

    static SparseMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return data_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] bool is_zero() const;

    /// Entries of row r, sorted by column, no explicit zeros.
    [[nodiscard]] const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }
    [[nodiscard]] Rational at(std::size_t r, std::size_t c) const;

    /// Sets an entry; zero erases.
    void set(std::size_t r, std::size_t c, const Rational& value);

    [[nodiscard]] Matrix to_dense() const;

    SparseMatrix& operator+=(const SparseMatrix& rhs);
    SparseMatrix& operator-=(const SparseMatrix& rhs);
    SparseMatrix& operator*=(const Rational& s);
    SparseMatrix operator-() const;

    friend SparseMatrix operator+(SparseMatrix lhs, const SparseMatrix& rhs) { return lhs += rhs; }
    friend SparseMatrix operator-(SparseMatrix lhs, const SparseMatrix& rhs) { return lhs -= rhs; }
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

SparseMatrix transpose(const SparseMatrix& a);
std::vector<Rational> mat_vec(const SparseMatrix& a, std::span<const Rational> v);
bool is_skew(const SparseMatrix& a);
bool is_identity(const SparseMatrix& a);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);
/// diag(a, ..., a)
SparseMatrix block_diagonal(const SparseMatrix& a, std::size_t copies);

/// Incrementally maintained basis of a subspace of Q^dim, stored as sparse
/// primitive integer rows in reduced echelon form.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    /// Adds v if it is independent of the current span; returns whether it was.
    bool insert(std::vector<std::pair<std::size_t, Rational>> v);
    [[nodiscard]] bool contains(std::vector<std::pair<std::size_t, Rational>> v) const;
    [[nodiscard]] std::size_t dimension() const noexcept { return rows_.size(); }

private:
    using Row = std::vector<std::pair<std::size_t, Rational>>;
    Row reduce(Row v) const;

    std::size_t dim_;
    std::vector<Row> rows_; // rows_[k] has leading column pivots_[k]
    std::vector<std::size_t> pivots_;
};

/// Dimension of the smallest bracket-closed subspace containing the
/// generators. Throws std::runtime_error once the span exceeds max_dim.
std::size_t lie_closure_dim(std::span<const Matrix> generators, std::size_t max_dim);
std::size_t lie_closure_dim(std::span<const SparseMatrix> generators, std::size_t max_dim);

} // namespace octoforms
