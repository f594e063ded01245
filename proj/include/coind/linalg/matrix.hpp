#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coind/linalg/field.hpp"

namespace coind::linalg {

using Vector = std::vector<Scalar>;

struct Entry {
    std::size_t col;
    Scalar val;
};
using SparseRow = std::vector<Entry>;  // sorted by col, no zeros

// target += a * src
void axpy(SparseRow& target, const Scalar& a, const SparseRow& src, const Field& f);
SparseRow sparse_from_dense(const Vector& v);
Vector dense_from_sparse(const SparseRow& r, std::size_t width);

// Row-major sparse matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_dense(Field f, const std::vector<std::vector<long>>& rows);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
    static Matrix from_sparse_rows(Field f, std::size_t cols, std::vector<SparseRow> rows);
    static Matrix block_diagonal(Field f, const std::vector<Matrix>& blocks);
    static Matrix hstack(Field f, std::size_t rows, const std::vector<Matrix>& parts);
    static Matrix vstack(Field f, std::size_t cols, const std::vector<Matrix>& parts);

    std::size_t rows() const { return nrows_; }
    std::size_t cols() const { return ncols_; }
    const Field& field() const { return field_; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add_to(std::size_t i, std::size_t j, const Scalar& v);
    const SparseRow& row(std::size_t i) const { return data_[i]; }
    void set_row(std::size_t i, SparseRow r);

    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;

    Vector column(std::size_t j) const;
    std::vector<std::vector<Scalar>> dense() const;

    bool operator==(const Matrix& rhs) const;
    bool is_zero() const;
    bool is_identity() const;
    std::size_t nnz() const;
    Scalar trace() const;

private:
    Field field_;
    std::size_t nrows_ = 0;
    std::size_t ncols_ = 0;
    std::vector<SparseRow> data_;
};

// Incremental row echelon form. After finalize() the stored rows are the
// reduced row echelon form, ordered by pivot column.
class Echelon {
public:
    Echelon(Field f, std::size_t width);

    SparseRow reduce(SparseRow v) const;
    bool insert(SparseRow v);
    bool contains(const SparseRow& v) const { return reduce(v).empty(); }
    void finalize();

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const Field& field() const { return field_; }
    const std::vector<SparseRow>& rows() const { return rows_; }
    std::vector<std::size_t> pivots() const;

private:
    Field field_;
    std::size_t width_;
    std::vector<SparseRow> rows_;
    std::vector<long> pivot_row_;  // column -> row index or -1
    bool final_ = false;
};

Echelon row_echelon(const Matrix& a);
std::size_t rank(const Matrix& a);

// basis of {x : A x = 0} as columns, one per free column, in increasing order
Matrix nullspace(const Matrix& a);
std::vector<SparseRow> nullspace_vectors(const Matrix& a);

// basis (as columns) of the column space of A, in reduced echelon form
Matrix column_space(const Matrix& a);

std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& a);

// Factorizes A once; then solves A x = b for many right hand sides.
// The returned solution sets every free variable to zero.
class Solver {
public:
    explicit Solver(const Matrix& a);
    std::optional<Vector> solve(const Vector& b) const;
    std::size_t rank() const { return rank_; }

private:
    Field field_;
    std::size_t n_ = 0, m_ = 0, rank_ = 0;
    std::vector<std::pair<std::size_t, SparseRow>> solution_rows_;  // (pivot col, combination of b)
    std::vector<SparseRow> constraint_rows_;
};

std::string to_string(const Matrix& a);

}  // namespace coind::linalg
