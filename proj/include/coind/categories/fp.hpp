#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coind::categories {

// Small dense matrices over F_p, entries kept in [0,p).
struct FpMatrix {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> a;  // row-major

    FpMatrix() = default;
    FpMatrix(int p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
    FpMatrix(int p_, int r, int c, std::vector<int> entries) : p(p_), rows(r), cols(c), a(std::move(entries)) {}

    int at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
    int& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    std::vector<int> column(int j) const;
    std::vector<int> row(int i) const;

    bool operator==(const FpMatrix& o) const = default;
};

using FpVector = std::vector<int>;

int fp_mod(long x, int p);
int fp_inv(int x, int p);

FpMatrix fp_identity(int p, int n);
FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y);
FpVector fp_apply(const FpMatrix& x, const FpVector& v);
int fp_dot(const FpVector& u, const FpVector& v, int p);
FpMatrix fp_transpose(const FpMatrix& x);
FpMatrix fp_vstack(const FpMatrix& top, const FpMatrix& bottom);
FpMatrix fp_block_diag(const FpMatrix& x, const FpMatrix& y);
FpMatrix fp_row(const FpVector& u, int p);
FpMatrix fp_from_columns(int p, int rows, const std::vector<FpVector>& cols);
FpMatrix fp_rref(const FpMatrix& x);
int fp_rank(const FpMatrix& x);
std::optional<FpMatrix> fp_inverse(const FpMatrix& x);
// rows form the reduced echelon basis of {w : w x = 0} (left annihilator of the columns of x)
FpMatrix fp_left_annihilator(const FpMatrix& x);
std::string fp_to_string(const FpMatrix& x);

// all vectors of F_p^n in lex order (first coordinate most significant)
std::vector<FpVector> fp_vectors(int p, int n);

}  // namespace coind::categories
