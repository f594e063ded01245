#include "coind/categories/fp.hpp"

#include <sstream>

#include "coind/error.hpp"

namespace coind::categories {

int fp_mod(long x, int p) {
    long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int fp_inv(int x, int p) {
    x = fp_mod(x, p);
    if (x == 0) throw DomainError("zero has no inverse");
    for (int y = 1; y < p; ++y)
        if ((x * y) % p == 1) return y;
    throw DomainError("no inverse");
}

std::vector<int> FpMatrix::column(int j) const {
    std::vector<int> v(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

std::vector<int> FpMatrix::row(int i) const {
    std::vector<int> v(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
    return v;
}

FpMatrix fp_identity(int p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y) {
    if (x.cols != y.rows || x.p != y.p) throw CompositionError("F_p matrix shape mismatch");
    FpMatrix z(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            long s = 0;
            for (int k = 0; k < x.cols; ++k) s += x.at(i, k) * y.at(k, j);
            z.at(i, j) = fp_mod(s, x.p);
        }
    return z;
}

FpVector fp_apply(const FpMatrix& x, const FpVector& v) {
    if (static_cast<int>(v.size()) != x.cols) throw DomainError("vector length mismatch");
    FpVector out(static_cast<std::size_t>(x.rows));
    for (int i = 0; i < x.rows; ++i) {
        long s = 0;
        for (int k = 0; k < x.cols; ++k) s += x.at(i, k) * v[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(i)] = fp_mod(s, x.p);
    }
    return out;
}

int fp_dot(const FpVector& u, const FpVector& v, int p) {
    if (u.size() != v.size()) throw DomainError("vector length mismatch");
    long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return fp_mod(s, p);
}

FpMatrix fp_transpose(const FpMatrix& x) {
    FpMatrix t(x.p, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) t.at(j, i) = x.at(i, j);
    return t;
}

FpMatrix fp_vstack(const FpMatrix& top, const FpMatrix& bottom) {
    if (top.cols != bottom.cols) throw DomainError("vstack width mismatch");
    FpMatrix m(top.p, top.rows + bottom.rows, top.cols);
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < top.cols; ++j) m.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows; ++i)
        for (int j = 0; j < top.cols; ++j) m.at(top.rows + i, j) = bottom.at(i, j);
    return m;
}

FpMatrix fp_block_diag(const FpMatrix& x, const FpMatrix& y) {
    FpMatrix m(x.p, x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) m.at(x.rows + i, x.cols + j) = y.at(i, j);
    return m;
}

FpMatrix fp_row(const FpVector& u, int p) {
    FpMatrix m(p, 1, static_cast<int>(u.size()));
    for (std::size_t j = 0; j < u.size(); ++j) m.a[j] = fp_mod(u[j], p);
    return m;
}

FpMatrix fp_from_columns(int p, int rows, const std::vector<FpVector>& cols) {
    FpMatrix m(p, rows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = fp_mod(cols[j][static_cast<std::size_t>(i)], p);
    return m;
}

FpMatrix fp_rref(const FpMatrix& x) {
    FpMatrix m = x;
    int p = m.p;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        int s = fp_inv(m.at(r, c), p);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = (m.at(r, j) * s) % p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            int f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = fp_mod(m.at(i, j) - f * m.at(r, j), p);
        }
        ++r;
    }
    return m;
}

int fp_rank(const FpMatrix& x) {
    FpMatrix m = fp_rref(x);
    int r = 0;
    for (int i = 0; i < m.rows; ++i) {
        bool nz = false;
        for (int j = 0; j < m.cols; ++j) nz = nz || m.at(i, j) != 0;
        r += nz ? 1 : 0;
    }
    return r;
}

std::optional<FpMatrix> fp_inverse(const FpMatrix& x) {
    if (x.rows != x.cols) return std::nullopt;
    int n = x.rows;
    FpMatrix aug(x.p, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
        aug.at(i, n + i) = 1;
    }
    FpMatrix r = fp_rref(aug);
    FpMatrix inv(x.p, n, n);
    for (int i = 0; i < n; ++i) {
        if (r.at(i, i) != 1) return std::nullopt;
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    }
    return inv;
}

FpMatrix fp_left_annihilator(const FpMatrix& x) {
    // solve x^t w = 0
    FpMatrix t = fp_rref(fp_transpose(x));
    int n = x.rows;
    int p = x.p;
    std::vector<int> pivot_of_row;
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < t.rows; ++i) {
        for (int j = 0; j < n; ++j)
            if (t.at(i, j) != 0) {
                pivot_of_row.push_back(j);
                is_pivot[static_cast<std::size_t>(j)] = 1;
                break;
            }
    }
    std::vector<FpVector> basis;
    for (int fcol = 0; fcol < n; ++fcol) {
        if (is_pivot[static_cast<std::size_t>(fcol)]) continue;
        FpVector w(static_cast<std::size_t>(n), 0);
        w[static_cast<std::size_t>(fcol)] = 1;
        for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
            w[static_cast<std::size_t>(pivot_of_row[i])] = fp_mod(-t.at(static_cast<int>(i), fcol), p);
        basis.push_back(w);
    }
    FpMatrix b(p, static_cast<int>(basis.size()), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < n; ++j) b.at(static_cast<int>(i), j) = basis[i][static_cast<std::size_t>(j)];
    return fp_rref(b);
}

std::string fp_to_string(const FpMatrix& x) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < x.rows; ++i) {
        os << (i ? ";" : "");
        for (int j = 0; j < x.cols; ++j) os << (j ? " " : "") << x.at(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<FpVector> fp_vectors(int p, int n) {
    std::vector<FpVector> out;
    FpVector v(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(v);
        int k = n - 1;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == p - 1) {
            v[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++v[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace coind::categories
