#include "coind/linalg/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "coind/error.hpp"

namespace coind::linalg {

void axpy(SparseRow& target, const Scalar& a, const SparseRow& src, const Field& f) {
    if (a == 0 || src.empty()) return;
    SparseRow out;
    out.reserve(target.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < src.size()) {
        if (j == src.size() || (i < target.size() && target[i].col < src[j].col)) {
            out.push_back(std::move(target[i++]));
        } else if (i == target.size() || src[j].col < target[i].col) {
            out.push_back({src[j].col, f.mul(a, src[j].val)});
            ++j;
        } else {
            Scalar v = f.add(target[i].val, f.mul(a, src[j].val));
            if (v != 0) out.push_back({target[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

SparseRow sparse_from_dense(const Vector& v) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r.push_back({i, v[i]});
    return r;
}

Vector dense_from_sparse(const SparseRow& r, std::size_t width) {
    Vector v(width);
    for (const auto& e : r) v[e.col] = e.val;
    return v;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), nrows_(rows), ncols_(cols), data_(rows) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
    return m;
}

Matrix Matrix::from_dense(Field f, const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) {
            Scalar v = f.from_int(rows[i][j]);
            if (v != 0) m.data_[i].push_back({j, v});
        }
    }
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DomainError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            if (cols[j][i] != 0) m.data_[i].push_back({j, f.reduce(cols[j][i])});
    }
    return m;
}

Matrix Matrix::from_sparse_rows(Field f, std::size_t cols, std::vector<SparseRow> rows) {
    Matrix m(f, rows.size(), cols);
    m.data_ = std::move(rows);
    return m;
}

Matrix Matrix::block_diagonal(Field f, const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(f, r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (const auto& e : b.data_[i]) m.data_[r0 + i].push_back({c0 + e.col, e.val});
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Matrix Matrix::hstack(Field f, std::size_t rows, const std::vector<Matrix>& parts) {
    std::size_t c = 0;
    for (const auto& b : parts) {
        if (b.rows() != rows) throw DomainError("hstack row mismatch");
        c += b.cols();
    }
    Matrix m(f, rows, c);
    std::size_t c0 = 0;
    for (const auto& b : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (const auto& e : b.data_[i]) m.data_[i].push_back({c0 + e.col, e.val});
        c0 += b.cols();
    }
    return m;
}

Matrix Matrix::vstack(Field f, std::size_t cols, const std::vector<Matrix>& parts) {
    std::size_t r = 0;
    for (const auto& b : parts) {
        if (b.cols() != cols) throw DomainError("vstack column mismatch");
        r += b.rows();
    }
    Matrix m(f, r, cols);
    std::size_t r0 = 0;
    for (const auto& b : parts) {
        for (std::size_t i = 0; i < b.rows(); ++i) m.data_[r0 + i] = b.data_[i];
        r0 += b.rows();
    }
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    const auto& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) return it->val;
    return Scalar(0);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v0) {
    if (i >= nrows_ || j >= ncols_) throw DomainError("matrix index out of range");
    Scalar v = field_.reduce(v0);
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) {
        if (v == 0)
            r.erase(it);
        else
            it->val = v;
    } else if (v != 0) {
        r.insert(it, {j, v});
    }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, at(i, j) + v); }

void Matrix::set_row(std::size_t i, SparseRow r) { data_.at(i) = std::move(r); }

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (ncols_ != rhs.nrows_) throw DomainError("matrix product shape mismatch");
    Matrix out(field_, nrows_, rhs.ncols_);
    std::vector<Scalar> acc(rhs.ncols_);
    std::vector<char> used(rhs.ncols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < nrows_; ++i) {
        touched.clear();
        for (const auto& a : data_[i]) {
            for (const auto& b : rhs.data_[a.col]) {
                if (!used[b.col]) {
                    used[b.col] = 1;
                    touched.push_back(b.col);
                    acc[b.col] = a.val * b.val;
                } else {
                    acc[b.col] += a.val * b.val;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        SparseRow r;
        for (auto c : touched) {
            Scalar v = field_.reduce(acc[c]);
            if (v != 0) r.push_back({c, std::move(v)});
            used[c] = 0;
        }
        out.data_[i] = std::move(r);
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != ncols_) throw DomainError("matrix-vector shape mismatch");
    Vector out(nrows_);
    for (std::size_t i = 0; i < nrows_; ++i) {
        Scalar s = 0;
        for (const auto& e : data_[i])
            if (v[e.col] != 0) s += e.val * v[e.col];
        out[i] = field_.reduce(s);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (nrows_ != rhs.nrows_ || ncols_ != rhs.ncols_) throw DomainError("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < nrows_; ++i) axpy(out.data_[i], Scalar(1), rhs.data_[i], field_);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (nrows_ != rhs.nrows_ || ncols_ != rhs.ncols_) throw DomainError("matrix difference shape mismatch");
    Matrix out = *this;
    Scalar m1 = field_.from_int(-1);
    for (std::size_t i = 0; i < nrows_; ++i) axpy(out.data_[i], m1, rhs.data_[i], field_);
    return out;
}

Matrix Matrix::scaled(const Scalar& s0) const {
    Scalar s = field_.reduce(s0);
    Matrix out(field_, nrows_, ncols_);
    if (s == 0) return out;
    for (std::size_t i = 0; i < nrows_; ++i)
        for (const auto& e : data_[i]) out.data_[i].push_back({e.col, field_.mul(s, e.val)});
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, ncols_, nrows_);
    for (std::size_t i = 0; i < nrows_; ++i)
        for (const auto& e : data_[i]) out.data_[e.col].push_back({i, e.val});
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, idx.size(), ncols_);
    for (std::size_t k = 0; k < idx.size(); ++k) out.data_[k] = data_.at(idx[k]);
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    std::vector<long> where(ncols_, -1);
    for (std::size_t k = 0; k < idx.size(); ++k) where.at(idx[k]) = static_cast<long>(k);
    Matrix out(field_, nrows_, idx.size());
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (const auto& e : data_[i])
            if (where[e.col] >= 0) out.data_[i].push_back({static_cast<std::size_t>(where[e.col]), e.val});
        std::sort(out.data_[i].begin(), out.data_[i].end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    }
    return out;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(nrows_);
    for (std::size_t i = 0; i < nrows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<std::vector<Scalar>> Matrix::dense() const {
    std::vector<std::vector<Scalar>> d(nrows_, std::vector<Scalar>(ncols_));
    for (std::size_t i = 0; i < nrows_; ++i)
        for (const auto& e : data_[i]) d[i][e.col] = e.val;
    return d;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (nrows_ != rhs.nrows_ || ncols_ != rhs.ncols_) return false;
    for (std::size_t i = 0; i < nrows_; ++i) {
        const auto& a = data_[i];
        const auto& b = rhs.data_[i];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].col != b[k].col || a[k].val != b[k].val) return false;
    }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (nrows_ != ncols_) return false;
    for (std::size_t i = 0; i < nrows_; ++i)
        if (data_[i].size() != 1 || data_[i][0].col != i || data_[i][0].val != 1) return false;
    return true;
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

Scalar Matrix::trace() const {
    Scalar t = 0;
    for (std::size_t i = 0; i < std::min(nrows_, ncols_); ++i) t += at(i, i);
    return field_.reduce(t);
}

Echelon::Echelon(Field f, std::size_t width) : field_(f), width_(width), pivot_row_(width, -1) {}

SparseRow Echelon::reduce(SparseRow v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        long r = pivot_row_[v[pos].col];
        if (r < 0) {
            ++pos;
            continue;
        }
        Scalar coef = field_.neg(v[pos].val);
        axpy(v, coef, rows_[static_cast<std::size_t>(r)], field_);
    }
    return v;
}

bool Echelon::insert(SparseRow v) {
    for (auto& e : v) {
        if (e.col >= width_) throw DomainError("echelon row wider than declared");
        e.val = field_.reduce(e.val);
    }
    std::erase_if(v, [](const Entry& e) { return e.val == 0; });
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar s = field_.inv(v[0].val);
    if (s != 1)
        for (auto& e : v) e.val = field_.mul(s, e.val);
    pivot_row_[v[0].col] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    final_ = false;
    return true;
}

void Echelon::finalize() {
    if (final_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a][0].col > rows_[b][0].col; });
    for (auto idx : order) {
        SparseRow& r = rows_[idx];
        SparseRow tail(r.begin() + 1, r.end());
        tail = reduce(std::move(tail));
        SparseRow nr;
        nr.reserve(tail.size() + 1);
        nr.push_back(std::move(r[0]));
        for (auto& e : tail) nr.push_back(std::move(e));
        r = std::move(nr);
    }
    std::sort(rows_.begin(), rows_.end(), [](const SparseRow& a, const SparseRow& b) { return a[0].col < b[0].col; });
    std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i][0].col] = static_cast<long>(i);
    final_ = true;
}

std::vector<std::size_t> Echelon::pivots() const {
    std::vector<std::size_t> p;
    for (const auto& r : rows_) p.push_back(r[0].col);
    std::sort(p.begin(), p.end());
    return p;
}

Echelon row_echelon(const Matrix& a) {
    Echelon e(a.field(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
    e.finalize();
    return e;
}

std::size_t rank(const Matrix& a) {
    Echelon e(a.field(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
    return e.rank();
}

std::vector<SparseRow> nullspace_vectors(const Matrix& a) {
    Echelon e = row_echelon(a);
    const Field& f = a.field();
    std::vector<char> is_pivot(a.cols(), 0);
    for (const auto& r : e.rows()) is_pivot[r[0].col] = 1;
    std::vector<SparseRow> by_free(a.cols());
    for (const auto& r : e.rows()) {
        std::size_t c = r[0].col;
        for (std::size_t k = 1; k < r.size(); ++k) by_free[r[k].col].push_back({c, f.neg(r[k].val)});
    }
    std::vector<SparseRow> out;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (is_pivot[j]) continue;
        SparseRow v = std::move(by_free[j]);
        v.push_back({j, Scalar(1)});
        std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
        out.push_back(std::move(v));
    }
    return out;
}

Matrix nullspace(const Matrix& a) {
    auto vs = nullspace_vectors(a);
    return Matrix::from_sparse_rows(a.field(), a.cols(), std::move(vs)).transpose();
}

Matrix column_space(const Matrix& a) {
    Echelon e = row_echelon(a.transpose());
    std::vector<SparseRow> rows = e.rows();
    return Matrix::from_sparse_rows(a.field(), a.rows(), std::move(rows)).transpose();
}

Solver::Solver(const Matrix& a) : field_(a.field()), n_(a.cols()), m_(a.rows()) {
    Echelon e(field_, n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) {
        SparseRow r = a.row(i);
        r.push_back({n_ + i, Scalar(1)});
        e.insert(std::move(r));
    }
    e.finalize();
    for (const auto& r : e.rows()) {
        SparseRow comb;
        for (const auto& x : r)
            if (x.col >= n_) comb.push_back({x.col - n_, x.val});
        if (r[0].col < n_) {
            solution_rows_.emplace_back(r[0].col, std::move(comb));
            ++rank_;
        } else {
            constraint_rows_.push_back(std::move(comb));
        }
    }
}

std::optional<Vector> Solver::solve(const Vector& b) const {
    if (b.size() != m_) throw DomainError("right-hand side has wrong length");
    auto dot = [&](const SparseRow& r) {
        Scalar s = 0;
        for (const auto& x : r)
            if (b[x.col] != 0) s += x.val * b[x.col];
        return field_.reduce(s);
    };
    for (const auto& c : constraint_rows_)
        if (dot(c) != 0) return std::nullopt;
    Vector x(n_);
    for (const auto& [col, comb] : solution_rows_) x[col] = dot(comb);
    return x;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) { return Solver(a).solve(b); }

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    std::size_t n = a.rows();
    Echelon e(a.field(), 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseRow r = a.row(i);
        r.push_back({n + i, Scalar(1)});
        e.insert(std::move(r));
    }
    e.finalize();
    Matrix inv(a.field(), n, n);
    std::size_t i = 0;
    for (const auto& r : e.rows()) {
        if (r[0].col != i) return std::nullopt;
        if (r.size() > 1 && r[1].col < n) return std::nullopt;
        SparseRow out;
        for (std::size_t k = 1; k < r.size(); ++k) out.push_back({r[k].col - n, r[k].val});
        inv.set_row(i, std::move(out));
        ++i;
    }
    return inv;
}

std::string to_string(const Matrix& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a.at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace coind::linalg
