#include "coind/modcore/constructions.hpp"

#include <algorithm>
#include <deque>

#include "coind/error.hpp"

namespace coind::modcore {

using linalg::Echelon;
using linalg::Scalar;
using linalg::SparseRow;

namespace {

Matrix zero_matrix(const Field& f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

// 0/1 matrix sending basis element k to basis element img[k]
Matrix map_matrix(const Field& f, std::size_t rows, const std::vector<std::size_t>& img) {
    Matrix t(f, img.size(), rows);
    for (std::size_t k = 0; k < img.size(); ++k) t.set_row(k, SparseRow{{img[k], Scalar(1)}});
    return t.transpose();
}

Matrix columns_matrix(const Field& f, std::size_t rows, const std::vector<SparseRow>& cols) {
    return Matrix::from_sparse_rows(f, rows, cols).transpose();
}

}  // namespace

TruncatedModule free_module(const Category& c, int m, int trunc, const Field& f) {
    if (m < 0 || m > trunc) throw TruncationError("free module generated above the truncation");
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int j = 0; j <= trunc; ++j) {
        const auto& basis = c.hom(m, j);
        dims.push_back(basis.size());
        std::vector<Matrix> gs;
        for (const auto& g : c.generators(j)) {
            std::vector<std::size_t> img;
            img.reserve(basis.size());
            for (const auto& b : basis) img.push_back(c.index_of(c.compose(g, b)));
            gs.push_back(map_matrix(f, basis.size(), img));
        }
        group.push_back(std::move(gs));
        if (j < trunc) {
            auto s = c.standard(j);
            std::vector<std::size_t> img;
            for (const auto& b : basis) img.push_back(c.index_of(c.compose(s, b)));
            standard.push_back(map_matrix(f, c.hom(m, j + 1).size(), img));
        }
    }
    return TruncatedModule(c, f, trunc, dims, group, standard);
}

TruncatedModule group_module(const Category& c, const Field& f, int trunc, int degree, std::size_t d,
                             std::vector<Matrix> gens) {
    if (degree < 0 || degree > trunc) throw TruncationError("degree outside the truncation");
    if (gens.size() != c.generators(degree).size()) throw DomainError("wrong number of generator matrices");
    std::vector<std::size_t> dims(static_cast<std::size_t>(trunc + 1), 0);
    dims[static_cast<std::size_t>(degree)] = d;
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int j = 0; j <= trunc; ++j) {
        if (j == degree)
            group.push_back(gens);
        else
            group.emplace_back(c.generators(j).size(), zero_matrix(f, 0, 0));
        if (j < trunc) standard.push_back(zero_matrix(f, dims[static_cast<std::size_t>(j + 1)], dims[static_cast<std::size_t>(j)]));
    }
    return TruncatedModule(c, f, trunc, dims, group, standard);
}

TruncatedModule atom(const Category& c, int m, int trunc, const Field& f) {
    if (m < 0 || m > trunc) throw TruncationError("atom placed above the truncation");
    const auto& basis = c.hom(m, m);
    std::vector<Matrix> gs;
    for (const auto& g : c.generators(m)) {
        std::vector<std::size_t> img;
        for (const auto& b : basis) img.push_back(c.index_of(c.compose(g, b)));
        gs.push_back(map_matrix(f, basis.size(), img));
    }
    return group_module(c, f, trunc, m, basis.size(), gs);
}

DirectSum direct_sum(const std::vector<TruncatedModule>& parts) {
    if (parts.empty()) throw DomainError("direct sum of nothing");
    for (const auto& p : parts) require_compatible(parts[0], p);
    const auto& c = parts[0].category();
    const auto& f = parts[0].field();
    int n = parts[0].truncation();
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int j = 0; j <= n; ++j) {
        std::size_t d = 0;
        for (const auto& p : parts) d += p.dim(j);
        dims.push_back(d);
        std::vector<Matrix> gs;
        for (std::size_t k = 0; k < c.generators(j).size(); ++k) {
            std::vector<Matrix> blocks;
            for (const auto& p : parts) blocks.push_back(p.group_action(j, k));
            gs.push_back(Matrix::block_diagonal(f, blocks));
        }
        group.push_back(std::move(gs));
        if (j < n) {
            std::vector<Matrix> blocks;
            for (const auto& p : parts) blocks.push_back(p.standard_action(j));
            standard.push_back(Matrix::block_diagonal(f, blocks));
        }
    }
    TruncatedModule sum(c, f, n, dims, group, standard);
    DirectSum out{sum, {}, {}};
    std::vector<std::size_t> offset(static_cast<std::size_t>(n + 1), 0);
    for (const auto& p : parts) {
        std::vector<Matrix> inj, proj;
        for (int j = 0; j <= n; ++j) {
            auto jj = static_cast<std::size_t>(j);
            Matrix e(f, dims[jj], p.dim(j));
            for (std::size_t k = 0; k < p.dim(j); ++k) e.set(offset[jj] + k, k, Scalar(1));
            proj.push_back(e.transpose());
            inj.push_back(std::move(e));
            offset[jj] += p.dim(j);
        }
        out.injections.emplace_back(p, sum, inj);
        out.projections.emplace_back(sum, p, proj);
    }
    return out;
}

TruncatedModule direct_sum(const TruncatedModule& a, const TruncatedModule& b) { return direct_sum({a, b}).module; }

TruncatedModule restrict(const TruncatedModule& v, int n) {
    if (n < 0 || n > v.truncation()) throw TruncationError("cannot restrict above the truncation");
    std::vector<std::size_t> dims(v.dims().begin(), v.dims().begin() + n + 1);
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int j = 0; j <= n; ++j) {
        group.push_back(v.group_actions(j));
        if (j < n) standard.push_back(v.standard_action(j));
    }
    return TruncatedModule(v.category(), v.field(), n, dims, group, standard);
}

ModuleHom restrict(const ModuleHom& h, int n) {
    std::vector<Matrix> b(h.blocks().begin(), h.blocks().begin() + n + 1);
    return ModuleHom(restrict(h.source(), n), restrict(h.target(), n), b);
}

TruncatedModule extend_by_zero(const TruncatedModule& v, int trunc) {
    int n = v.truncation();
    if (trunc < n) throw TruncationError("cannot extend to a smaller truncation");
    const auto& c = v.category();
    const auto& f = v.field();
    std::vector<std::size_t> dims = v.dims();
    dims.resize(static_cast<std::size_t>(trunc + 1), 0);
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int j = 0; j <= trunc; ++j) {
        if (j <= n)
            group.push_back(v.group_actions(j));
        else
            group.emplace_back(c.generators(j).size(), zero_matrix(f, 0, 0));
        if (j < trunc) {
            if (j < n)
                standard.push_back(v.standard_action(j));
            else
                standard.push_back(zero_matrix(f, dims[static_cast<std::size_t>(j + 1)], dims[static_cast<std::size_t>(j)]));
        }
    }
    return TruncatedModule(c, f, trunc, dims, group, standard);
}

ModuleHom extend_by_zero(const ModuleHom& h, int trunc) {
    auto s = extend_by_zero(h.source(), trunc);
    auto t = extend_by_zero(h.target(), trunc);
    std::vector<Matrix> b = h.blocks();
    for (int j = h.source().truncation() + 1; j <= trunc; ++j) b.emplace_back(h.source().field(), 0, 0);
    return ModuleHom(s, t, b);
}

SubModule submodule(const TruncatedModule& v, const std::vector<Matrix>& bases) {
    int n = v.truncation();
    const auto& f = v.field();
    if (bases.size() != static_cast<std::size_t>(n + 1)) throw DomainError("need one basis per degree");
    std::vector<linalg::Solver> solvers;
    std::vector<std::size_t> dims;
    for (int j = 0; j <= n; ++j) {
        const auto& b = bases[static_cast<std::size_t>(j)];
        if (b.rows() != v.dim(j)) throw DomainError("basis vectors have the wrong length");
        if (linalg::rank(b) != b.cols()) throw DomainError("basis is not linearly independent");
        solvers.emplace_back(b);
        dims.push_back(b.cols());
    }
    auto induced = [&](const Matrix& act, int from, int to) {
        Matrix image = act * bases[static_cast<std::size_t>(from)];
        std::vector<Vector> cols;
        for (std::size_t k = 0; k < image.cols(); ++k) {
            auto x = solvers[static_cast<std::size_t>(to)].solve(image.column(k));
            if (!x) throw DomainError("subspace is not closed under the action");
            cols.push_back(*x);
        }
        return Matrix::from_columns(f, dims[static_cast<std::size_t>(to)], cols);
    };
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int j = 0; j <= n; ++j) {
        std::vector<Matrix> gs;
        for (const auto& g : v.group_actions(j)) gs.push_back(induced(g, j, j));
        group.push_back(std::move(gs));
        if (j < n) standard.push_back(induced(v.standard_action(j), j, j + 1));
    }
    TruncatedModule sub(v.category(), f, n, dims, group, standard);
    return SubModule{sub, ModuleHom(sub, v, bases)};
}

QuotientModule quotient(const TruncatedModule& v, const std::vector<Matrix>& spans) {
    int n = v.truncation();
    const auto& f = v.field();
    std::vector<Matrix> proj, section;
    std::vector<std::size_t> dims;
    for (int j = 0; j <= n; ++j) {
        std::size_t d = v.dim(j);
        Echelon e(f, d);
        const Matrix cols = spans.at(static_cast<std::size_t>(j)).transpose();
        for (std::size_t k = 0; k < cols.rows(); ++k) e.insert(cols.row(k));
        e.finalize();
        std::vector<long> pos(d, -1);
        std::vector<char> pivot(d, 0);
        for (const auto& r : e.rows()) pivot[r[0].col] = 1;
        std::size_t q = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (!pivot[i]) pos[i] = static_cast<long>(q++);
        // column j of the projection is the reduced image of e_j
        Matrix pt(f, d, q);
        for (std::size_t i = 0; i < d; ++i)
            if (!pivot[i]) pt.set_row(i, SparseRow{{static_cast<std::size_t>(pos[i]), Scalar(1)}});
        for (const auto& r : e.rows()) {
            SparseRow out;
            for (std::size_t k = 1; k < r.size(); ++k)
                if (!pivot[r[k].col]) out.push_back({static_cast<std::size_t>(pos[r[k].col]), f.neg(r[k].val)});
            pt.set_row(r[0].col, std::move(out));
        }
        proj.push_back(pt.transpose());
        Matrix s(f, d, q);
        for (std::size_t i = 0; i < d; ++i)
            if (!pivot[i]) s.set(i, static_cast<std::size_t>(pos[i]), Scalar(1));
        section.push_back(std::move(s));
        dims.push_back(q);
    }
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int j = 0; j <= n; ++j) {
        auto jj = static_cast<std::size_t>(j);
        std::vector<Matrix> gs;
        for (const auto& g : v.group_actions(j)) gs.push_back(proj[jj] * g * section[jj]);
        group.push_back(std::move(gs));
        if (j < n) standard.push_back(proj[jj + 1] * v.standard_action(j) * section[jj]);
    }
    TruncatedModule quo(v.category(), f, n, dims, group, standard);
    ModuleHom p(v, quo, proj);
    if (!p.is_intertwiner()) throw DomainError("quotient by a non-submodule");
    return QuotientModule{quo, p};
}

SubModule kernel(const ModuleHom& h) {
    std::vector<Matrix> bases;
    for (const auto& b : h.blocks()) bases.push_back(linalg::nullspace(b));
    return submodule(h.source(), bases);
}

SubModule image(const ModuleHom& h) {
    std::vector<Matrix> bases;
    for (const auto& b : h.blocks()) bases.push_back(linalg::column_space(b));
    return submodule(h.target(), bases);
}

QuotientModule cokernel(const ModuleHom& h) {
    std::vector<Matrix> spans;
    for (const auto& b : h.blocks()) spans.push_back(b);
    return quotient(h.target(), spans);
}

Echelon close_under_group(const TruncatedModule& v, int i, Echelon start) {
    std::deque<SparseRow> queue(start.rows().begin(), start.rows().end());
    const auto& gens = v.group_actions(i);
    std::size_t d = v.dim(i);
    while (!queue.empty() && start.rank() < d) {
        Vector x = linalg::dense_from_sparse(queue.front(), d);
        queue.pop_front();
        for (const auto& g : gens) {
            SparseRow y = linalg::sparse_from_dense(g * x);
            if (start.insert(y)) queue.push_back(std::move(y));
        }
    }
    start.finalize();
    return start;
}

SubModule generated_submodule(const TruncatedModule& v, const std::vector<std::pair<int, Vector>>& gens) {
    int n = v.truncation();
    const auto& f = v.field();
    std::vector<Matrix> bases;
    for (int j = 0; j <= n; ++j) {
        Echelon e(f, v.dim(j));
        if (j > 0) {
            Matrix pushed = v.standard_action(j - 1) * bases.back();
            Matrix t = pushed.transpose();
            for (std::size_t k = 0; k < t.rows(); ++k) e.insert(t.row(k));
        }
        for (const auto& [deg, x] : gens)
            if (deg == j) e.insert(linalg::sparse_from_dense(x));
        e = close_under_group(v, j, std::move(e));
        bases.push_back(Matrix::from_sparse_rows(f, v.dim(j), e.rows()).transpose());
    }
    return submodule(v, bases);
}

ModuleHom hom_from_free(const TruncatedModule& free_m, int m, const TruncatedModule& v, const Vector& x) {
    require_compatible(free_m, v);
    const auto& c = v.category();
    std::vector<Matrix> blocks;
    for (int j = 0; j <= v.truncation(); ++j) {
        const auto& basis = c.hom(m, j);
        if (basis.size() != free_m.dim(j)) throw DomainError("source is not the free module on the given degree");
        std::vector<SparseRow> cols;
        cols.reserve(basis.size());
        for (const auto& b : basis) cols.push_back(linalg::sparse_from_dense(v.apply(b, x)));
        blocks.push_back(columns_matrix(v.field(), v.dim(j), cols));
    }
    return ModuleHom(free_m, v, blocks);
}

}  // namespace coind::modcore
