#include "coind/modcore/hom.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "coind/error.hpp"

namespace coind::modcore {

using linalg::Echelon;
using linalg::Scalar;
using linalg::SparseRow;

namespace {

SparseRow flatten(const Matrix& m) {
    SparseRow out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) out.push_back({r * m.cols() + e.col, e.val});
    return out;
}

Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const SparseRow& v) {
    Matrix m(f, rows, cols);
    std::vector<SparseRow> rs(rows);
    for (const auto& e : v) rs[e.col / cols].push_back({e.col % cols, e.val});
    for (std::size_t r = 0; r < rows; ++r) m.set_row(r, std::move(rs[r]));
    return m;
}

// nullspace vectors together with the free column each one is normalized at
std::pair<std::vector<SparseRow>, std::vector<std::size_t>> kernel_with_free(Echelon& e) {
    e.finalize();
    std::size_t width = e.width();
    const Field& f = e.field();
    std::vector<char> is_pivot(width, 0);
    for (const auto& r : e.rows()) is_pivot[r[0].col] = 1;
    std::vector<SparseRow> by_free(width);
    for (const auto& r : e.rows())
        for (std::size_t k = 1; k < r.size(); ++k) by_free[r[k].col].push_back({r[0].col, f.neg(r[k].val)});
    std::vector<SparseRow> vecs;
    std::vector<std::size_t> frees;
    for (std::size_t j = 0; j < width; ++j) {
        if (is_pivot[j]) continue;
        SparseRow v = std::move(by_free[j]);
        v.push_back({j, Scalar(1)});
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        vecs.push_back(std::move(v));
        frees.push_back(j);
    }
    return {vecs, frees};
}

}  // namespace

HomSpace::HomSpace(const TruncatedModule& v, const TruncatedModule& w) : v_(v), w_(w) {
    require_compatible(v, w);
    const Field& f = v.field();
    int n = v.truncation();
    std::size_t offset = 0;
    for (int i = 0; i <= n; ++i) {
        std::size_t a = w.dim(i), b = v.dim(i);
        Echelon e(f, a * b);
        for (std::size_t k = 0; k < v.group_actions(i).size() && a * b > 0; ++k) {
            Matrix vt = v.group_action(i, k).transpose();
            const Matrix& wg = w.group_action(i, k);
            for (std::size_t r = 0; r < a; ++r)
                for (std::size_t c = 0; c < b; ++c) {
                    std::map<std::size_t, Scalar> acc;
                    for (const auto& x : vt.row(c)) acc[r * b + x.col] += x.val;
                    for (const auto& x : wg.row(r)) acc[x.col * b + c] -= x.val;
                    SparseRow row;
                    for (auto& [col, val] : acc) {
                        Scalar y = f.reduce(val);
                        if (y != 0) row.push_back({col, y});
                    }
                    if (!row.empty()) e.insert(std::move(row));
                }
        }
        auto [vecs, frees] = kernel_with_free(e);
        std::vector<Matrix> mats;
        for (const auto& x : vecs) mats.push_back(unflatten(f, a, b, x));
        stage1_basis_.push_back(std::move(mats));
        stage1_free_.push_back(std::move(frees));
        stage1_offset_.push_back(offset);
        offset += stage1_basis_.back().size();
    }
    std::size_t total = offset;
    std::vector<SparseRow> cols(total);
    std::size_t eq = 0;
    for (int i = 0; i < n; ++i) {
        auto ii = static_cast<std::size_t>(i);
        std::size_t rows = w.dim(i + 1), cc = v.dim(i);
        const Matrix& vs = v.standard_action(i);
        const Matrix& ws = w.standard_action(i);
        for (std::size_t k = 0; k < stage1_basis_[ii].size(); ++k) {
            for (const auto& x : flatten((ws * stage1_basis_[ii][k]).scaled(Scalar(-1))))
                cols[stage1_offset_[ii] + k].push_back({eq + x.col, x.val});
        }
        for (std::size_t k = 0; k < stage1_basis_[ii + 1].size(); ++k) {
            for (const auto& x : flatten(stage1_basis_[ii + 1][k] * vs))
                cols[stage1_offset_[ii + 1] + k].push_back({eq + x.col, x.val});
        }
        eq += rows * cc;
    }
    for (auto& c : cols) std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    Matrix sys = Matrix::from_sparse_rows(f, eq, std::move(cols)).transpose();
    Echelon e2(f, total);
    for (std::size_t r = 0; r < sys.rows(); ++r)
        if (!sys.row(r).empty()) e2.insert(sys.row(r));
    auto [vecs, frees] = kernel_with_free(e2);
    stage2_free_ = frees;
    for (const auto& c : vecs) basis_.push_back(combination_of_stage1(c));
}

ModuleHom HomSpace::combination_of_stage1(const SparseRow& c) const {
    const Field& f = v_.field();
    std::vector<Matrix> blocks;
    std::size_t ci = 0;
    for (int i = 0; i <= v_.truncation(); ++i) {
        auto ii = static_cast<std::size_t>(i);
        Matrix m(f, w_.dim(i), v_.dim(i));
        std::size_t lo = stage1_offset_[ii], hi = lo + stage1_basis_[ii].size();
        while (ci < c.size() && c[ci].col < hi) {
            m = m + stage1_basis_[ii][c[ci].col - lo].scaled(c[ci].val);
            ++ci;
        }
        blocks.push_back(std::move(m));
    }
    return ModuleHom(v_, w_, blocks);
}

ModuleHom HomSpace::combination(const Vector& coeffs) const {
    if (coeffs.size() != basis_.size()) throw DomainError("coefficient vector has the wrong length");
    ModuleHom h = ModuleHom::zero(v_, w_);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) h = h + basis_[k].scaled(coeffs[k]);
    return h;
}

std::optional<Vector> HomSpace::coordinates(const ModuleHom& h) const {
    SparseRow c;
    for (int i = 0; i <= v_.truncation(); ++i) {
        auto ii = static_cast<std::size_t>(i);
        const Matrix& b = h.block(i);
        for (std::size_t k = 0; k < stage1_free_[ii].size(); ++k) {
            std::size_t pos = stage1_free_[ii][k];
            Scalar x = b.at(pos / b.cols(), pos % b.cols());
            if (x != 0) c.push_back({stage1_offset_[ii] + k, x});
        }
    }
    Vector out(basis_.size());
    for (std::size_t k = 0; k < stage2_free_.size(); ++k) {
        auto it = std::lower_bound(c.begin(), c.end(), stage2_free_[k], [](const auto& e, std::size_t col) { return e.col < col; });
        if (it != c.end() && it->col == stage2_free_[k]) out[k] = it->val;
    }
    if (!(combination(out) == h)) return std::nullopt;
    return out;
}

std::vector<ModuleHom> hom_space(const TruncatedModule& v, const TruncatedModule& w) { return HomSpace(v, w).basis(); }

std::string to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Isomorphic: return "isomorphic";
        case IsoVerdict::NotIsomorphic: return "proven-nonisomorphic";
        default: return "undecided-after-search";
    }
}

IsoResult is_isomorphic(const TruncatedModule& v, const TruncatedModule& w, std::uint64_t seed) {
    IsoResult r;
    r.seed = seed;
    if (v.dims() != w.dims()) {
        r.verdict = IsoVerdict::NotIsomorphic;
        r.detail = "dimension vectors differ";
        return r;
    }
    HomSpace hs(v, w);
    auto found = [&](const ModuleHom& h, const std::string& how) {
        if (!h.is_bijective()) return false;
        r.verdict = IsoVerdict::Isomorphic;
        r.witness = h;
        r.detail = how;
        return true;
    };
    if (v.is_zero()) {
        found(ModuleHom::zero(v, w), "zero modules");
        return r;
    }
    for (std::size_t k = 0; k < hs.dim(); ++k)
        if (found(hs.basis()[k], "basis element " + std::to_string(k))) return r;
    if (hs.dim() > 0) {
        if (found(hs.combination(Vector(hs.dim(), Scalar(1))), "all-ones combination")) return r;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int t = 0; t < 64; ++t) {
            Vector c(hs.dim());
            for (auto& x : c) x = v.field().from_int(coef(rng));
            if (found(hs.combination(c), "pseudorandom combination " + std::to_string(t))) return r;
        }
    }
    r.verdict = IsoVerdict::Undecided;
    r.detail = "no invertible element among " + std::to_string(hs.dim()) + " basis homs and 65 combinations";
    return r;
}

}  // namespace coind::modcore
