#include <random>

#include "coind/error.hpp"
#include "coind/modcore/serialize.hpp"
#include "coind/shiftcoind/shiftcoind.hpp"

namespace coind::shiftcoind {

using namespace categories;
using linalg::Vector;

namespace {

Matrix unit_columns(const Field& f, std::size_t rows, const std::vector<std::size_t>& idx) {
    Matrix m(f, rows, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) m.set(idx[j], j, 1);
    return m;
}

std::string dims_string(const std::vector<std::size_t>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

Json dims_of(const TruncatedModule& v) { return modcore::dims_json(v.dims()); }

}  // namespace

ThetaResult theta(const Category& c, int m, int trunc, const Field& f) {
    if (c.is_vi()) throw DomainError("theta is defined for FI_G only");
    int top = trunc - 1;
    if (m < 0 || top < m + 1) throw TruncationError("theta needs trunc >= m + 2");
    auto q = coind_free(c, m, trunc, f);
    const auto& g = c.group();

    std::vector<Matrix> ubases;
    std::vector<Matrix> pblocks;
    for (int n = 0; n <= top; ++n) {
        PsiLayout lay(c, m, n);
        std::vector<std::size_t> rest, base;
        for (std::size_t pos = 0; pos < lay.dim(); ++pos) (pos < lay.offset(1) ? base : rest).push_back(pos);
        ubases.push_back(unit_columns(f, lay.dim(), rest));
        pblocks.push_back(unit_columns(f, lay.dim(), base).transpose());
    }
    auto u = modcore::submodule(q, ubases);
    auto fm = modcore::free_module(c, m, top, f);
    auto fm1 = modcore::free_module(c, m + 1, top, f);

    std::vector<Matrix> tblocks;
    for (int n = 0; n <= top; ++n) {
        PsiLayout lay(c, m, n);
        Matrix b(f, fm1.dim(n), lay.dim() - lay.offset(1));
        for (std::size_t pos = lay.offset(1); pos < lay.dim(); ++pos) {
            auto [k, bi] = lay.label(pos);
            const auto& s = lay.slots()[k];
            auto inv = fig_inverse(g, special_fig_swap(g, n, s.r, s.g));
            auto img = c.compose(inv, c.iota(c.hom(m, n - 1)[bi]));
            b.set(c.index_of(img), pos - lay.offset(1), 1);
        }
        tblocks.push_back(std::move(b));
    }
    ModuleHom th(u.module, fm1, tblocks);
    ModuleHom p(q, fm, pblocks);

    Report rep;
    rep.add("U is a submodule", u.inclusion.is_intertwiner());
    rep.add("U dims equal free(m+1) dims", u.module.dims() == fm1.dims(),
            dims_string(u.module.dims()) + " vs " + dims_string(fm1.dims()));
    auto fails = th.intertwining_failures();
    rep.add("Theta intertwines", fails.empty(), fails.empty() ? "" : fails.front());
    for (int n = 0; n <= top; ++n) {
        bool bij = tblocks[static_cast<std::size_t>(n)].rows() == tblocks[static_cast<std::size_t>(n)].cols() &&
                   linalg::rank(tblocks[static_cast<std::size_t>(n)]) == tblocks[static_cast<std::size_t>(n)].rows();
        rep.add("Theta bijective in degree " + std::to_string(n), bij);
    }
    rep.add("projection onto kCe_m intertwines", p.is_intertwiner());

    // section: solve p_m x = identity, free variables zero
    Vector e(fm.dim(m), 0);
    e[c.index_of(c.identity(m))] = 1;
    auto x = linalg::Solver(p.block(m)).solve(e);
    if (!x) throw ConsistencyFailure("no section of the projection");
    auto sec = modcore::hom_from_free(fm, m, q, *x);
    rep.add("section splits the projection", modcore::compose(p, sec) == ModuleHom::identity(fm));

    std::vector<Matrix> inv_blocks;
    for (const auto& b : tblocks) {
        auto inv = linalg::inverse(b);
        if (!inv) throw ConsistencyFailure("Theta block is singular");
        inv_blocks.push_back(*inv);
    }
    ModuleHom thinv(fm1, u.module, inv_blocks);
    auto ds = modcore::direct_sum(std::vector<TruncatedModule>{fm, fm1});
    auto iso = modcore::compose(sec, ds.projections[0]) + modcore::compose(modcore::compose(u.inclusion, thinv), ds.projections[1]);
    rep.add("kCe_m + kCe_{m+1} -> Q intertwines", iso.is_intertwiner());
    rep.add("kCe_m + kCe_{m+1} -> Q bijective", iso.is_bijective());
    if (!rep.ok()) throw ConsistencyFailure("theta verification failed: " + rep.checks_json().dump());

    rep.data = {{"category", c.name()}, {"m", m}, {"trunc", trunc}, {"dims_Q", dims_of(q)}, {"dims_U", dims_of(u.module)},
                {"dims_free_m", dims_of(fm)}, {"dims_free_m1", dims_of(fm1)}};
    rep.witnesses["theta"] = modcore::hom_json(th);
    rep.witnesses["iso"] = modcore::hom_json(iso);
    return ThetaResult{q, u, th, sec, iso, rep};
}

namespace {

FpMatrix one_plus(const FpMatrix& b) { return fp_block_diag(fp_identity(b.p, 1), b); }

FpMatrix stacked_inverse(int p, const FpVector& v, const Line& l) {
    auto inv = fp_inverse(special_vi(p, v, l).mat);
    if (!inv) throw ConsistencyFailure("stacked matrix is singular");
    return *inv;
}

}  // namespace

PiResult pi_map(const Category& c, int m, int trunc, const Field& f) {
    if (!c.is_vi()) throw DomainError("pi is defined for VI only");
    int p = c.prime();
    if (!f.is_rational() && f.characteristic() == p) throw DomainError("q is not invertible in the coefficient field");
    int top = trunc - 1;
    if (m < 0 || top < m + 1) throw TruncationError("pi needs trunc >= m + 2");
    auto q = coind_free(c, m, trunc, f);
    auto fm1 = modcore::free_module(c, m + 1, top, f);

    std::vector<Matrix> blocks;
    std::vector<linalg::Scalar> qinv;
    for (int n = 0; n <= top; ++n) {
        linalg::Scalar qn = 1;
        for (int i = 0; i < n; ++i) qn = f.mul(qn, f.from_int(p));
        qinv.push_back(f.inv(qn));
        PsiLayout lay(c, m, n);
        Matrix b(f, fm1.dim(n), lay.dim());
        auto ls = lines(p, n);
        for (std::size_t pos = 0; pos < lay.dim(); ++pos) {
            auto [k, bi] = lay.label(pos);
            const auto& s = lay.slots()[k];
            const auto& beta = std::get<VIMorphism>(c.hom(m, lay.beta_degree(k))[bi]).mat;
            if (s.base) {
                for (const auto& wp : ls) {
                    if (pair_line(s.v, wp) == 0 || line_contained(wp, beta)) continue;
                    auto img = fp_mul(stacked_inverse(p, s.v, wp), one_plus(fp_mul(complement_map(wp), beta)));
                    b.add_to(c.index_of(make_vi(img)), pos, f.neg(qinv.back()));
                }
            } else {
                auto img = fp_mul(stacked_inverse(p, s.v, *s.line), one_plus(beta));
                b.add_to(c.index_of(make_vi(img)), pos, qinv.back());
            }
        }
        blocks.push_back(std::move(b));
    }
    ModuleHom pi(q, fm1, blocks);

    Report rep;
    auto fails = pi.intertwining_failures();
    rep.add("pi intertwines", fails.empty(), fails.empty() ? "" : fails.front());
    auto ker = modcore::kernel(pi);
    for (int n = 0; n <= top; ++n) {
        std::size_t r = linalg::rank(pi.block(n));
        rep.add("pi surjective in degree " + std::to_string(n), r == fm1.dim(n),
                "rank " + std::to_string(r) + " of " + std::to_string(fm1.dim(n)));
        rep.add("kernel dim in degree " + std::to_string(n), ker.module.dim(n) == q.dim(n) - fm1.dim(n),
                std::to_string(ker.module.dim(n)) + " = " + std::to_string(q.dim(n)) + " - " + std::to_string(fm1.dim(n)));
    }

    // explicit preimage of every gamma: q^n Psi_{n,v,wp}(beta), v lex-least
    std::size_t tried = 0, hit = 0;
    std::optional<Vector> id_pre;
    for (int n = m + 1; n <= top; ++n) {
        PsiLayout lay(c, m, n);
        auto vs = fp_vectors(p, n);
        for (const auto& gm : c.hom(m + 1, n)) {
            const auto& gamma = std::get<VIMorphism>(gm).mat;
            ++tried;
            Line wp = make_line(p, gamma.column(0));
            const FpVector* v = nullptr;
            for (const auto& cand : vs) {
                bool good = fp_dot(cand, gamma.column(0), p) == 1;
                for (int j = 1; j < gamma.cols && good; ++j) good = fp_dot(cand, gamma.column(j), p) == 0;
                if (good) {
                    v = &cand;
                    break;
                }
            }
            if (!v) continue;
            FpMatrix rest(p, n, m);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) rest.at(i, j) = gamma.at(i, j + 1);
            FpMatrix beta = fp_mul(complement_map(wp), rest);
            if (!(fp_mul(special_vi(p, *v, wp).mat, gamma) == one_plus(beta))) continue;
            std::size_t k = lay.slot_index(PsiSlot{false, 0, 0, *v, wp});
            std::size_t pos = lay.offset(k) + c.index_of(make_vi(beta));
            Vector x(lay.dim(), 0);
            x[pos] = f.inv(qinv[static_cast<std::size_t>(n)]);
            Vector e(fm1.dim(n), 0);
            e[c.index_of(gm)] = 1;
            if (pi.block(n) * x == e) ++hit;
            if (n == m + 1 && gm == c.identity(m + 1)) id_pre = x;
        }
    }
    rep.add("explicit preimages", hit == tried, std::to_string(hit) + "/" + std::to_string(tried));
    if (!id_pre) throw ConsistencyFailure("no preimage of the identity");
    auto sec = modcore::hom_from_free(fm1, m + 1, q, *id_pre);
    rep.add("section splits pi", modcore::compose(pi, sec) == ModuleHom::identity(fm1));
    if (!rep.ok()) throw ConsistencyFailure("pi verification failed: " + rep.checks_json().dump());

    rep.data = {{"category", c.name()}, {"m", m}, {"trunc", trunc}, {"dims_Q", dims_of(q)},
                {"dims_free_m1", dims_of(fm1)}, {"dims_kernel", dims_of(ker.module)}};
    rep.witnesses["pi"] = modcore::hom_json(pi);
    rep.witnesses["section"] = modcore::hom_json(sec);
    return PiResult{q, pi, sec, rep};
}

Report key_identity_check(int p, int max_dim, int count, std::uint64_t seed) {
    auto c = Category::vi(p);
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    int good = 0;
    std::string first_bad;
    for (int t = 0; t < count; ++t) {
        int l = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_dim)));
        int n = 1 + static_cast<int>(pick(static_cast<std::size_t>(l)));
        const auto& homs = c.hom(n, l);
        auto a = std::get<VIMorphism>(homs[pick(homs.size())]);
        auto ls = lines(p, n);
        Line wp = ls[pick(ls.size())];
        std::vector<FpVector> vs, us;
        for (const auto& v : fp_vectors(p, n))
            if (pair_line(v, wp) != 0) vs.push_back(v);
        FpVector v = vs[pick(vs.size())];
        for (const auto& u : fp_vectors(p, l))
            if (fp_mul(fp_row(u, p), a.mat).row(0) == v) us.push_back(u);
        FpVector u = us[pick(us.size())];
        auto lhs = fp_mul(stacked_inverse(p, u, image_line(a, wp)), one_plus(alpha_wp(a, wp).mat));
        auto rhs = fp_mul(a.mat, stacked_inverse(p, v, wp));
        if (lhs == rhs)
            ++good;
        else if (first_bad.empty())
            first_bad = fp_to_string(a.mat);
    }
    Report rep;
    rep.add("key identity p=" + std::to_string(p), good == count,
            std::to_string(good) + "/" + std::to_string(count) + (first_bad.empty() ? "" : " first failure " + first_bad));
    rep.data = {{"p", p}, {"max_dim", max_dim}, {"tuples", count}, {"seed", seed}};
    return rep;
}

}  // namespace coind::shiftcoind
