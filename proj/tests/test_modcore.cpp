#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coind/error.hpp"
#include "coind/modcore/constructions.hpp"
#include "coind/modcore/hom.hpp"
#include "coind/modcore/serialize.hpp"

using namespace coind;
using namespace coind::modcore;
using categories::GroupSpec;
using linalg::Scalar;

namespace {

const Field Q = Field::rationals();

// single-stage solve over every morphism of length <= 1, independent of HomSpace
std::size_t brute_hom_dim(const TruncatedModule& v, const TruncatedModule& w) {
    const auto& c = v.category();
    int n = v.truncation();
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (int i = 0; i <= n; ++i) {
        off.push_back(total);
        total += v.dim(i) * w.dim(i);
    }
    std::vector<linalg::SparseRow> rows;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= std::min(n, i + 1); ++j)
            for (const auto& a : c.hom(i, j)) {
                Matrix va = v.action(a), wa = w.action(a);
                std::size_t bi = v.dim(i), bj = v.dim(j);
                for (std::size_t r = 0; r < w.dim(j); ++r)
                    for (std::size_t col = 0; col < bi; ++col) {
                        Matrix row(Q, 1, total);
                        for (std::size_t k = 0; k < bj; ++k)
                            if (va.at(k, col) != 0) row.add_to(0, off[j] + r * bj + k, va.at(k, col));
                        for (std::size_t k = 0; k < w.dim(i); ++k)
                            if (wa.at(r, k) != 0) row.add_to(0, off[i] + k * bi + col, -wa.at(r, k));
                        if (!row.row(0).empty()) rows.push_back(row.row(0));
                    }
            }
    Matrix sys = Matrix::from_sparse_rows(v.field(), total, rows);
    return total - linalg::rank(sys);
}

std::vector<TruncatedModule> corpus(const categories::Category& c, int n) {
    std::vector<TruncatedModule> out;
    for (int m = 0; m <= std::min(2, n); ++m) {
        out.push_back(free_module(c, m, n, Q));
        out.push_back(atom(c, m, n, Q));
    }
    return out;
}

}  // namespace

TEST_CASE("free modules and atoms have the expected dimensions") {
    auto fi = categories::Category::fi();
    auto z2 = categories::Category::fig(GroupSpec::parse("z2"));
    auto vi = categories::Category::vi(2);
    CHECK(free_module(fi, 1, 3, Q).dims() == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(free_module(z2, 0, 2, Q).dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(free_module(vi, 1, 3, Q).dims() == std::vector<std::size_t>{0, 1, 3, 7});
    CHECK(atom(fi, 0, 3, Q).dims() == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(atom(fi, 2, 3, Q).dim(2) == 2);
    CHECK(atom(z2, 1, 2, Q).dim(1) == 2);
    CHECK_THROWS_AS(free_module(fi, 4, 3, Q), TruncationError);
}

TEST_CASE("functoriality audit on constructed modules") {
    for (auto c : {categories::Category::fi(), categories::Category::fig(GroupSpec::parse("z2")), categories::Category::vi(2),
                   categories::Category::vi(3)}) {
        int n = c.is_vi() ? 3 : 4;
        if (c.is_vi() && c.prime() == 3) n = 2;
        for (const auto& v : corpus(c, n)) {
            auto r = audit_functoriality(v, 2);
            CHECK(r.ok);
            CHECK(r.checks > 0);
        }
    }
}

TEST_CASE("a broken module fails the audit") {
    auto fi = categories::Category::fi();
    auto v = free_module(fi, 0, 3, Q);
    std::vector<std::vector<Matrix>> g;
    std::vector<Matrix> s;
    for (int i = 0; i <= 3; ++i) g.push_back(v.group_actions(i));
    for (int i = 0; i < 3; ++i) s.push_back(v.standard_action(i));
    g[2][0] = g[2][0].scaled(Scalar(-1));  // swap acts by -1 on a trivial line
    TruncatedModule bad(fi, Q, 3, v.dims(), g, s);
    CHECK_FALSE(audit_functoriality(bad, 2).ok);
}

TEST_CASE("Yoneda and the brute-force hom oracle") {
    for (auto c : {categories::Category::fi(), categories::Category::fig(GroupSpec::parse("z2")), categories::Category::vi(2)}) {
        int n = c.is_vi() ? 2 : 3;
        auto vs = corpus(c, n);
        vs.push_back(direct_sum(vs[0], vs[1]));
        for (const auto& v : vs)
            for (int m = 0; m <= n; ++m) CHECK(hom_space(free_module(c, m, n, Q), v).size() == v.dim(m));
        for (const auto& v : vs)
            for (const auto& w : vs) {
                HomSpace hs(v, w);
                CHECK(hs.dim() == brute_hom_dim(v, w));
                for (const auto& h : hs.basis()) CHECK(h.is_intertwiner());
            }
    }
}

TEST_CASE("hom space examples") {
    auto fi = categories::Category::fi();
    CHECK(hom_space(free_module(fi, 1, 4, Q), free_module(fi, 0, 4, Q)).size() == 1);
    for (int n = 0; n <= 3; ++n) CHECK(hom_space(atom(fi, 0, 4, Q), free_module(fi, n, 4, Q)).empty());
    auto a = free_module(fi, 1, 3, Q), b = atom(fi, 2, 3, Q), w = free_module(fi, 2, 3, Q);
    CHECK(hom_space(direct_sum(a, b), w).size() == hom_space(a, w).size() + hom_space(b, w).size());
    CHECK_THROWS_AS(hom_space(free_module(fi, 0, 3, Q), free_module(fi, 0, 3, Field::prime(2))), FieldMismatch);
}

TEST_CASE("coordinates round trip") {
    auto c = categories::Category::fig(GroupSpec::parse("z2"));
    auto v = free_module(c, 1, 3, Q), w = free_module(c, 0, 3, Q);
    HomSpace hs(direct_sum(v, v), w);
    REQUIRE(hs.dim() == 2);
    Vector x{Scalar(3), Scalar(-2, 5)};
    auto h = hs.combination(x);
    auto y = hs.coordinates(h);
    REQUIRE(y.has_value());
    CHECK(*y == x);
    auto bad = ModuleHom::identity(v);
    CHECK_FALSE(HomSpace(v, v).coordinates(bad.scaled(Scalar(2))) == std::nullopt);
}

TEST_CASE("hom from free agrees with the Yoneda basis") {
    auto c = categories::Category::fi();
    auto f1 = free_module(c, 1, 3, Q);
    auto v = direct_sum(free_module(c, 0, 3, Q), free_module(c, 1, 3, Q));
    for (std::size_t k = 0; k < v.dim(1); ++k) {
        Vector x(v.dim(1));
        x[k] = 1;
        auto h = hom_from_free(f1, 1, v, x);
        CHECK(h.is_intertwiner());
    }
}

TEST_CASE("kernels, images, cokernels") {
    auto fi = categories::Category::fi();
    auto v = free_module(fi, 1, 3, Q);
    CHECK(kernel(ModuleHom::identity(v)).module.is_zero());
    CHECK(kernel(ModuleHom::zero(v, v)).module.dims() == v.dims());
    CHECK(cokernel(ModuleHom::identity(v)).module.is_zero());
    CHECK(image(ModuleHom::zero(v, v)).module.is_zero());

    auto f0 = free_module(fi, 0, 3, Q);
    auto a0 = atom(fi, 0, 3, Q);
    auto aug = hom_space(f0, a0);
    REQUIRE(aug.size() == 1);
    auto k = kernel(aug[0]);
    CHECK(k.module.dims() == std::vector<std::size_t>{0, 1, 1, 1});
    CHECK(k.inclusion.is_intertwiner());
    CHECK(audit_functoriality(k.module, 2).ok);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int t = 0; t < 50; ++t) {
        int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
        auto src = free_module(fi, a, 3, Q), tgt = free_module(fi, b, 3, Q);
        HomSpace hs(src, tgt);
        Vector x(hs.dim());
        for (auto& y : x) y = coef(rng);
        auto h = hs.combination(x);
        auto ker = kernel(h), im = image(h);
        auto cok = cokernel(h);
        CHECK(ker.inclusion.is_intertwiner());
        CHECK(im.inclusion.is_intertwiner());
        CHECK(cok.projection.is_intertwiner());
        for (int i = 0; i <= 3; ++i) {
            CHECK(ker.module.dim(i) + im.module.dim(i) == src.dim(i));
            CHECK(cok.module.dim(i) + im.module.dim(i) == tgt.dim(i));
        }
        CHECK(compose(cok.projection, h).is_zero());
        CHECK(compose(h, ker.inclusion).is_zero());
    }
}

TEST_CASE("direct sums, restriction, extension by zero") {
    auto fi = categories::Category::fi();
    auto a = free_module(fi, 0, 3, Q), b = free_module(fi, 1, 3, Q);
    CHECK(direct_sum(a, b).dims() == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(direct_sum(a, b).dims() == direct_sum(b, a).dims());
    CHECK(is_isomorphic(direct_sum(a, TruncatedModule::zero(fi, Q, 3)), a).verdict == IsoVerdict::Isomorphic);
    auto ds = direct_sum(std::vector<TruncatedModule>{a, b});
    for (const auto& h : ds.injections) CHECK(h.is_intertwiner());
    for (const auto& h : ds.projections) CHECK(h.is_intertwiner());
    CHECK(restrict(a, 0).dims() == std::vector<std::size_t>{1});
    CHECK(restrict(atom(fi, 2, 3, Q), 1).is_zero());
    auto r = restrict(b, 2);
    auto e = extend_by_zero(r, 4);
    CHECK(e.dims() == std::vector<std::size_t>{0, 1, 2, 0, 0});
    CHECK(audit_functoriality(e, 2).ok);
    CHECK(restrict(e, 2).dims() == r.dims());
    CHECK(is_isomorphic(restrict(e, 2), r).verdict == IsoVerdict::Isomorphic);
}

TEST_CASE("isomorphism search") {
    auto fi = categories::Category::fi();
    auto v = free_module(fi, 1, 3, Q);
    auto r = is_isomorphic(v, v);
    CHECK(r.verdict == IsoVerdict::Isomorphic);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->is_bijective());
    CHECK(is_isomorphic(free_module(fi, 0, 2, Q), atom(fi, 0, 2, Q)).verdict == IsoVerdict::NotIsomorphic);
    // same dims, not isomorphic: trivial vs sign at degree 2
    auto sign = group_module(fi, Q, 2, 2, 1, {Matrix::from_dense(Q, {{-1}})});
    auto triv = group_module(fi, Q, 2, 2, 1, {Matrix::from_dense(Q, {{1}})});
    auto res = is_isomorphic(sign, triv, 5);
    CHECK(res.verdict == IsoVerdict::Undecided);
    CHECK(res.seed == 5);
}

TEST_CASE("generated submodules") {
    auto fi = categories::Category::fi();
    auto v = free_module(fi, 1, 3, Q);
    Vector x(v.dim(1));
    x[0] = 1;
    auto s = generated_submodule(v, {{1, x}});
    CHECK(s.module.dims() == v.dims());
    auto f0 = free_module(fi, 0, 3, Q);
    Vector y(1, Scalar(1));
    CHECK(generated_submodule(f0, {{2, y}}).module.dims() == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("serialization") {
    auto fi = categories::Category::fi();
    auto j = module_json(free_module(fi, 1, 2, Q));
    CHECK(j["dims"] == Json::array({0, 1, 2}));
    CHECK(j["generators"][0]["kind"] == "standard");
    CHECK(scalar_json(Scalar(-3, 4), Q) == "-3/4");
    CHECK(scalar_json(Scalar(2), Q) == "2/1");
    CHECK(scalar_json(Scalar(2), Field::prime(3)) == 2);
}
