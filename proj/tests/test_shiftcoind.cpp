#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coind/error.hpp"
#include "coind/shiftcoind/shiftcoind.hpp"

using namespace coind;
using namespace coind::shiftcoind;
using categories::GroupSpec;

namespace {

const Field Q = Field::rationals();

long falling(int n, int m) {
    long r = 1;
    for (int i = 0; i < m; ++i) r *= n - i;
    return r;
}
long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
// |C(m, n)| from closed forms
long count(const Category& c, int m, int n) {
    if (m > n || m < 0) return 0;
    if (!c.is_vi()) return ipow(c.group().order(), m) * falling(n, m);
    long q = c.prime(), r = 1;
    for (int i = 0; i < m; ++i) r *= ipow(q, n) - ipow(q, i);
    return r;
}
// number of pairs (v, line) with v^t(line) != 0 in F_q^n
long vi_pairs(int q, int n) {
    if (n == 0) return 0;
    return (ipow(q, n) - 1) / (q - 1) * (ipow(q, n) - ipow(q, n - 1));
}
long psi_dim(const Category& c, int m, int n) {
    if (!c.is_vi()) return count(c, m, n) + n * c.group().order() * count(c, m, n - 1);
    return ipow(c.prime(), n) * count(c, m, n) + vi_pairs(c.prime(), n) * count(c, m, n - 1);
}

std::vector<Category> small_categories() {
    return {Category::fi(), Category::fig(GroupSpec::parse("z2")), Category::vi(2)};
}

}  // namespace

TEST_CASE("shift dimensions") {
    auto fi = Category::fi();
    CHECK(shift(modcore::free_module(fi, 0, 4, Q)).dims() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(shift(modcore::free_module(fi, 1, 3, Q)).dims() == std::vector<std::size_t>{1, 2, 3});
    CHECK(shift(modcore::atom(fi, 0, 3, Q)).is_zero());
    CHECK_THROWS_AS(shift(modcore::free_module(fi, 0, 0, Q)), TruncationError);
    auto z2 = Category::fig(GroupSpec::parse("z2"));
    auto v = modcore::free_module(z2, 1, 3, Q);
    auto s = shift(v);
    for (int n = 0; n <= 2; ++n) CHECK(static_cast<long>(s.dim(n)) == count(z2, 1, n + 1));
}

TEST_CASE("shift acts through iota on every morphism") {
    for (auto c : small_categories()) {
        int top = c.is_vi() ? 2 : 3;
        auto v = modcore::free_module(c, 1, top, Q);
        auto s = shift(v);
        for (int i = 0; i < top; ++i)
            for (int j = i; j < top; ++j)
                for (const auto& a : c.hom(i, j)) CHECK(s.action(a) == v.action(c.iota(a)));
        CHECK(modcore::audit_functoriality(s, 1).ok);
    }
}

TEST_CASE("Phi is an isomorphism") {
    auto fi = Category::fi();
    auto z2 = Category::fig(GroupSpec::parse("z2"));
    auto vi2 = Category::vi(2);
    auto a = phi_iso(fi, 1, 3, Q);
    CHECK(a.map.source().dim(1) == 2);
    CHECK(a.map.target().dim(1) == 2);
    auto b = phi_iso(z2, 1, 3, Q);
    CHECK(b.map.source().dim(2) == 6);
    CHECK(static_cast<long>(b.map.target().dim(2)) == count(z2, 1, 3));
    auto d = phi_iso(vi2, 1, 2, Q);
    CHECK(d.map.source().dim(1) == 3);
    CHECK(static_cast<long>(d.map.target().dim(1)) == count(vi2, 1, 2));
    for (auto c : small_categories())
        for (int n = 0; n <= 2; ++n) {
            auto r = phi_iso(c, n, 3, Q);
            CHECK(r.map.is_bijective());
            CHECK(r.map.is_intertwiner());
        }
    CHECK_THROWS_AS(phi_iso(fi, 2, 2, Q), TruncationError);
}

TEST_CASE("Psi layout") {
    auto vi3 = Category::vi(3);
    PsiLayout lay(vi3, 0, 1);
    CHECK(lay.dim() == 5);
    for (const auto& s : lay.slots())
        if (!s.base) CHECK(categories::pair_line(s.v, *s.line) != 0);
    auto z2 = Category::fig(GroupSpec::parse("z2"));
    PsiLayout l2(z2, 1, 2);
    for (std::size_t k = 0; k < l2.slots().size(); ++k) CHECK(l2.slot_index(l2.slots()[k]) == k);
    CHECK(l2.label_name(0, z2).rfind("Psi_{2,0}", 0) == 0);
}

TEST_CASE("coinduced free modules: dimensions") {
    auto fi = Category::fi();
    auto z2 = Category::fig(GroupSpec::parse("z2"));
    auto q0 = coind_free(fi, 0, 5, Q);
    for (int n = 0; n <= 4; ++n) CHECK(q0.dim(n) == static_cast<std::size_t>(1 + n));
    auto q1 = coind_free(z2, 0, 4, Q);
    for (int n = 0; n <= 3; ++n) CHECK(q1.dim(n) == static_cast<std::size_t>(1 + 2 * n));
    CHECK(coind_free(Category::vi(2), 0, 2, Q).dim(1) == 3);
    CHECK(coind_hom(modcore::free_module(Category::vi(2), 0, 1, Q)).module.dim(1) == 3);
    for (auto c : {fi, z2, Category::vi(2), Category::vi(3)})
        for (int m = 0; m <= 2; ++m) {
            int top = c.is_vi() ? 2 : 3;
            auto q = coind_free(c, m, top + 1, Q);
            for (int n = 0; n <= top; ++n) {
                CHECK(static_cast<long>(q.dim(n)) == psi_dim(c, m, n));
                if (n < m) CHECK(q.dim(n) == 0);
            }
        }
    CHECK_THROWS_AS(coind_free(Category::vi(2), 0, 2, Field::prime(2)), DomainError);
    CHECK_NOTHROW(coind_free(Category::vi(2), 0, 2, Field::prime(3)));
}

TEST_CASE("coinduced free modules: closed forms are functorial") {
    for (auto c : small_categories())
        for (int m = 0; m <= 1; ++m) {
            int top = c.is_vi() ? 2 : 3;
            auto q = coind_free(c, m, top + 1, Q);
            CHECK(modcore::audit_functoriality(q, top - 1).ok);
            for (int i = 0; i <= top; ++i)
                for (int j = i; j <= std::min(top, i + 1); ++j)
                    for (const auto& a : c.hom(i, j)) CHECK(q.action(a) == psi_action(c, m, a, Q));
        }
}

TEST_CASE("closed-form action agrees with the brute-force oracle") {
    for (auto c : small_categories())
        for (int m = 0; m <= 1; ++m) {
            auto r = psi_action_oracle(c, m, 2);
            CHECK(r.ok());
            CHECK(r.data["mismatches"] == 0);
            CHECK(r.data["columns"].get<std::size_t>() > 0);
        }
    CHECK_THROWS_AS(psi_action_oracle(Category::fi(), 2, 2), DomainError);
}

TEST_CASE("coinduction by homs agrees with the closed form") {
    for (auto c : small_categories())
        for (int m = 0; m <= 1; ++m) {
            int top = 2;
            auto w = modcore::free_module(c, m, top, Q);
            auto qh = coind_hom(w);
            auto qf = coind_free(c, m, top + 1, Q);
            CHECK(qh.module.dims() == qf.dims());
            CHECK(modcore::audit_functoriality(qh.module, 1).ok);
            auto wit = coind_witness(qf, qh, m);
            CHECK(wit.is_intertwiner());
            CHECK(wit.is_bijective());
        }
}

TEST_CASE("coinduction of small modules, adjunction dimensions") {
    auto fi = Category::fi();
    int n = 3;
    std::vector<TruncatedModule> corpus;
    for (int m = 0; m <= 1; ++m) {
        corpus.push_back(modcore::free_module(fi, m, n, Q));
        corpus.push_back(modcore::atom(fi, m, n, Q));
    }
    for (const auto& v : corpus)
        for (const auto& w : corpus) {
            auto wr = modcore::restrict(w, n - 1);
            auto qw = coind_hom(wr);
            std::size_t lhs = HomSpace(shift(v), wr).dim();
            std::size_t rhs = HomSpace(modcore::restrict(v, n - 1), qw.module).dim();
            CHECK(lhs == rhs);
        }
    auto qa = coind_hom(modcore::atom(fi, 0, 2, Q));
    CHECK(qa.module.dims() == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("Theta for FI_G") {
    auto fi = Category::fi();
    auto r = theta(fi, 0, 4, Q);
    CHECK(r.report.ok());
    CHECK(r.u.module.dims() == std::vector<std::size_t>{0, 1, 2, 3});
    auto z2 = Category::fig(GroupSpec::parse("z2"));
    auto s = theta(z2, 1, 4, Q);
    CHECK(s.report.ok());
    auto f1 = modcore::free_module(z2, 1, 3, Q), f2 = modcore::free_module(z2, 2, 3, Q);
    for (int n = 0; n <= 3; ++n) CHECK(s.q.dim(n) == f1.dim(n) + f2.dim(n));
    CHECK(s.theta.is_intertwiner());
    CHECK(s.iso.is_bijective());
    CHECK_THROWS_AS(theta(Category::vi(2), 0, 3, Q), DomainError);
    CHECK_THROWS_AS(theta(fi, 1, 2, Q), TruncationError);
}

TEST_CASE("pi for VI") {
    auto a = pi_map(Category::vi(2), 0, 2, Q);
    CHECK(a.report.ok());
    CHECK(a.q.dim(1) == 3);
    CHECK(a.pi.target().dim(1) == 1);
    CHECK(modcore::kernel(a.pi).module.dim(1) == 2);
    auto b = pi_map(Category::vi(3), 0, 2, Q);
    CHECK(b.q.dim(1) == 5);
    CHECK(b.pi.target().dim(1) == 2);
    CHECK(modcore::kernel(b.pi).module.dim(1) == 3);
    auto c = pi_map(Category::vi(2), 1, 3, Q);
    CHECK(c.report.ok());
    CHECK(modcore::compose(c.pi, c.section) == ModuleHom::identity(c.pi.target()));
    CHECK_THROWS_AS(pi_map(Category::vi(2), 0, 2, Field::prime(2)), DomainError);
    CHECK(pi_map(Category::vi(2), 0, 2, Field::prime(5)).report.ok());
}

TEST_CASE("key matrix identity on random admissible tuples") {
    for (int p : {2, 3}) {
        auto r = key_identity_check(p, 3, 50, 7 + static_cast<std::uint64_t>(p));
        CHECK(r.ok());
    }
}
