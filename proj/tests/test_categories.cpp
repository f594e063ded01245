#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "coind/categories/category.hpp"
#include "coind/error.hpp"

using namespace coind::categories;

namespace {

// brute force oracles, independent of the library enumeration
std::uint64_t brute_fig_count(int m, int n, int g) {
    std::uint64_t count = 0;
    std::uint64_t total = 1;
    for (int t = 0; t < m; ++t) total *= static_cast<std::uint64_t>(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        std::set<std::uint64_t> seen;
        for (int t = 0; t < m; ++t) {
            seen.insert(x % static_cast<std::uint64_t>(n));
            x /= static_cast<std::uint64_t>(n);
        }
        if (static_cast<int>(seen.size()) == m) ++count;
    }
    for (int t = 0; t < m; ++t) count *= static_cast<std::uint64_t>(g);
    return count;
}

int brute_rank(std::vector<std::vector<int>> a, int p) {
    int r = 0;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] % p) piv = i;
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        int inv = 1;
        while ((a[r][c] * inv) % p != 1) ++inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            int f = (a[i][c] * inv) % p;
            for (int j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

std::uint64_t brute_vi_count(int m, int n, int p) {
    if (m > n) return 0;
    std::uint64_t count = 0, total = 1;
    for (int t = 0; t < m * n; ++t) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
        std::uint64_t x = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                a[i][j] = static_cast<int>(x % static_cast<std::uint64_t>(p));
                x /= static_cast<std::uint64_t>(p);
            }
        if (brute_rank(a, p) == m) ++count;
    }
    return count;
}

std::vector<Category> small_categories() {
    return {Category::fi(), Category::fig(GroupSpec::parse("z2")), Category::vi(2), Category::vi(3)};
}

int max_degree(const Category& c) { return c.is_vi() ? 3 : 4; }

}  // namespace

TEST_CASE("group spec parsing and arithmetic") {
    GroupSpec g = GroupSpec::parse("z3xz2");
    CHECK(g.order() == 6);
    CHECK(g.exponent() == 6);
    CHECK(g.name() == "z3xz2");
    for (int a = 0; a < 6; ++a) {
        CHECK(g.multiply(a, g.inverse(a)) == 0);
        for (int b = 0; b < 6; ++b) CHECK(g.multiply(a, b) == g.multiply(b, a));
    }
    CHECK(g.components(g.from_components({2, 1})) == std::vector<int>{2, 1});
    CHECK(GroupSpec::parse("trivial").is_trivial());
    CHECK_THROWS(GroupSpec::parse("s3"));
}

TEST_CASE("enumeration counts against brute force and closed forms") {
    Category fi = Category::fi();
    CHECK(fi.hom(0, 5).size() == 1);
    CHECK(Category::fig(GroupSpec::parse("z2")).hom(1, 2).size() == 4);
    CHECK(Category::vi(2).hom(1, 2).size() == 3);
    CHECK(fi.hom_size(2, 4) == 12);
    CHECK(Category::vi(2).hom_size(2, 3) == 42);
    CHECK(fi.hom(3, 2).empty());
    for (int m = 0; m <= 4; ++m)
        for (int n = m; n <= 4; ++n) {
            CHECK(fi.hom(m, n).size() == brute_fig_count(m, n, 1));
            CHECK(fi.hom_size(m, n) == brute_fig_count(m, n, 1));
            Category z2 = Category::fig(GroupSpec::parse("z2"));
            CHECK(z2.hom(m, n).size() == brute_fig_count(m, n, 2));
            CHECK(z2.hom_size(m, n) == z2.hom(m, n).size());
        }
    for (int p : {2, 3})
        for (int m = 0; m <= 3; ++m)
            for (int n = m; n <= 3; ++n) {
                Category vi = Category::vi(p);
                if (m * n <= 6) CHECK(vi.hom(m, n).size() == brute_vi_count(m, n, p));
                CHECK(vi.hom(m, n).size() == vi.hom_size(m, n));
            }
}

TEST_CASE("enumeration is duplicate free and in canonical order") {
    for (const auto& c : small_categories())
        for (int m = 0; m <= 2; ++m)
            for (int n = m; n <= 3; ++n) {
                const auto& hs = c.hom(m, n);
                for (std::size_t i = 0; i < hs.size(); ++i) {
                    CHECK(c.index_of(hs[i]) == i);
                    if (i == 0) continue;
                    if (c.is_vi()) {
                        // column-major lex
                        auto a = fp_transpose(std::get<VIMorphism>(hs[i - 1]).mat).a;
                        auto b = fp_transpose(std::get<VIMorphism>(hs[i]).mat).a;
                        CHECK(a < b);
                    } else {
                        const auto& a = std::get<FIGMorphism>(hs[i - 1]);
                        const auto& b = std::get<FIGMorphism>(hs[i]);
                        CHECK(std::tie(a.f, a.c) < std::tie(b.f, b.c));
                    }
                }
            }
}

TEST_CASE("composition examples") {
    GroupSpec z2 = GroupSpec::parse("z2");
    Category c = Category::fig(z2);
    FIGMorphism alpha = make_fig(z2, 1, {1}, {1});
    FIGMorphism beta = make_fig(z2, 2, {2}, {1});
    auto r = std::get<FIGMorphism>(c.compose(beta, alpha));
    CHECK(r.f == std::vector<int>{2});
    CHECK(r.c == std::vector<int>{0});
    CHECK_THROWS_AS(c.compose(alpha, beta), coind::CompositionError);

    Category vi = Category::vi(2);
    Morphism col = make_vi(FpMatrix{2, 2, 1, {1, 0}});
    CHECK(vi.compose(col, vi.identity(1)) == col);
}

TEST_CASE("identity laws and associativity on random triples") {
    std::mt19937_64 rng(2024);
    for (const auto& c : small_categories()) {
        int top = c.is_vi() ? 3 : 4;
        for (int m = 0; m <= 3; ++m)
            for (int n = m; n <= 3; ++n)
                for (const auto& a : c.hom(m, n)) {
                    CHECK(c.compose(c.identity(n), a) == a);
                    CHECK(c.compose(a, c.identity(m)) == a);
                }
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> d(4);
            for (auto& x : d) x = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
            std::sort(d.begin(), d.end());
            auto pick = [&](int m, int n) {
                const auto& hs = c.hom(m, n);
                return hs[rng() % hs.size()];
            };
            Morphism a = pick(d[0], d[1]), b = pick(d[1], d[2]), g = pick(d[2], d[3]);
            CHECK(c.compose(c.compose(g, b), a) == c.compose(g, c.compose(b, a)));
        }
    }
}

TEST_CASE("monoidal product and iota") {
    Category fi = Category::fi();
    GroupSpec t;
    CHECK(fi.monoidal(fi.identity(2), fi.identity(3)) == fi.identity(5));
    auto r = std::get<FIGMorphism>(fi.monoidal(make_fig(t, 2, {1}), make_fig(t, 1, {1})));
    CHECK(r.f == std::vector<int>{1, 3});
    CHECK(r.n == 3);
    auto io = std::get<FIGMorphism>(fi.iota(make_fig(t, 2, {2})));
    CHECK(io.f == std::vector<int>{1, 3});
    Category vi = Category::vi(2);
    CHECK(vi.monoidal(vi.identity(1), vi.identity(1)) == vi.identity(2));
    for (const auto& c : small_categories()) {
        CHECK(c.iota(c.identity(2)) == c.identity(3));
        CHECK(c.iota(c.standard(1)) == c.standard(2));
        for (int m = 0; m <= 2; ++m)
            for (int n = m; n <= 2; ++n) {
                std::set<std::vector<int>> images;
                for (const auto& a : c.hom(m, n)) {
                    images.insert(morphism_key(c.iota(a)));
                    CHECK(c.iota(c.iota(a)) == c.monoidal(c.identity(2), a));
                }
                CHECK(images.size() == c.hom(m, n).size());
            }
    }
}

TEST_CASE("every morphism factors through each intermediate degree") {
    for (const auto& c : small_categories())
        for (int m = 0; m <= 3; ++m)
            for (int l = m; l <= 3; ++l)
                for (int n = l; n <= 3; ++n) {
                    if (c.is_vi() && c.prime() == 3 && n == 3 && m >= 1) continue;  // covered by p=2
                    std::set<std::vector<int>> hit;
                    for (const auto& b : c.hom(l, n))
                        for (const auto& a : c.hom(m, l)) hit.insert(morphism_key(c.compose(b, a)));
                    CHECK(hit.size() == c.hom(m, n).size());
                }
}

TEST_CASE("special FI_G morphisms") {
    GroupSpec z2 = GroupSpec::parse("z2");
    auto b = special_fig_base(z2, 1);
    CHECK(b.f == std::vector<int>{2});
    CHECK(b.c == std::vector<int>{0});
    auto s = special_fig_swap(z2, 2, 1, 0);
    CHECK(s.f == std::vector<int>{1, 2});
    auto s2 = special_fig_swap(z2, 2, 2, 1);
    CHECK(s2.f == std::vector<int>{2, 1});
    CHECK(s2.c == std::vector<int>{0, 1});
    CHECK_THROWS(special_fig_swap(z2, 2, 3, 0));
    Category c = Category::fig(z2);
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r)
            for (int h = 0; h < 2; ++h) {
                Morphism x = special_fig_swap(z2, n, r, h);
                CHECK(c.compose(x, fig_inverse(z2, std::get<FIGMorphism>(x))) == c.identity(n));
            }
}

TEST_CASE("deletions and alpha_s") {
    GroupSpec t;
    CHECK(del_r(make_fig(t, 2, {2}), 1).f == std::vector<int>{1});
    CHECK(del_r(make_fig(t, 3, {3}), 2).f == std::vector<int>{2});
    CHECK_THROWS_AS(del_r(make_fig(t, 2, {1, 2}), 1), coind::InvalidDeletion);
    auto e0 = alpha_s(make_fig(t, 1, {1}), 1);
    CHECK(e0.m == 0);
    CHECK(e0.n == 0);
    CHECK(alpha_s(make_fig(t, 2, {2, 1}), 1).f == std::vector<int>{1});
    GroupSpec z3 = GroupSpec::parse("z3");
    auto a = alpha_s(make_fig(z3, 3, {1, 3}, {1, 2}), 2);
    CHECK(a.f == std::vector<int>{1});
    CHECK(a.n == 2);
    CHECK(a.c == std::vector<int>{1});
    Category c = Category::fig(z3);
    for (int n = 1; n <= 3; ++n)
        for (int l = n; l <= 3; ++l)
            for (const auto& x : c.hom(n, l))
                for (int s = 1; s <= n; ++s) CHECK_NOTHROW(c.index_of(alpha_s(std::get<FIGMorphism>(x), s)));
}

TEST_CASE("lines, complement maps and alpha_wp") {
    for (int p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            auto ls = lines(p, n);
            int q = 1;
            for (int k = 0; k < n; ++k) q *= p;
            CHECK(static_cast<int>(ls.size()) == (q - 1) / (p - 1));
            for (const auto& l : ls) {
                FpMatrix w = complement_map(l);
                CHECK(w.rows == n - 1);
                CHECK(fp_rank(w) == n - 1);
                for (int x : fp_apply(w, l.rep)) CHECK(x == 0);
                CHECK(w == fp_rref(w));
            }
        }
        Category c = Category::vi(p);
        for (int n = 1; n <= 3; ++n)
            for (int l = n; l <= 3; ++l) {
                if (p == 3 && n == 3) continue;
                for (const auto& a0 : c.hom(n, l)) {
                    const auto& a = std::get<VIMorphism>(a0);
                    for (const auto& wp : lines(p, n)) {
                        VIMorphism b = alpha_wp(a, wp);
                        CHECK(fp_mul(b.mat, complement_map(wp)) == fp_mul(complement_map(image_line(a, wp)), a.mat));
                        CHECK(fp_rank(b.mat) == n - 1);
                    }
                }
            }
    }
    // identity gives identity
    for (const auto& l : lines(3, 3))
        CHECK(alpha_wp(VIMorphism{fp_identity(3, 3)}, l).mat == fp_identity(3, 2));
    // swap over F_2
    VIMorphism sw{FpMatrix{2, 2, 2, {0, 1, 1, 0}}};
    Line l = make_line(2, {1, 0});
    VIMorphism b = alpha_wp(sw, l);
    CHECK(b.mat.rows == 1);
    CHECK(fp_mul(b.mat, complement_map(l)) == fp_mul(complement_map(image_line(sw, l)), sw.mat));
}

TEST_CASE("special VI maps and automatic nondegeneracy") {
    auto a = special_vi(2, {1}, std::nullopt);
    CHECK(a.mat == FpMatrix{2, 2, 1, {1, 1}});
    auto b = special_vi(2, {0}, std::nullopt);
    CHECK(b.mat == FpMatrix{2, 2, 1, {0, 1}});
    auto c = special_vi(2, {1, 0}, make_line(2, {1, 0}));
    CHECK(fp_rank(c.mat) == 2);
    CHECK_THROWS_AS(special_vi(2, {0, 1}, make_line(2, {1, 0})), coind::DegenerateStack);
    for (int p : {2, 3}) {
        Category vi = Category::vi(p);
        for (int n = 1; n <= 2; ++n)
            for (int l = n; l <= 3; ++l)
                for (const auto& a0 : vi.hom(n, l)) {
                    const auto& al = std::get<VIMorphism>(a0);
                    for (const auto& u : fp_vectors(p, l)) {
                        FpVector v = fp_apply(fp_transpose(al.mat), u);
                        for (const auto& wp : lines(p, n))
                            if (pair_line(v, wp) != 0) CHECK(pair_line(u, image_line(al, wp)) != 0);
                    }
                }
    }
}

TEST_CASE("generator words reproduce every morphism") {
    std::vector<Category> cats = small_categories();
    cats.push_back(Category::fig(GroupSpec::parse("z3xz2")));
    for (const auto& c : cats)
        for (int m = 0; m <= 3; ++m)
            for (int n = m; n <= 3; ++n) {
                if (c.hom_size(m, n) > 3000) continue;
                for (const auto& a : c.hom(m, n)) {
                    Factorization w = c.factor(a);
                    CHECK(w.lifts == n - m);
                    CHECK(c.evaluate(w, m) == a);
                }
            }
    Category v3 = Category::vi(3);
    std::mt19937_64 rng(3);
    const auto& gl3 = v3.hom(3, 3);
    for (int t = 0; t < 200; ++t) {
        const auto& a = gl3[rng() % gl3.size()];
        CHECK(v3.evaluate(v3.factor(a), 3) == a);
    }
}
