#include "coind/categories/morphism.hpp"

#include "coind/error.hpp"

namespace coind::categories {

int source(const Morphism& a) {
    if (auto* x = std::get_if<FIGMorphism>(&a)) return x->m;
    return std::get<VIMorphism>(a).m();
}

int target(const Morphism& a) {
    if (auto* x = std::get_if<FIGMorphism>(&a)) return x->n;
    return std::get<VIMorphism>(a).n();
}

std::vector<int> morphism_key(const Morphism& a) {
    std::vector<int> k;
    if (auto* x = std::get_if<FIGMorphism>(&a)) {
        k.reserve(3 + x->f.size() + x->c.size());
        k.push_back(0);
        k.push_back(x->m);
        k.push_back(x->n);
        k.insert(k.end(), x->f.begin(), x->f.end());
        k.insert(k.end(), x->c.begin(), x->c.end());
    } else {
        const auto& v = std::get<VIMorphism>(a).mat;
        k.reserve(3 + v.a.size());
        k.push_back(1);
        k.push_back(v.rows);
        k.push_back(v.cols);
        k.insert(k.end(), v.a.begin(), v.a.end());
    }
    return k;
}

std::string to_string(const Morphism& a, const GroupSpec& g) {
    if (auto* x = std::get_if<FIGMorphism>(&a)) {
        std::string s = "f=(";
        for (std::size_t t = 0; t < x->f.size(); ++t) s += (t ? "," : "") + std::to_string(x->f[t]);
        s += ")";
        if (!g.is_trivial()) {
            s += " c=(";
            for (std::size_t t = 0; t < x->c.size(); ++t) s += (t ? "," : "") + g.element_name(x->c[t]);
            s += ")";
        }
        s += " " + std::to_string(x->m) + "->" + std::to_string(x->n);
        return s;
    }
    const auto& v = std::get<VIMorphism>(a);
    return fp_to_string(v.mat) + " " + std::to_string(v.m()) + "->" + std::to_string(v.n());
}

FIGMorphism make_fig(const GroupSpec& g, int n, std::vector<int> f, std::vector<int> c) {
    int m = static_cast<int>(f.size());
    if (c.empty()) c.assign(f.size(), 0);
    if (c.size() != f.size()) throw DomainError("colouring length differs from source degree");
    std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
    for (int v : f) {
        if (v < 1 || v > n) throw DomainError("injection value out of range");
        if (seen[static_cast<std::size_t>(v)]) throw DomainError("map is not injective");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int h : c)
        if (h < 0 || h >= g.order()) throw DomainError("colour outside the group");
    return FIGMorphism{m, n, std::move(f), std::move(c)};
}

VIMorphism make_vi(FpMatrix m) {
    for (auto& x : m.a) x = fp_mod(x, m.p);
    if (fp_rank(m) != m.cols) throw DomainError("matrix does not have full column rank");
    return VIMorphism{std::move(m)};
}

Line make_line(int p, const FpVector& v) {
    Line l{p, FpVector(v.size())};
    int lead = 0;
    for (int x : v)
        if (fp_mod(x, p) != 0) {
            lead = fp_mod(x, p);
            break;
        }
    if (lead == 0) throw DomainError("zero vector spans no line");
    int s = fp_inv(lead, p);
    for (std::size_t i = 0; i < v.size(); ++i) l.rep[i] = fp_mod(static_cast<long>(v[i]) * s, p);
    return l;
}

std::vector<Line> lines(int p, int n) {
    std::vector<Line> out;
    for (const auto& v : fp_vectors(p, n)) {
        int lead = 0;
        for (int x : v)
            if (x != 0) {
                lead = x;
                break;
            }
        if (lead == 1) out.push_back(Line{p, v});
    }
    return out;
}

bool line_contained(const Line& l, const FpMatrix& a) {
    FpMatrix aug(a.p, a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = l.rep[static_cast<std::size_t>(i)];
    }
    return fp_rank(aug) == fp_rank(a);
}

FpMatrix complement_map(const Line& l) {
    FpMatrix col = fp_from_columns(l.p, l.dim(), {l.rep});
    FpMatrix w = fp_left_annihilator(col);
    if (w.rows != l.dim() - 1) throw ConsistencyFailure("complement map has wrong rank");
    return w;
}

int pair_line(const FpVector& u, const Line& l) { return fp_dot(u, l.rep, l.p); }

Line image_line(const VIMorphism& a, const Line& l) { return make_line(l.p, fp_apply(a.mat, l.rep)); }

VIMorphism alpha_wp(const VIMorphism& a, const Line& l) {
    int n = a.m();
    if (l.dim() != n) throw DomainError("line lives in the wrong space");
    FpMatrix w = complement_map(l);
    Line al = image_line(a, l);
    FpMatrix wa = complement_map(al);
    // w is in reduced echelon form, so the pivot columns give a right inverse
    FpMatrix r(l.p, n, n - 1);
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < n; ++j)
            if (w.at(i, j) != 0) {
                r.at(j, i) = 1;
                break;
            }
    FpMatrix res = fp_mul(fp_mul(wa, a.mat), r);
    if (!(fp_mul(res, w) == fp_mul(wa, a.mat))) throw ConsistencyFailure("alpha_wp square does not commute");
    return VIMorphism{res};
}

VIMorphism special_vi(int p, const FpVector& u, const std::optional<Line>& l) {
    int n = static_cast<int>(u.size());
    if (!l) return make_vi(fp_vstack(fp_row(u, p), fp_identity(p, n)));
    if (l->dim() != n) throw DomainError("line lives in the wrong space");
    if (pair_line(u, *l) == 0) throw DegenerateStack("u^t(l) = 0: stacked matrix is singular");
    return make_vi(fp_vstack(fp_row(u, p), complement_map(*l)));
}

FIGMorphism special_fig_base(const GroupSpec&, int n) {
    FIGMorphism a{n, n + 1, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int t = 1; t <= n; ++t) a.f[static_cast<std::size_t>(t - 1)] = t + 1;
    return a;
}

FIGMorphism special_fig_swap(const GroupSpec& g, int n, int r, int h) {
    if (r < 1 || r > n) throw DomainError("swap position out of range");
    if (h < 0 || h >= g.order()) throw DomainError("colour outside the group");
    FIGMorphism a{n, n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int t = 1; t <= n; ++t) a.f[static_cast<std::size_t>(t - 1)] = t < r ? t + 1 : (t == r ? 1 : t);
    a.c[static_cast<std::size_t>(r - 1)] = h;
    return a;
}

bool in_image(const FIGMorphism& a, int r) {
    for (int v : a.f)
        if (v == r) return true;
    return false;
}

FIGMorphism del_r(const FIGMorphism& a, int r) {
    if (r < 1 || r > a.n) throw InvalidDeletion("deletion index out of range");
    if (in_image(a, r)) throw InvalidDeletion("deletion index lies in the image");
    FIGMorphism b{a.m, a.n - 1, a.f, a.c};
    for (auto& v : b.f)
        if (v > r) --v;
    return b;
}

FIGMorphism alpha_s(const FIGMorphism& a, int s) {
    if (s < 1 || s > a.m) throw DomainError("alpha_s index out of range");
    int fs = a.f[static_cast<std::size_t>(s - 1)];
    FIGMorphism b{a.m - 1, a.n - 1, {}, {}};
    for (int t1 = 1; t1 < a.m; ++t1) {
        int t = t1 < s ? t1 : t1 + 1;
        int v = a.f[static_cast<std::size_t>(t - 1)];
        b.f.push_back(v > fs ? v - 1 : v);
        b.c.push_back(a.c[static_cast<std::size_t>(t - 1)]);
    }
    return b;
}

FIGMorphism fig_inverse(const GroupSpec& g, const FIGMorphism& a) {
    if (a.m != a.n) throw DomainError("only automorphisms are invertible");
    FIGMorphism b{a.n, a.m, std::vector<int>(a.f.size()), std::vector<int>(a.f.size())};
    for (int t = 1; t <= a.m; ++t) b.f[static_cast<std::size_t>(a.f[static_cast<std::size_t>(t - 1)] - 1)] = t;
    for (int t = 1; t <= a.m; ++t) {
        int ft = b.f[static_cast<std::size_t>(t - 1)];
        b.c[static_cast<std::size_t>(t - 1)] = g.inverse(a.c[static_cast<std::size_t>(ft - 1)]);
    }
    return b;
}

}  // namespace coind::categories
