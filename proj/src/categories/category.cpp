#include "coind/categories/category.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#include "coind/error.hpp"

namespace coind::categories {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : k) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ull;
        return h;
    }
};

struct HomSet {
    std::vector<Morphism> list;
    std::unordered_map<std::vector<int>, std::size_t, KeyHash> index;
};

int primitive_root(int p) {
    for (int g = 1; g < p; ++g) {
        int x = 1, ord = 0;
        do {
            x = (x * g) % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1) return g;
    }
    return 1;
}

void enumerate_fig(const GroupSpec& g, int m, int n, std::vector<Morphism>& out) {
    std::vector<int> f(static_cast<std::size_t>(m));
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    int total_c = 1;
    for (int t = 0; t < m; ++t) total_c *= g.order();
    auto rec = [&](auto&& self, int t) -> void {
        if (t == m) {
            for (int code = 0; code < total_c; ++code) {
                std::vector<int> c(static_cast<std::size_t>(m));
                int x = code;
                for (int k = m - 1; k >= 0; --k) {
                    c[static_cast<std::size_t>(k)] = x % g.order();
                    x /= g.order();
                }
                out.emplace_back(FIGMorphism{m, n, f, std::move(c)});
            }
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            f[static_cast<std::size_t>(t)] = v;
            self(self, t + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
}

void enumerate_vi(int p, int m, int n, std::vector<Morphism>& out) {
    auto vecs = fp_vectors(p, n);
    std::vector<FpVector> cols;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == m) {
            out.emplace_back(VIMorphism{fp_from_columns(p, n, cols)});
            return;
        }
        for (const auto& v : vecs) {
            cols.push_back(v);
            if (fp_rank(fp_from_columns(p, n, cols)) == j + 1) self(self, j + 1);
            cols.pop_back();
        }
    };
    rec(rec, 0);
}

FIGMorphism transposition(int n, int a, int b) {
    FIGMorphism t{n, n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int i = 1; i <= n; ++i) t.f[static_cast<std::size_t>(i - 1)] = i;
    std::swap(t.f[static_cast<std::size_t>(a - 1)], t.f[static_cast<std::size_t>(b - 1)]);
    return t;
}

}  // namespace

struct Category::Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::shared_ptr<HomSet>> homs;
    std::map<int, std::shared_ptr<std::vector<Morphism>>> gens;
};

Category::Category(Kind k, GroupSpec g, int p) : kind_(k), group_(std::move(g)), p_(p), cache_(std::make_shared<Cache>()) {}

Category Category::fi() { return Category(Kind::FIG, GroupSpec::trivial(), 0); }
Category Category::fig(GroupSpec g) { return Category(Kind::FIG, std::move(g), 0); }
Category Category::vi(int p) {
    if (p < 2 || p > 97) throw DomainError("VI needs a small prime p");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("VI needs a prime p");
    return Category(Kind::VI, GroupSpec::trivial(), p);
}

Category Category::parse(const std::string& kind, const std::string& group, int p) {
    if (kind == "fi") return fi();
    if (kind == "fig") return fig(GroupSpec::parse(group));
    if (kind == "vi") return vi(p);
    throw DomainError("unknown category: " + kind);
}

std::string Category::name() const {
    if (kind_ == Kind::VI) return "VI(F" + std::to_string(p_) + ")";
    if (group_.is_trivial()) return "FI";
    return "FI_G(" + group_.name() + ")";
}

bool Category::operator==(const Category& o) const { return kind_ == o.kind_ && group_ == o.group_ && p_ == o.p_; }

const std::vector<Morphism>& Category::hom(int m, int n) const {
    if (m < 0 || n < 0) throw DomainError("negative degree");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slot = cache_->homs[{m, n}];
    if (!slot) {
        auto hs = std::make_shared<HomSet>();
        if (m <= n) {
            if (kind_ == Kind::FIG)
                enumerate_fig(group_, m, n, hs->list);
            else
                enumerate_vi(p_, m, n, hs->list);
        }
        for (std::size_t i = 0; i < hs->list.size(); ++i) hs->index.emplace(morphism_key(hs->list[i]), i);
        slot = hs;
    }
    return slot->list;
}

std::size_t Category::index_of(const Morphism& a) const {
    const auto& list = hom(source(a), target(a));
    (void)list;
    std::lock_guard<std::mutex> lock(cache_->mu);
    const auto& hs = cache_->homs.at({source(a), target(a)});
    auto it = hs->index.find(morphism_key(a));
    if (it == hs->index.end()) throw DomainError("morphism not in the enumerated hom-set");
    return it->second;
}

std::uint64_t Category::hom_size(int m, int n) const {
    if (m < 0 || n < 0 || m > n) return 0;
    std::uint64_t r = 1;
    auto mul = [&](std::uint64_t x) {
        if (__builtin_mul_overflow(r, x, &r)) throw DomainError("hom-set size overflows");
    };
    if (kind_ == Kind::FIG) {
        for (int i = 0; i < m; ++i) {
            mul(static_cast<std::uint64_t>(group_.order()));
            mul(static_cast<std::uint64_t>(n - i));
        }
    } else {
        std::uint64_t qn = 1;
        for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(p_);
        std::uint64_t qi = 1;
        for (int i = 0; i < m; ++i) {
            mul(qn - qi);
            qi *= static_cast<std::uint64_t>(p_);
        }
    }
    return r;
}

Morphism Category::compose(const Morphism& outer, const Morphism& inner) const {
    if (source(outer) != target(inner))
        throw CompositionError("cannot compose: inner target " + std::to_string(target(inner)) + " != outer source " +
                               std::to_string(source(outer)));
    if (kind_ == Kind::FIG) {
        const auto* a2 = std::get_if<FIGMorphism>(&outer);
        const auto* a1 = std::get_if<FIGMorphism>(&inner);
        if (!a1 || !a2) throw CompositionError("mixed categories");
        FIGMorphism r{a1->m, a2->n, std::vector<int>(a1->f.size()), std::vector<int>(a1->f.size())};
        for (std::size_t t = 0; t < a1->f.size(); ++t) {
            int ft = a1->f[t];
            r.f[t] = a2->f[static_cast<std::size_t>(ft - 1)];
            r.c[t] = group_.multiply(a2->c[static_cast<std::size_t>(ft - 1)], a1->c[t]);
        }
        return r;
    }
    const auto* b2 = std::get_if<VIMorphism>(&outer);
    const auto* b1 = std::get_if<VIMorphism>(&inner);
    if (!b1 || !b2) throw CompositionError("mixed categories");
    if (b1->mat.p != p_ || b2->mat.p != p_) throw CompositionError("field mismatch");
    return VIMorphism{fp_mul(b2->mat, b1->mat)};
}

Morphism Category::identity(int n) const {
    if (kind_ == Kind::FIG) {
        FIGMorphism e{n, n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
        for (int t = 1; t <= n; ++t) e.f[static_cast<std::size_t>(t - 1)] = t;
        return e;
    }
    return VIMorphism{fp_identity(p_, n)};
}

Morphism Category::monoidal(const Morphism& a, const Morphism& b) const {
    if (kind_ == Kind::FIG) {
        const auto& x = std::get<FIGMorphism>(a);
        const auto& y = std::get<FIGMorphism>(b);
        FIGMorphism r{x.m + y.m, x.n + y.n, x.f, x.c};
        for (std::size_t t = 0; t < y.f.size(); ++t) {
            r.f.push_back(y.f[t] + x.n);
            r.c.push_back(y.c[t]);
        }
        return r;
    }
    return VIMorphism{fp_block_diag(std::get<VIMorphism>(a).mat, std::get<VIMorphism>(b).mat)};
}

Morphism Category::iota(const Morphism& a) const { return monoidal(identity(1), a); }

Morphism Category::standard(int n) const {
    if (kind_ == Kind::FIG) {
        FIGMorphism s{n, n + 1, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
        for (int t = 1; t <= n; ++t) s.f[static_cast<std::size_t>(t - 1)] = t;
        return s;
    }
    FpMatrix m(p_, n + 1, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return VIMorphism{m};
}

const std::vector<Morphism>& Category::generators(int n) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slot = cache_->gens[n];
    if (!slot) {
        auto gens = std::make_shared<std::vector<Morphism>>();
        if (kind_ == Kind::FIG) {
            for (int k = 1; k < n; ++k) gens->emplace_back(transposition(n, k, k + 1));
            if (n >= 1) {
                for (int g : group_.generators()) {
                    FIGMorphism e = transposition(n, 1, 1);
                    e.c[0] = g;
                    gens->emplace_back(e);
                }
            }
        } else {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a == b) continue;
                    FpMatrix m = fp_identity(p_, n);
                    m.at(a, b) = 1;
                    gens->emplace_back(VIMorphism{m});
                }
            if (p_ > 2) {
                int w = primitive_root(p_);
                for (int k = 0; k < n; ++k) {
                    FpMatrix m = fp_identity(p_, n);
                    m.at(k, k) = w;
                    gens->emplace_back(VIMorphism{m});
                }
            }
        }
        slot = gens;
    }
    return *slot;
}

Factorization Category::factor(const Morphism& a) const {
    int i = source(a), j = target(a);
    Factorization out;
    out.lifts = j - i;
    if (kind_ == Kind::FIG) {
        const auto& x = std::get<FIGMorphism>(a);
        std::vector<int> f = x.f, c = x.c;
        for (int v = 1; v <= j; ++v)
            if (!in_image(x, v)) {
                f.push_back(v);
                c.push_back(0);
            }
        // permutation part: peel descents off the right
        std::vector<std::size_t> rev;
        std::vector<int> pi = f;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int t = 0; t + 1 < j; ++t)
                if (pi[static_cast<std::size_t>(t)] > pi[static_cast<std::size_t>(t + 1)]) {
                    std::swap(pi[static_cast<std::size_t>(t)], pi[static_cast<std::size_t>(t + 1)]);
                    rev.push_back(static_cast<std::size_t>(t));
                    changed = true;
                }
        }
        out.word.assign(rev.rbegin(), rev.rend());
        std::size_t colour_base = static_cast<std::size_t>(std::max(j - 1, 0));
        std::vector<int> nontrivial;
        for (std::size_t k = 0; k < group_.factors().size(); ++k)
            if (group_.factors()[k] > 1) nontrivial.push_back(static_cast<int>(k));
        for (int t = 1; t <= j; ++t) {
            int h = c[static_cast<std::size_t>(t - 1)];
            if (h == 0) continue;
            auto comps = group_.components(h);
            std::vector<std::size_t> to1;  // (1 t) = s_{t-1} ... s_1 ... s_{t-1}
            for (int k = t - 1; k >= 1; --k) to1.push_back(static_cast<std::size_t>(k - 1));
            for (int k = 2; k <= t - 1; ++k) to1.push_back(static_cast<std::size_t>(k - 1));
            out.word.insert(out.word.end(), to1.begin(), to1.end());
            for (std::size_t q = 0; q < nontrivial.size(); ++q)
                for (int e = 0; e < comps[static_cast<std::size_t>(nontrivial[q])]; ++e) out.word.push_back(colour_base + q);
            out.word.insert(out.word.end(), to1.begin(), to1.end());
        }
        return out;
    }
    const auto& x = std::get<VIMorphism>(a);
    int p = p_;
    std::vector<FpVector> cols;
    for (int k = 0; k < i; ++k) cols.push_back(x.mat.column(k));
    for (int k = 0; k < j && static_cast<int>(cols.size()) < j; ++k) {
        FpVector e(static_cast<std::size_t>(j), 0);
        e[static_cast<std::size_t>(k)] = 1;
        cols.push_back(e);
        if (fp_rank(fp_from_columns(p, j, cols)) != static_cast<int>(cols.size())) cols.pop_back();
    }
    FpMatrix g = fp_from_columns(p, j, cols);
    int w = primitive_root(p);
    auto log_w = [&](int v) {
        int x1 = 1;
        for (int t = 0; t < p - 1; ++t) {
            if (x1 == v) return t;
            x1 = (x1 * w) % p;
        }
        throw ConsistencyFailure("discrete log failed");
    };
    auto eidx = [&](int r, int s) { return static_cast<std::size_t>(r * (j - 1) + (s < r ? s : s - 1)); };
    auto didx = [&](int r) { return static_cast<std::size_t>(j * (j - 1) + r); };
    // each recorded op L satisfies L ... g -> I; we emit words for L^{-1} in order
    for (int col = 0; col < j; ++col) {
        if (g.at(col, col) == 0) {
            int r = -1;
            for (int k = col + 1; k < j; ++k)
                if (g.at(k, col) != 0) {
                    r = k;
                    break;
                }
            if (r < 0) throw ConsistencyFailure("singular completion");
            for (int t = 0; t < j; ++t) g.at(col, t) = fp_mod(g.at(col, t) + g.at(r, t), p);
            // L = I + e_{col,r}; L^{-1} = E^{p-1}
            for (int t = 0; t < p - 1; ++t) out.word.push_back(eidx(col, r));
        }
        int v = g.at(col, col);
        if (v != 1) {
            int s = fp_inv(v, p);
            for (int t = 0; t < j; ++t) g.at(col, t) = fp_mod(g.at(col, t) * s, p);
            // L scales by v^{-1}; L^{-1} scales by v
            for (int t = 0; t < log_w(v); ++t) out.word.push_back(didx(col));
        }
        for (int r = 0; r < j; ++r) {
            if (r == col) continue;
            int cval = g.at(r, col);
            if (cval == 0) continue;
            for (int t = 0; t < j; ++t) g.at(r, t) = fp_mod(g.at(r, t) - cval * g.at(col, t), p);
            // L = I - c e_{r,col}; L^{-1} = E^c
            for (int t = 0; t < cval; ++t) out.word.push_back(eidx(r, col));
        }
    }
    return out;
}

Morphism Category::evaluate(const Factorization& w, int src) const {
    Morphism acc = identity(src);
    for (int k = 0; k < w.lifts; ++k) acc = compose(standard(src + k), acc);
    int top = src + w.lifts;
    const auto& gens = generators(top);
    for (std::size_t k = w.word.size(); k-- > 0;) acc = compose(gens.at(w.word[k]), acc);
    return acc;
}

std::vector<Morphism> enumerate(const Category& c, int m, int n) { return c.hom(m, n); }

Morphism compose(const Category& c, const Morphism& outer, const Morphism& inner) { return c.compose(outer, inner); }

}  // namespace coind::categories
