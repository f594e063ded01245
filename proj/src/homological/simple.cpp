#include <algorithm>
#include <deque>
#include <map>

#include "coind/error.hpp"
#include "coind/homological/homological.hpp"

namespace coind::homological {

using categories::FIGMorphism;
using categories::Morphism;
using linalg::Echelon;
using linalg::Scalar;
using linalg::SparseRow;

std::string to_string(const SimpleLabel& s) {
    std::string out;
    for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "|" : "") + coind::to_string(s.parts[i]);
    return out + "@" + std::to_string(s.degree);
}

namespace {

bool is_z2(const Category& c) { return c.group().order() == 2; }

void require_supported(const Category& c) {
    if (c.is_vi() || (c.group().order() != 1 && !is_z2(c)))
        throw DomainError("simple modules are built for FI and FI_G with G = Z/2 only");
}

using Element = std::map<std::size_t, Scalar>;  // group algebra, keyed by index in C(i, i)

Element multiply(const Category& c, const Field& f, int i, const Element& x, const Element& y) {
    const auto& g = c.hom(i, i);
    Element out;
    for (const auto& [a, s] : x)
        for (const auto& [b, t] : y) {
            auto k = c.index_of(c.compose(g[a], g[b]));
            out[k] = f.add(out[k], f.mul(s, t));
        }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

// sum over the subgroup permuting each block of positions, optionally signed
Element young_sum(const Category& c, const Field& f, int i, const std::vector<std::vector<int>>& blocks, bool signed_sum) {
    std::vector<std::pair<std::vector<int>, int>> perms{{std::vector<int>(static_cast<std::size_t>(i)), 1}};
    for (int t = 0; t < i; ++t) perms[0].first[static_cast<std::size_t>(t)] = t + 1;
    for (const auto& blk : blocks) {
        std::vector<std::pair<std::vector<int>, int>> next;
        std::vector<int> img = blk;
        std::sort(img.begin(), img.end());
        do {
            // parity of img as a permutation of blk
            int inv = 0;
            for (std::size_t a = 0; a < img.size(); ++a)
                for (std::size_t b = a + 1; b < img.size(); ++b)
                    if (img[a] > img[b]) ++inv;
            for (const auto& [f0, s0] : perms) {
                auto f1 = f0;
                for (std::size_t a = 0; a < blk.size(); ++a) f1[static_cast<std::size_t>(blk[a] - 1)] = img[a];
                next.push_back({f1, inv % 2 ? -s0 : s0});
            }
        } while (std::next_permutation(img.begin(), img.end()));
        perms = std::move(next);
    }
    Element out;
    for (const auto& [fv, s] : perms) {
        FIGMorphism m{i, i, fv, std::vector<int>(static_cast<std::size_t>(i), 0)};
        auto k = c.index_of(m);
        out[k] = f.add(out[k], signed_sum ? f.from_int(s) : f.from_int(1));
    }
    return out;
}

// row and column blocks of the tableau of shape p filled row by row from first+1
void tableau_blocks(const Partition& p, int first, std::vector<std::vector<int>>& rows, std::vector<std::vector<int>>& cols) {
    int next = first + 1;
    std::vector<std::vector<int>> filled;
    for (int len : p) {
        std::vector<int> r;
        for (int j = 0; j < len; ++j) r.push_back(next++);
        filled.push_back(r);
        rows.push_back(r);
    }
    if (p.empty()) return;
    for (int j = 0; j < p.front(); ++j) {
        std::vector<int> col;
        for (const auto& r : filled)
            if (static_cast<int>(r.size()) > j) col.push_back(r[static_cast<std::size_t>(j)]);
        cols.push_back(col);
    }
}

}  // namespace

std::vector<SimpleLabel> simple_labels(const Category& c, int degree) {
    require_supported(c);
    std::vector<SimpleLabel> out;
    if (!is_z2(c)) {
        for (auto& p : partitions(degree)) out.push_back({degree, {p}});
        return out;
    }
    for (int a = degree; a >= 0; --a)
        for (auto& l : partitions(a))
            for (auto& m : partitions(degree - a)) out.push_back({degree, {l, m}});
    return out;
}

TruncatedModule simple_module(const Category& c, const SimpleLabel& label, int trunc, const Field& f) {
    require_supported(c);
    int i = label.degree;
    if (i < 0 || i > trunc) throw TruncationError("simple module outside the truncation");
    std::size_t want = is_z2(c) ? 2 : 1;
    if (label.parts.size() != want) throw DomainError("label has the wrong number of partitions");
    int total = 0;
    for (const auto& p : label.parts) {
        if (!is_partition(p)) throw DomainError("label part is not a partition");
        total += size(p);
    }
    if (total != i) throw DomainError("label sizes do not add up to the degree");

    const auto& g = c.hom(i, i);
    Element e{{c.index_of(c.identity(i)), Scalar(1)}};
    int first = 0;
    for (std::size_t part = 0; part < label.parts.size(); ++part) {
        const auto& p = label.parts[part];
        std::vector<std::vector<int>> rows, cols;
        tableau_blocks(p, first, rows, cols);
        e = multiply(c, f, i, e, young_sum(c, f, i, rows, false));
        e = multiply(c, f, i, e, young_sum(c, f, i, cols, true));
        if (is_z2(c)) {
            // (1 + kappa_t) on the trivial block, (1 - kappa_t) on the sign block
            int gen = c.group().generators().front();
            for (int t = first + 1; t <= first + size(p); ++t) {
                FIGMorphism k{i, i, std::vector<int>(static_cast<std::size_t>(i)), std::vector<int>(static_cast<std::size_t>(i), 0)};
                for (int s = 0; s < i; ++s) k.f[static_cast<std::size_t>(s)] = s + 1;
                k.c[static_cast<std::size_t>(t - 1)] = gen;
                Element proj{{c.index_of(c.identity(i)), Scalar(1)}, {c.index_of(k), part == 0 ? Scalar(1) : f.neg(Scalar(1))}};
                e = multiply(c, f, i, proj, e);
            }
        }
        first += size(p);
    }
    if (e.empty()) throw ConsistencyFailure("Young symmetrizer vanished");

    // left ideal kG e, closed under the generators
    const auto& gens = c.generators(i);
    std::vector<std::vector<std::size_t>> table;
    for (const auto& h : gens) {
        std::vector<std::size_t> t;
        for (const auto& x : g) t.push_back(c.index_of(c.compose(h, x)));
        table.push_back(std::move(t));
    }
    auto left = [&](std::size_t k, const SparseRow& x) {
        SparseRow y;
        for (const auto& en : x) y.push_back({table[k][en.col], en.val});
        std::sort(y.begin(), y.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        return y;
    };
    Echelon span(f, g.size());
    SparseRow e0;
    for (const auto& [k, s] : e) e0.push_back({k, s});
    std::deque<SparseRow> queue;
    span.insert(e0);
    queue.push_back(e0);
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            auto y = left(k, x);
            if (span.insert(y)) queue.push_back(y);
        }
    }
    span.finalize();
    const auto& basis = span.rows();
    std::size_t d = basis.size();
    std::vector<std::size_t> piv;
    for (const auto& r : basis) piv.push_back(r[0].col);
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix m(f, d, d);
        for (std::size_t j = 0; j < d; ++j) {
            auto y = linalg::dense_from_sparse(left(k, basis[j]), g.size());
            for (std::size_t r = 0; r < d; ++r)
                if (y[piv[r]] != 0) m.set(r, j, y[piv[r]]);
        }
        mats.push_back(std::move(m));
    }
    return modcore::group_module(c, f, trunc, i, d, mats);
}

InjectiveReport injective_test(const TruncatedModule& v, int n) {
    const auto& c = v.category();
    require_supported(c);
    for (int i = n + 1; i <= v.truncation(); ++i)
        if (v.dim(i) != 0) throw DomainError("module is not supported in degrees <= n");
    auto w = v.truncation() > n ? modcore::restrict(v, n) : v;
    if (w.truncation() < n) w = modcore::extend_by_zero(w, n);
    InjectiveReport out;
    for (int i = 0; i <= n; ++i)
        for (const auto& lab : simple_labels(c, i)) {
            auto s = simple_module(c, lab, n, v.field());
            auto e = ext1(s, w);
            out.report.add("Ext1(" + to_string(lab) + ", V) = 0", e.dim == 0, "dim " + std::to_string(e.dim));
            if (e.dim != 0) {
                out.injective = false;
                out.failures.push_back({lab, e.dim});
            }
        }
    out.report.data = {{"n", n}, {"simples", out.report.checks.size()}, {"injective", out.injective}};
    return out;
}

}  // namespace coind::homological
