#include <deque>

#include "coind/error.hpp"
#include "coind/homological/homological.hpp"

namespace coind::homological {

using linalg::Echelon;
using linalg::SparseRow;

namespace {

// insert x into the G_i-stable span e, keeping it G_i-stable
void add_orbit(const TruncatedModule& v, int i, Echelon& e, SparseRow x) {
    std::deque<SparseRow> queue;
    if (e.insert(x)) queue.push_back(std::move(x));
    std::size_t d = v.dim(i);
    while (!queue.empty() && e.rank() < d) {
        Vector y = linalg::dense_from_sparse(queue.front(), d);
        queue.pop_front();
        for (const auto& g : v.group_actions(i)) {
            SparseRow z = linalg::sparse_from_dense(g * y);
            if (e.insert(z)) queue.push_back(std::move(z));
        }
    }
}

}  // namespace

std::vector<Generator> minimal_generators(const TruncatedModule& v) {
    const auto& f = v.field();
    std::vector<Generator> gens;
    std::vector<SparseRow> prev;  // span of the image in the previous degree
    for (int i = 0; i <= v.truncation(); ++i) {
        std::size_t d = v.dim(i);
        Echelon e(f, d);
        if (i > 0)
            for (const auto& r : prev) add_orbit(v, i, e, linalg::sparse_from_dense(v.standard_action(i - 1) * linalg::dense_from_sparse(r, v.dim(i - 1))));
        for (std::size_t k = 0; k < d && e.rank() < d; ++k) {
            SparseRow unit{{k, linalg::Scalar(1)}};
            if (e.contains(unit)) continue;
            Vector x(d, 0);
            x[k] = 1;
            gens.push_back({i, x});
            add_orbit(v, i, e, unit);
        }
        e.finalize();
        prev = e.rows();
    }
    return gens;
}

int generation_degree(const TruncatedModule& v) {
    int d = -1;
    for (const auto& g : minimal_generators(v)) d = std::max(d, g.degree);
    return d;
}

Presentation presentation(const TruncatedModule& v) {
    const auto& c = v.category();
    const auto& f = v.field();
    int n = v.truncation();
    auto gens = minimal_generators(v);
    if (gens.empty()) {
        auto z = TruncatedModule::zero(c, f, n);
        ModuleHom eps = ModuleHom::zero(z, v);
        return Presentation{gens, z, {}, {}, eps, modcore::kernel(eps)};
    }
    std::vector<TruncatedModule> frees;
    std::vector<int> degs;
    for (const auto& g : gens) {
        frees.push_back(modcore::free_module(c, g.degree, n, f));
        degs.push_back(g.degree);
    }
    auto ds = modcore::direct_sum(frees);
    std::vector<Matrix> blocks;
    for (int i = 0; i <= n; ++i) {
        std::vector<Matrix> parts;
        for (std::size_t j = 0; j < gens.size(); ++j)
            parts.push_back(modcore::hom_from_free(frees[j], gens[j].degree, v, gens[j].vec).block(i));
        blocks.push_back(Matrix::hstack(f, v.dim(i), parts));
    }
    ModuleHom eps(ds.module, v, blocks);
    for (int i = 0; i <= n; ++i)
        if (linalg::rank(eps.block(i)) != v.dim(i)) throw ConsistencyFailure("cover is not surjective");
    return Presentation{gens, ds.module, degs, ds.projections, eps, modcore::kernel(eps)};
}

std::pair<int, int> presentation_degrees(const TruncatedModule& v) {
    auto p = presentation(v);
    int g = -1;
    for (int d : p.p0_degrees) g = std::max(g, d);
    return {g, generation_degree(p.k.module)};
}

Ext1Result ext1(const Presentation& pv, const TruncatedModule& w) {
    const auto& c = w.category();
    const auto& f = w.field();
    modcore::require_compatible(pv.p0, w);
    Ext1Result r;
    HomSpace hk(pv.k.module, w);
    r.hom_k = hk.dim();
    // Hom(P0, W) = sum of W(d) over the free summands
    Echelon restricted(f, r.hom_k);
    for (std::size_t j = 0; j < pv.p0_degrees.size(); ++j) {
        int d = pv.p0_degrees[j];
        auto freed = modcore::free_module(c, d, w.truncation(), f);
        for (std::size_t k = 0; k < w.dim(d); ++k) {
            Vector x(w.dim(d), 0);
            x[k] = 1;
            auto h = modcore::compose(modcore::hom_from_free(freed, d, w, x), pv.p0_projections[j]);
            auto y = hk.coordinates(modcore::compose(h, pv.k.inclusion));
            if (!y) throw ConsistencyFailure("restriction left Hom(K, W)");
            restricted.insert(linalg::sparse_from_dense(*y));
            ++r.hom_p0;
        }
    }
    r.rank = restricted.rank();
    r.dim = r.hom_k - r.rank;
    restricted.finalize();
    std::vector<char> pivot(r.hom_k, 0);
    for (auto p : restricted.pivots()) pivot[p] = 1;
    for (std::size_t k = 0; k < r.hom_k; ++k)
        if (!pivot[k]) r.cocycles.push_back(hk.basis()[k]);
    return r;
}

Ext1Result ext1(const TruncatedModule& v, const TruncatedModule& w) {
    modcore::require_compatible(v, w);
    return ext1(presentation(v), w);
}

}  // namespace coind::homological
