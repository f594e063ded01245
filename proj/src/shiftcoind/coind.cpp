#include <map>

#include "coind/error.hpp"
#include "coind/shiftcoind/shiftcoind.hpp"

namespace coind::shiftcoind {

using namespace categories;

namespace {

// right multiplication by a: S(kCe_l) -> S(kCe_n)
ModuleHom right_mult(const Category& c, const Morphism& a, const TruncatedModule& sl, const TruncatedModule& sn) {
    int n = source(a), l = target(a);
    std::vector<Matrix> blocks;
    for (int i = 0; i <= sl.truncation(); ++i) {
        Matrix b(sl.field(), sn.dim(i), sl.dim(i));
        const auto& xs = c.hom(l, i + 1);
        if (n <= i + 1)
            for (std::size_t j = 0; j < xs.size(); ++j) b.set(c.index_of(c.compose(xs[j], a)), j, 1);
        blocks.push_back(std::move(b));
    }
    return ModuleHom(sl, sn, blocks);
}

// x in C(n, i+1) -> (slot, gamma index) with x = iota(gamma) o phi_slot
using PhiTable = std::vector<std::pair<std::size_t, std::size_t>>;

PhiTable phi_table(const Category& c, int n, int i) {
    auto slots = psi_slots(c, n);
    const std::pair<std::size_t, std::size_t> unset{slots.size(), 0};
    PhiTable t(c.hom(n, i + 1).size(), unset);
    for (std::size_t k = 0; k < slots.size(); ++k) {
        int d = slots[k].base ? n : n - 1;
        if (d < 0) continue;
        auto phi = phi_morphism(c, n, slots[k]);
        const auto& gs = c.hom(d, i);
        for (std::size_t j = 0; j < gs.size(); ++j) {
            auto& e = t[c.index_of(c.compose(c.iota(gs[j]), phi))];
            if (e != unset) throw ConsistencyFailure("Phi hits a basis element twice");
            e = {k, j};
        }
    }
    for (const auto& e : t)
        if (e == unset) throw ConsistencyFailure("Phi misses a basis element");
    return t;
}

std::vector<ModuleHom> psi_homs(const Category& c, int m, int n, int trunc, const Field& f) {
    auto src = shift(modcore::free_module(c, n, trunc + 1, f));
    auto tgt = modcore::free_module(c, m, trunc, f);
    PsiLayout lay(c, m, n);
    std::vector<PhiTable> tables;
    for (int i = 0; i <= trunc; ++i) tables.push_back(phi_table(c, n, i));
    std::vector<ModuleHom> out;
    for (std::size_t pos = 0; pos < lay.dim(); ++pos) {
        auto [k, b] = lay.label(pos);
        const auto& beta = c.hom(m, lay.beta_degree(k))[b];
        std::vector<Matrix> blocks;
        for (int i = 0; i <= trunc; ++i) {
            Matrix blk(f, tgt.dim(i), src.dim(i));
            const auto& gs = c.hom(lay.beta_degree(k), i);
            for (std::size_t x = 0; x < tables[static_cast<std::size_t>(i)].size(); ++x) {
                auto [s, g] = tables[static_cast<std::size_t>(i)][x];
                if (s == k) blk.set(c.index_of(c.compose(gs[g], beta)), x, 1);
            }
            blocks.push_back(std::move(blk));
        }
        out.emplace_back(src, tgt, std::move(blocks));
    }
    return out;
}

}  // namespace

Coinduced coind_hom(const TruncatedModule& w) {
    const auto& c = w.category();
    const auto& f = w.field();
    int top = w.truncation();
    std::vector<TruncatedModule> shifted;
    std::vector<HomSpace> spaces;
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n) {
        shifted.push_back(shift(modcore::free_module(c, n, top + 1, f)));
        spaces.emplace_back(shifted.back(), w);
        dims.push_back(spaces.back().dim());
    }
    auto act = [&](const Morphism& a) {
        int n = source(a), l = target(a);
        auto r = right_mult(c, a, shifted[static_cast<std::size_t>(l)], shifted[static_cast<std::size_t>(n)]);
        const auto& hn = spaces[static_cast<std::size_t>(n)];
        const auto& hl = spaces[static_cast<std::size_t>(l)];
        Matrix out(f, hl.dim(), hn.dim());
        for (std::size_t j = 0; j < hn.dim(); ++j) {
            auto y = hl.coordinates(modcore::compose(hn.basis()[j], r));
            if (!y) throw ConsistencyFailure("precomposition left the hom space");
            for (std::size_t i = 0; i < y->size(); ++i)
                if ((*y)[i] != 0) out.set(i, j, (*y)[i]);
        }
        return out;
    };
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int n = 0; n <= top; ++n) {
        std::vector<Matrix> gs;
        for (const auto& g : c.generators(n)) gs.push_back(act(g));
        group.push_back(std::move(gs));
        if (n < top) standard.push_back(act(c.standard(n)));
    }
    return Coinduced{TruncatedModule(c, f, top, dims, group, standard), std::move(spaces)};
}

ModuleHom psi_hom(const Category& c, int m, int n, std::size_t pos, int trunc, const Field& f) {
    auto hs = psi_homs(c, m, n, trunc, f);
    if (pos >= hs.size()) throw DomainError("label position out of range");
    return hs[pos];
}

ModuleHom coind_witness(const TruncatedModule& qfree, const Coinduced& qhom, int m) {
    const auto& c = qfree.category();
    const auto& f = qfree.field();
    int top = qfree.truncation();
    if (qhom.module.truncation() != top) throw TruncationError("truncations differ");
    std::vector<Matrix> blocks;
    for (int n = 0; n <= top; ++n) {
        auto hs = psi_homs(c, m, n, top, f);
        const auto& space = qhom.spaces[static_cast<std::size_t>(n)];
        Matrix b(f, space.dim(), hs.size());
        for (std::size_t j = 0; j < hs.size(); ++j) {
            auto y = space.coordinates(hs[j]);
            if (!y) throw ConsistencyFailure("Psi label is not in the hom space");
            for (std::size_t i = 0; i < y->size(); ++i)
                if ((*y)[i] != 0) b.set(i, j, (*y)[i]);
        }
        blocks.push_back(std::move(b));
    }
    return ModuleHom(qfree, qhom.module, blocks);
}

Report psi_action_oracle(const Category& c, int m, int n_small) {
    if (n_small > 2 || m > 1 || m < 0) throw DomainError("oracle limited to m <= 1, n <= 2");
    Report rep;
    const Field q = Field::rationals();
    std::vector<std::vector<PhiTable>> tables;
    for (int n = 0; n <= n_small; ++n) {
        tables.emplace_back();
        for (int i = 0; i <= n_small; ++i) tables.back().push_back(phi_table(c, n, i));
    }
    // value of Psi_{n, pos}(x) for x in C(n, i+1), as basis-index counts of kC(m, i)
    auto eval = [&](const PsiLayout& lay, std::size_t pos, int i, std::size_t x, std::map<std::size_t, long>& acc, long w) {
        auto [k, b] = lay.label(pos);
        auto [s, g] = tables[static_cast<std::size_t>(lay.n())][static_cast<std::size_t>(i)][x];
        if (s != k) return;
        int d = lay.beta_degree(k);
        acc[c.index_of(c.compose(c.hom(d, i)[g], c.hom(m, d)[b]))] += w;
    };
    std::size_t total = 0, bad = 0;
    for (int n = 0; n <= n_small; ++n)
        for (int l = n; l <= n_small; ++l) {
            PsiLayout ln(c, m, n), ll(c, m, l);
            std::size_t pair_checks = 0, pair_bad = 0;
            for (const auto& a : c.hom(n, l)) {
                auto closed = psi_action(c, m, a, q);
                for (std::size_t pos = 0; pos < ln.dim(); ++pos) {
                    // coefficients: evaluate alpha.rho on the summand generators of S(kCe_l)
                    std::vector<long> coef(ll.dim(), 0);
                    for (std::size_t k2 = 0; k2 < ll.slots().size(); ++k2) {
                        auto y = c.compose(phi_morphism(c, l, ll.slots()[k2]), a);
                        int i = target(y) - 1;
                        std::map<std::size_t, long> val;
                        eval(ln, pos, i, c.index_of(y), val, 1);
                        for (auto [idx, w] : val) coef[ll.offset(k2) + idx] += w;
                    }
                    bool ok = true;
                    for (std::size_t r = 0; r < ll.dim(); ++r)
                        if (closed.at(r, pos) != coef[r]) ok = false;
                    // the recombination has to reproduce alpha.rho everywhere
                    for (int i = 0; i <= l && ok; ++i) {
                        const auto& xs = c.hom(l, i + 1);
                        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
                            std::map<std::size_t, long> lhs, rhs;
                            auto xa = c.compose(xs[xi], a);
                            eval(ln, pos, i, c.index_of(xa), lhs, 1);
                            for (std::size_t r = 0; r < ll.dim(); ++r)
                                if (coef[r] != 0) eval(ll, r, i, xi, rhs, coef[r]);
                            std::erase_if(rhs, [](const auto& e) { return e.second == 0; });
                            if (lhs != rhs) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    ++pair_checks;
                    if (!ok) ++pair_bad;
                }
            }
            total += pair_checks;
            bad += pair_bad;
            rep.add("oracle " + std::to_string(n) + "->" + std::to_string(l), pair_bad == 0,
                    std::to_string(pair_checks - pair_bad) + "/" + std::to_string(pair_checks) + " columns match");
        }
    rep.data = {{"category", c.name()}, {"m", m}, {"n_small", n_small}, {"columns", total}, {"mismatches", bad}};
    return rep;
}

}  // namespace coind::shiftcoind
