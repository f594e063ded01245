#include <algorithm>

#include "coind/error.hpp"
#include "coind/shiftcoind/shiftcoind.hpp"

namespace coind::shiftcoind {

using namespace categories;

TruncatedModule shift(const TruncatedModule& v) {
    int n = v.truncation();
    if (n < 1) throw TruncationError("cannot shift a module truncated at 0");
    const auto& c = v.category();
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int i = 0; i < n; ++i) {
        dims.push_back(v.dim(i + 1));
        std::vector<Matrix> gs;
        for (const auto& g : c.generators(i)) gs.push_back(v.action(c.iota(g)));
        group.push_back(std::move(gs));
        if (i + 1 < n) standard.push_back(v.standard_action(i + 1));
    }
    return TruncatedModule(c, v.field(), n - 1, dims, group, standard);
}

ModuleHom shift(const ModuleHom& h) {
    std::vector<Matrix> blocks(h.blocks().begin() + 1, h.blocks().end());
    return ModuleHom(shift(h.source()), shift(h.target()), blocks);
}

std::string to_string(const PsiSlot& s, const Category& c) {
    if (!c.is_vi()) {
        if (s.base) return "0";
        return "(" + std::to_string(s.r) + "," + c.group().element_name(s.g) + ")";
    }
    std::string v = "[";
    for (std::size_t i = 0; i < s.v.size(); ++i) v += (i ? "," : "") + std::to_string(s.v[i]);
    v += "]";
    if (s.base) return "(" + v + ",0)";
    std::string l = "<";
    for (std::size_t i = 0; i < s.line->rep.size(); ++i) l += (i ? "," : "") + std::to_string(s.line->rep[i]);
    return "(" + v + "," + l + ">)";
}

std::vector<PsiSlot> psi_slots(const Category& c, int n) {
    std::vector<PsiSlot> out;
    if (!c.is_vi()) {
        out.push_back(PsiSlot{});
        for (int r = 1; r <= n; ++r)
            for (int g = 0; g < c.group().order(); ++g) out.push_back(PsiSlot{false, r, g, {}, std::nullopt});
        return out;
    }
    int p = c.prime();
    auto vs = fp_vectors(p, n);
    for (const auto& v : vs) out.push_back(PsiSlot{true, 0, 0, v, std::nullopt});
    auto ls = lines(p, n);
    for (const auto& v : vs)
        for (const auto& l : ls)
            if (pair_line(v, l) != 0) out.push_back(PsiSlot{false, 0, 0, v, l});
    return out;
}

Morphism phi_morphism(const Category& c, int n, const PsiSlot& s) {
    if (!c.is_vi()) {
        if (s.base) return special_fig_base(c.group(), n);
        return special_fig_swap(c.group(), n, s.r, s.g);
    }
    return special_vi(c.prime(), s.v, s.line);
}

namespace {

std::vector<int> slot_key(const PsiSlot& s) {
    std::vector<int> k{s.base ? 1 : 0, s.r, s.g};
    k.insert(k.end(), s.v.begin(), s.v.end());
    k.push_back(-1);
    if (s.line) k.insert(k.end(), s.line->rep.begin(), s.line->rep.end());
    return k;
}

}  // namespace

PsiLayout::PsiLayout(const Category& c, int m, int n) : m_(m), n_(n), slots_(psi_slots(c, n)) {
    offset_.push_back(0);
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        int d = beta_degree(k);
        dim_ += d >= m ? c.hom(m, d).size() : 0;
        offset_.push_back(dim_);
        index_.emplace(slot_key(slots_[k]), k);
    }
}

std::size_t PsiLayout::slot_index(const PsiSlot& s) const {
    auto it = index_.find(slot_key(s));
    if (it == index_.end()) throw DomainError("no such slot");
    return it->second;
}

std::pair<std::size_t, std::size_t> PsiLayout::label(std::size_t pos) const {
    if (pos >= dim_) throw DomainError("label position out of range");
    auto it = std::upper_bound(offset_.begin(), offset_.end(), pos);
    std::size_t k = static_cast<std::size_t>(it - offset_.begin()) - 1;
    return {k, pos - offset_[k]};
}

std::string PsiLayout::label_name(std::size_t pos, const Category& c) const {
    auto [k, b] = label(pos);
    const auto& beta = c.hom(m_, beta_degree(k))[b];
    return "Psi_{" + std::to_string(n_) + "," + to_string(slots_[k], c) + "}(" + to_string(beta, c.group()) + ")";
}

PhiIso phi_iso(const Category& c, int n, int trunc, const Field& f) {
    if (n < 0 || trunc < n + 1) throw TruncationError("phi needs trunc >= n + 1");
    auto slots = psi_slots(c, n);
    std::vector<TruncatedModule> parts;
    for (const auto& s : slots) parts.push_back(modcore::free_module(c, s.base ? n : n - 1, trunc - 1, f));
    auto ds = modcore::direct_sum(parts);
    auto target = shift(modcore::free_module(c, n, trunc, f));
    std::vector<Matrix> blocks;
    for (int i = 0; i < trunc; ++i) {
        Matrix b(f, target.dim(i), ds.module.dim(i));
        std::size_t off = 0;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            auto phi = phi_morphism(c, n, slots[k]);
            const auto& gs = c.hom(slots[k].base ? n : n - 1, i);
            for (std::size_t j = 0; j < gs.size(); ++j) b.set(c.index_of(c.compose(c.iota(gs[j]), phi)), off + j, 1);
            off += gs.size();
        }
        blocks.push_back(std::move(b));
    }
    ModuleHom h(ds.module, target, blocks);
    if (!h.is_intertwiner()) throw ConsistencyFailure("Phi_n is not a module map");
    if (!h.is_bijective()) throw ConsistencyFailure("Phi_n is not bijective");
    return PhiIso{h, slots};
}

namespace {

FpVector row_times(const FpVector& u, const FpMatrix& a) { return fp_mul(fp_row(u, a.p), a).row(0); }

void add_entry(Matrix& m, std::size_t i, std::size_t j) { m.add_to(i, j, 1); }

}  // namespace

Matrix psi_action(const Category& c, int m, const Morphism& a, const Field& f) {
    int n = source(a), l = target(a);
    PsiLayout ln(c, m, n), ll(c, m, l);
    Matrix out(f, ll.dim(), ln.dim());
    for (std::size_t k = 0; k < ln.slots().size(); ++k) {
        const auto& s = ln.slots()[k];
        int bd = ln.beta_degree(k);
        if (bd < m) continue;
        const auto& betas = c.hom(m, bd);
        if (!c.is_vi()) {
            const auto& x = std::get<FIGMorphism>(a);
            const auto& g = c.group();
            for (std::size_t b = 0; b < betas.size(); ++b) {
                std::size_t col = ln.offset(k) + b;
                if (s.base) {
                    add_entry(out, ll.offset(0) + c.index_of(c.compose(a, betas[b])), col);
                    for (int r = 1; r <= l; ++r) {
                        if (in_image(x, r)) continue;
                        Morphism d = del_r(x, r);
                        std::size_t idx = c.index_of(c.compose(d, betas[b]));
                        for (int h = 0; h < g.order(); ++h)
                            add_entry(out, ll.offset(ll.slot_index(PsiSlot{false, r, h, {}, std::nullopt})) + idx, col);
                    }
                } else {
                    int fs = x.f[static_cast<std::size_t>(s.r - 1)];
                    int h = g.multiply(s.g, g.inverse(x.c[static_cast<std::size_t>(s.r - 1)]));
                    Morphism as = alpha_s(x, s.r);
                    add_entry(out, ll.offset(ll.slot_index(PsiSlot{false, fs, h, {}, std::nullopt})) + c.index_of(c.compose(as, betas[b])), col);
                }
            }
            continue;
        }
        const auto& x = std::get<VIMorphism>(a);
        int p = c.prime();
        std::vector<FpVector> us;
        for (const auto& u : fp_vectors(p, l))
            if (row_times(u, x.mat) == s.v) us.push_back(u);
        if (s.base) {
            auto ls = lines(p, l);
            std::vector<Line> outside;
            for (const auto& ell : ls)
                if (!line_contained(ell, x.mat)) outside.push_back(ell);
            for (std::size_t b = 0; b < betas.size(); ++b) {
                std::size_t col = ln.offset(k) + b;
                Morphism ab = c.compose(a, betas[b]);
                std::size_t idx = c.index_of(ab);
                const auto& abm = std::get<VIMorphism>(ab).mat;
                for (const auto& u : us) {
                    add_entry(out, ll.offset(ll.slot_index(PsiSlot{true, 0, 0, u, std::nullopt})) + idx, col);
                    for (const auto& ell : outside) {
                        if (pair_line(u, ell) == 0) continue;
                        Morphism w = make_vi(fp_mul(complement_map(ell), abm));
                        add_entry(out, ll.offset(ll.slot_index(PsiSlot{false, 0, 0, u, ell})) + c.index_of(w), col);
                    }
                }
            }
        } else {
            Line al = image_line(x, *s.line);
            Morphism awp = alpha_wp(x, *s.line);
            for (std::size_t b = 0; b < betas.size(); ++b) {
                std::size_t col = ln.offset(k) + b;
                std::size_t idx = c.index_of(c.compose(awp, betas[b]));
                for (const auto& u : us) {
                    if (pair_line(u, al) == 0) throw ConsistencyFailure("label violates u^t(l) != 0");
                    add_entry(out, ll.offset(ll.slot_index(PsiSlot{false, 0, 0, u, al})) + idx, col);
                }
            }
        }
    }
    return out;
}

TruncatedModule coind_free(const Category& c, int m, int trunc, const Field& f) {
    if (trunc < 1) throw TruncationError("coinduction needs trunc >= 1");
    if (c.is_vi() && !f.is_rational() && f.characteristic() == c.prime())
        throw DomainError("q is not invertible in the coefficient field");
    int top = trunc - 1;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
    for (int n = 0; n <= top; ++n) {
        dims.push_back(PsiLayout(c, m, n).dim());
        std::vector<Matrix> gs;
        for (const auto& g : c.generators(n)) gs.push_back(psi_action(c, m, g, f));
        group.push_back(std::move(gs));
        if (n < top) standard.push_back(psi_action(c, m, c.standard(n), f));
    }
    return TruncatedModule(c, f, top, dims, group, standard);
}

}  // namespace coind::shiftcoind
