#include "coind/error.hpp"
#include "coind/homological/homological.hpp"
#include "coind/modcore/serialize.hpp"

namespace coind::homological {

TorsionPair torsion_pair(const TruncatedModule& v) {
    int n = v.truncation();
    const auto& f = v.field();
    std::vector<Matrix> bases;
    for (int i = 0; i <= n; ++i) {
        // every i -> n morphism is an automorphism after the standard chain
        Matrix chain = Matrix::identity(f, v.dim(i));
        for (int j = i; j < n; ++j) chain = v.standard_action(j) * chain;
        bases.push_back(i == n ? Matrix(f, v.dim(n), 0) : linalg::nullspace(chain));
    }
    auto t = modcore::submodule(v, bases);
    auto q = modcore::quotient(v, bases);
    Report rep;
    rep.add("T is a submodule", t.inclusion.is_intertwiner());
    rep.add("V -> F intertwines", q.projection.is_intertwiner());
    rep.data = {{"dims_T", modcore::dims_json(t.module.dims())},
                {"dims_F", modcore::dims_json(q.module.dims())},
                {"caveat", "truncation-approximate: elements killed only above degree " + std::to_string(n) + " are not detected"}};
    return TorsionPair{t, q, rep};
}

std::size_t kappa(const TruncatedModule& v, int n) {
    return HomSpace(v, modcore::free_module(v.category(), n, v.truncation(), v.field())).dim();
}

ProjectiveWitness hom_to_projective_witness(const TruncatedModule& fm) {
    ProjectiveWitness out;
    const auto& c = fm.category();
    const auto& f = fm.field();
    int top = fm.truncation();
    if (fm.is_zero()) {
        out.report.add("F is nonzero", false, "precondition violated");
        return out;
    }
    std::vector<TruncatedModule> frees;
    for (int n = 0; n <= top; ++n) frees.push_back(modcore::free_module(c, n, top, f));
    std::vector<HomSpace> spaces;
    for (int n = 0; n <= top; ++n) spaces.emplace_back(fm, frees[static_cast<std::size_t>(n)]);
    for (int n = top; n >= 0 && !out.first; --n)
        if (spaces[static_cast<std::size_t>(n)].dim() > 0) {
            out.first = spaces[static_cast<std::size_t>(n)].basis().front();
            out.first_degree = n;
        }
    out.report.add("nonzero hom into a free module", out.first.has_value(),
                   out.first ? "kCe_" + std::to_string(out.first_degree) : "none within the truncation");
    if (!out.first) return out;

    // greedy descent: each new hom is nonzero on the current kernel
    std::vector<ModuleHom> chosen;
    auto kernel_of = [&]() {
        if (chosen.empty()) return modcore::kernel(ModuleHom::zero(fm, fm));
        std::vector<Matrix> blocks;
        for (int i = 0; i <= top; ++i) {
            std::vector<Matrix> parts;
            for (const auto& h : chosen) parts.push_back(h.block(i));
            blocks.push_back(Matrix::vstack(f, fm.dim(i), parts));
        }
        std::vector<TruncatedModule> tgts;
        for (int d : out.degrees) tgts.push_back(frees[static_cast<std::size_t>(d)]);
        return modcore::kernel(ModuleHom(fm, modcore::direct_sum(tgts).module, blocks));
    };
    auto k = kernel_of();
    std::size_t steps = 0;
    while (!k.module.is_zero() && steps <= fm.total_dim()) {
        ++steps;
        bool found = false;
        for (int n = top; n >= 0 && !found; --n)
            for (const auto& h : spaces[static_cast<std::size_t>(n)].basis())
                if (!modcore::compose(h, k.inclusion).is_zero()) {
                    chosen.push_back(h);
                    out.degrees.push_back(n);
                    found = true;
                    break;
                }
        if (!found) break;
        k = kernel_of();
    }
    bool embedded = k.module.is_zero();
    if (embedded) {
        std::vector<TruncatedModule> tgts;
        for (int d : out.degrees) tgts.push_back(frees[static_cast<std::size_t>(d)]);
        std::vector<Matrix> blocks;
        for (int i = 0; i <= top; ++i) {
            std::vector<Matrix> parts;
            for (const auto& h : chosen) parts.push_back(h.block(i));
            blocks.push_back(Matrix::vstack(f, fm.dim(i), parts));
        }
        out.embedding = ModuleHom(fm, modcore::direct_sum(tgts).module, blocks);
        embedded = out.embedding->is_injective() && out.embedding->is_intertwiner();
    }
    out.report.add("injective hom into a sum of free modules", embedded, std::to_string(out.degrees.size()) + " summands");
    Json degs = Json::array();
    for (int d : out.degrees) degs.push_back(d);
    out.report.data = {{"first_degree", out.first_degree}, {"embedding_degrees", degs}};
    return out;
}

}  // namespace coind::homological
