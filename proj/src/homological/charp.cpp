#include <set>

#include "coind/error.hpp"
#include "coind/homological/homological.hpp"
#include "coind/modcore/serialize.hpp"

namespace coind::homological {

CharPResult charp_counterexample(int p, int trunc, const Field& f, bool with_ext) {
    if (!linalg::is_prime(p)) throw DomainError("p must be prime");
    if (trunc < p + 1) throw TruncationError("need trunc >= p + 1");
    auto c = Category::fi();
    auto f0 = modcore::free_module(c, 0, trunc, f);
    auto fp = modcore::free_module(c, p, trunc, f);
    auto ds = modcore::direct_sum(std::vector<TruncatedModule>{f0, fp});
    const auto& sp = c.hom(p, p);

    CharPResult out;
    std::vector<Matrix> ubases, wbases;
    for (int n = 0; n <= trunc; ++n) {
        const auto& hs = c.hom(p, n);
        std::vector<Vector> xis, ws;
        std::set<std::size_t> seen;
        for (std::size_t b = 0; b < hs.size(); ++b) {
            if (seen.count(b)) continue;
            Vector xi(hs.size(), 0);
            for (const auto& s : sp) {
                auto k = c.index_of(c.compose(hs[b], s));
                seen.insert(k);
                xi[k] = 1;
            }
            // f(xi_J) + xi_J inside kC(0,n) + kC(p,n)
            Vector w(1 + hs.size(), 0);
            w[0] = 1;
            for (std::size_t k = 0; k < hs.size(); ++k) w[1 + k] = xi[k];
            xis.push_back(std::move(xi));
            ws.push_back(std::move(w));
        }
        out.u_dims.push_back(xis.size());
        ubases.push_back(Matrix::from_columns(f, hs.size(), xis));
        wbases.push_back(Matrix::from_columns(f, ds.module.dim(n), ws));
    }
    auto u = modcore::submodule(fp, ubases);
    auto w = modcore::submodule(ds.module, wbases);
    auto v = modcore::quotient(ds.module, wbases);
    auto i = modcore::compose(v.projection, ds.injections[0]);

    Report& rep = out.report;
    rep.add("U is a submodule of kCe_p", u.inclusion.is_intertwiner());
    rep.add("W is a submodule", w.inclusion.is_intertwiner());
    rep.add("i is injective", i.is_injective());

    HomSpace hp(fp, f0);
    bool vanish = true;
    for (const auto& h : hp.basis())
        if (!modcore::compose(h, u.inclusion).is_zero()) vanish = false;
    rep.add("every hom kCe_p -> kCe_0 vanishes on U", vanish, "dim Hom = " + std::to_string(hp.dim()));

    HomSpace hv(v.module, f0), hid(f0, f0);
    std::vector<Vector> cols;
    for (const auto& phi : hv.basis()) {
        auto y = hid.coordinates(modcore::compose(phi, i));
        if (!y) throw ConsistencyFailure("composite is not an endomorphism of kCe_0");
        cols.push_back(*y);
    }
    auto target = hid.coordinates(ModuleHom::identity(f0));
    Matrix a = Matrix::from_columns(f, hid.dim(), cols);
    auto sol = linalg::solve(a, *target);
    out.splits = sol.has_value();
    if (sol) out.splittings_dim = hv.dim() - linalg::rank(a);
    rep.data = {{"p", p}, {"trunc", trunc}, {"field", f.name()}, {"dims_U", modcore::dims_json(out.u_dims)},
                {"dim_Hom_V_kCe0", hv.dim()}, {"splits", out.splits}};
    if (out.splits) rep.data["splitting_space_dim"] = out.splittings_dim;
    if (with_ext) {
        auto quo = modcore::cokernel(i);
        out.ext1_dim = ext1(quo.module, f0).dim;
        rep.data["ext1_quotient_kCe0"] = *out.ext1_dim;
    }
    return out;
}

}  // namespace coind::homological
