#pragma once

#include <utility>
#include <vector>

#include "coind/modcore/module.hpp"

namespace coind::modcore {

TruncatedModule free_module(const Category& c, int m, int trunc, const Field& f);
TruncatedModule atom(const Category& c, int m, int trunc, const Field& f);
// concentrated in one degree with the given automorphism-generator matrices
TruncatedModule group_module(const Category& c, const Field& f, int trunc, int degree, std::size_t dim,
                             std::vector<Matrix> gens);

TruncatedModule direct_sum(const TruncatedModule& a, const TruncatedModule& b);
struct DirectSum {
    TruncatedModule module;
    std::vector<ModuleHom> injections;
    std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<TruncatedModule>& parts);

TruncatedModule restrict(const TruncatedModule& v, int n);
ModuleHom restrict(const ModuleHom& h, int n);
TruncatedModule extend_by_zero(const TruncatedModule& v, int trunc);
ModuleHom extend_by_zero(const ModuleHom& h, int trunc);

struct SubModule {
    TruncatedModule module;
    ModuleHom inclusion;
};
struct QuotientModule {
    TruncatedModule module;
    ModuleHom projection;
};

// bases[i] holds column vectors spanning a subspace of V(i); throws if not closed
SubModule submodule(const TruncatedModule& v, const std::vector<Matrix>& bases);
QuotientModule quotient(const TruncatedModule& v, const std::vector<Matrix>& spans);
SubModule kernel(const ModuleHom& h);
SubModule image(const ModuleHom& h);
QuotientModule cokernel(const ModuleHom& h);

// smallest submodule containing the given (degree, vector) pairs
SubModule generated_submodule(const TruncatedModule& v, const std::vector<std::pair<int, Vector>>& gens);
// span of the orbit of the given vectors under the automorphism group of degree i
linalg::Echelon close_under_group(const TruncatedModule& v, int i, linalg::Echelon start);

// the hom free(m) -> V sending the identity of degree m to x
ModuleHom hom_from_free(const TruncatedModule& free_m, int m, const TruncatedModule& v, const Vector& x);

}  // namespace coind::modcore
