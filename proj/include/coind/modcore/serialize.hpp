#pragma once

#include "coind/json.hpp"
#include "coind/modcore/module.hpp"

namespace coind::modcore {

// rationals become "num/den" strings, F_p values plain integers
Json scalar_json(const linalg::Scalar& x, const Field& f);
Json matrix_json(const Matrix& m);
Json morphism_json(const Morphism& a, const Category& c);
Json module_json(const TruncatedModule& v);
Json hom_json(const ModuleHom& h);
Json dims_json(const std::vector<std::size_t>& dims);

}  // namespace coind::modcore
