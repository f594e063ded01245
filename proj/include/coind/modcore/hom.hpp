#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coind/modcore/module.hpp"

namespace coind::modcore {

// Basis of Hom(V, W). Degreewise equivariant maps are solved first, then the
// standard inclusions glue degrees together. Bases come out of reduced echelon
// forms, so they are deterministic.
class HomSpace {
public:
    HomSpace(const TruncatedModule& v, const TruncatedModule& w);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<ModuleHom>& basis() const { return basis_; }
    const TruncatedModule& source() const { return v_; }
    const TruncatedModule& target() const { return w_; }

    std::optional<Vector> coordinates(const ModuleHom& h) const;
    ModuleHom combination(const Vector& coeffs) const;

private:
    ModuleHom combination_of_stage1(const linalg::SparseRow& c) const;

    TruncatedModule v_, w_;
    std::vector<std::vector<std::size_t>> stage1_free_;  // per degree
    std::vector<std::vector<Matrix>> stage1_basis_;      // per degree
    std::vector<std::size_t> stage1_offset_;
    std::vector<std::size_t> stage2_free_;
    std::vector<ModuleHom> basis_;
};

std::vector<ModuleHom> hom_space(const TruncatedModule& v, const TruncatedModule& w);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };
std::string to_string(IsoVerdict v);

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Undecided;
    std::optional<ModuleHom> witness;
    std::uint64_t seed = 0;
    std::string detail;
};

IsoResult is_isomorphic(const TruncatedModule& v, const TruncatedModule& w, std::uint64_t seed = 20240607);

}  // namespace coind::modcore
