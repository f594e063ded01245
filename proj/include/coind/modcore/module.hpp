#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coind/categories/category.hpp"
#include "coind/linalg/matrix.hpp"

namespace coind::modcore {

using categories::Category;
using categories::Morphism;
using linalg::Field;
using linalg::Matrix;
using linalg::Vector;

// A kC_N-module: per-degree spaces plus the action of the automorphism group
// generators of each degree and of the standard inclusion i -> i+1. Every other
// morphism acts through its generator word.
class TruncatedModule {
public:
    TruncatedModule(Category c, Field f, int trunc, std::vector<std::size_t> dims,
                    std::vector<std::vector<Matrix>> group_actions, std::vector<Matrix> standard_actions);
    static TruncatedModule zero(Category c, Field f, int trunc);

    const Category& category() const;
    const Field& field() const;
    int truncation() const;
    std::size_t dim(int i) const;
    const std::vector<std::size_t>& dims() const;
    std::size_t total_dim() const;
    bool is_zero() const;

    const Matrix& group_action(int i, std::size_t k) const;
    const std::vector<Matrix>& group_actions(int i) const;
    const Matrix& standard_action(int i) const;

    Matrix action(const Morphism& a) const;
    Vector apply(const Morphism& a, const Vector& v) const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

class ModuleHom {
public:
    ModuleHom(TruncatedModule src, TruncatedModule tgt, std::vector<Matrix> blocks);
    static ModuleHom zero(const TruncatedModule& src, const TruncatedModule& tgt);
    static ModuleHom identity(const TruncatedModule& v);

    const TruncatedModule& source() const { return src_; }
    const TruncatedModule& target() const { return tgt_; }
    const Matrix& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
    const std::vector<Matrix>& blocks() const { return blocks_; }

    // empty when the hom commutes with every stored generator
    std::vector<std::string> intertwining_failures() const;
    bool is_intertwiner() const { return intertwining_failures().empty(); }
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
    bool is_zero() const;

    ModuleHom operator+(const ModuleHom& o) const;
    ModuleHom scaled(const linalg::Scalar& s) const;
    bool operator==(const ModuleHom& o) const { return blocks_ == o.blocks_; }

private:
    TruncatedModule src_;
    TruncatedModule tgt_;
    std::vector<Matrix> blocks_;
};

ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner);

struct AuditResult {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

// V(gamma) V(beta) = V(gamma beta) for all beta: i -> i+1, gamma: i+1 -> i+2
// with i <= max_degree, and multiplicativity on each automorphism group
AuditResult audit_functoriality(const TruncatedModule& v, int max_degree = 3);

void require_compatible(const TruncatedModule& a, const TruncatedModule& b);

}  // namespace coind::modcore
