#include "coind/modcore/module.hpp"

#include "coind/error.hpp"

namespace coind::modcore {

using linalg::Scalar;

struct TruncatedModule::Data {
    Category cat;
    Field field;
    int trunc;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> group;
    std::vector<Matrix> standard;
};

TruncatedModule::TruncatedModule(Category c, Field f, int trunc, std::vector<std::size_t> dims,
                                 std::vector<std::vector<Matrix>> group_actions, std::vector<Matrix> standard_actions) {
    if (trunc < 0) throw TruncationError("negative truncation");
    if (dims.size() != static_cast<std::size_t>(trunc + 1)) throw DomainError("dims must have trunc+1 entries");
    if (group_actions.size() != dims.size()) throw DomainError("group actions must cover every degree");
    if (standard_actions.size() != static_cast<std::size_t>(trunc)) throw DomainError("need one standard action per step");
    for (int i = 0; i <= trunc; ++i) {
        auto ii = static_cast<std::size_t>(i);
        if (group_actions[ii].size() != c.generators(i).size()) throw DomainError("wrong number of generator matrices");
        for (const auto& g : group_actions[ii])
            if (g.rows() != dims[ii] || g.cols() != dims[ii] || !(g.field() == f))
                throw DomainError("generator matrix has the wrong shape or field");
        if (i < trunc) {
            const auto& s = standard_actions[ii];
            if (s.rows() != dims[ii + 1] || s.cols() != dims[ii] || !(s.field() == f))
                throw DomainError("standard action has the wrong shape or field");
        }
    }
    d_ = std::make_shared<const Data>(
        Data{std::move(c), f, trunc, std::move(dims), std::move(group_actions), std::move(standard_actions)});
}

TruncatedModule TruncatedModule::zero(Category c, Field f, int trunc) {
    std::vector<std::vector<Matrix>> g(static_cast<std::size_t>(trunc + 1));
    for (int i = 0; i <= trunc; ++i) g[static_cast<std::size_t>(i)].assign(c.generators(i).size(), Matrix(f, 0, 0));
    std::vector<Matrix> s(static_cast<std::size_t>(trunc), Matrix(f, 0, 0));
    return TruncatedModule(c, f, trunc, std::vector<std::size_t>(static_cast<std::size_t>(trunc + 1), 0), g, s);
}

const Category& TruncatedModule::category() const { return d_->cat; }
const Field& TruncatedModule::field() const { return d_->field; }
int TruncatedModule::truncation() const { return d_->trunc; }
const std::vector<std::size_t>& TruncatedModule::dims() const { return d_->dims; }

std::size_t TruncatedModule::dim(int i) const {
    if (i < 0 || i > d_->trunc) throw TruncationError("degree " + std::to_string(i) + " outside the truncation");
    return d_->dims[static_cast<std::size_t>(i)];
}

std::size_t TruncatedModule::total_dim() const {
    std::size_t t = 0;
    for (auto d : d_->dims) t += d;
    return t;
}

bool TruncatedModule::is_zero() const { return total_dim() == 0; }

const Matrix& TruncatedModule::group_action(int i, std::size_t k) const {
    dim(i);
    return d_->group[static_cast<std::size_t>(i)].at(k);
}

const std::vector<Matrix>& TruncatedModule::group_actions(int i) const {
    dim(i);
    return d_->group[static_cast<std::size_t>(i)];
}

const Matrix& TruncatedModule::standard_action(int i) const {
    if (i < 0 || i >= d_->trunc) throw TruncationError("no standard action out of degree " + std::to_string(i));
    return d_->standard[static_cast<std::size_t>(i)];
}

Matrix TruncatedModule::action(const Morphism& a) const {
    int i = categories::source(a), j = categories::target(a);
    dim(i);
    dim(j);
    auto w = d_->cat.factor(a);
    Matrix acc = Matrix::identity(d_->field, dim(i));
    for (int k = i; k < j; ++k) acc = standard_action(k) * acc;
    for (std::size_t k = w.word.size(); k-- > 0;) acc = group_action(j, w.word[k]) * acc;
    return acc;
}

Vector TruncatedModule::apply(const Morphism& a, const Vector& v) const {
    int i = categories::source(a), j = categories::target(a);
    if (v.size() != dim(i)) throw DomainError("vector has the wrong length");
    dim(j);
    auto w = d_->cat.factor(a);
    Vector acc = v;
    for (int k = i; k < j; ++k) acc = standard_action(k) * acc;
    for (std::size_t k = w.word.size(); k-- > 0;) acc = group_action(j, w.word[k]) * acc;
    return acc;
}

void require_compatible(const TruncatedModule& a, const TruncatedModule& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("modules live over different fields");
    if (!(a.category() == b.category())) throw DomainError("modules live over different categories");
    if (a.truncation() != b.truncation()) throw TruncationError("modules have different truncations");
}

ModuleHom::ModuleHom(TruncatedModule src, TruncatedModule tgt, std::vector<Matrix> blocks)
    : src_(std::move(src)), tgt_(std::move(tgt)), blocks_(std::move(blocks)) {
    require_compatible(src_, tgt_);
    if (blocks_.size() != src_.dims().size()) throw DomainError("hom needs one block per degree");
    for (int i = 0; i <= src_.truncation(); ++i) {
        const auto& b = blocks_[static_cast<std::size_t>(i)];
        if (b.rows() != tgt_.dim(i) || b.cols() != src_.dim(i)) throw DomainError("hom block has the wrong shape");
    }
}

ModuleHom ModuleHom::zero(const TruncatedModule& src, const TruncatedModule& tgt) {
    std::vector<Matrix> b;
    for (int i = 0; i <= src.truncation(); ++i) b.emplace_back(src.field(), tgt.dim(i), src.dim(i));
    return ModuleHom(src, tgt, b);
}

ModuleHom ModuleHom::identity(const TruncatedModule& v) {
    std::vector<Matrix> b;
    for (int i = 0; i <= v.truncation(); ++i) b.push_back(Matrix::identity(v.field(), v.dim(i)));
    return ModuleHom(v, v, b);
}

std::vector<std::string> ModuleHom::intertwining_failures() const {
    std::vector<std::string> out;
    int n = src_.truncation();
    for (int i = 0; i <= n; ++i) {
        const auto& phi = block(i);
        for (std::size_t k = 0; k < src_.group_actions(i).size(); ++k)
            if (!(phi * src_.group_action(i, k) == tgt_.group_action(i, k) * phi))
                out.push_back("degree " + std::to_string(i) + " generator " + std::to_string(k));
        if (i < n && !(block(i + 1) * src_.standard_action(i) == tgt_.standard_action(i) * phi))
            out.push_back("standard inclusion " + std::to_string(i) + "->" + std::to_string(i + 1));
    }
    return out;
}

bool ModuleHom::is_injective() const {
    for (int i = 0; i <= src_.truncation(); ++i)
        if (linalg::rank(block(i)) != src_.dim(i)) return false;
    return true;
}

bool ModuleHom::is_surjective() const {
    for (int i = 0; i <= src_.truncation(); ++i)
        if (linalg::rank(block(i)) != tgt_.dim(i)) return false;
    return true;
}

bool ModuleHom::is_zero() const {
    for (const auto& b : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

ModuleHom ModuleHom::operator+(const ModuleHom& o) const {
    std::vector<Matrix> b;
    for (std::size_t i = 0; i < blocks_.size(); ++i) b.push_back(blocks_[i] + o.blocks_.at(i));
    return ModuleHom(src_, tgt_, b);
}

ModuleHom ModuleHom::scaled(const Scalar& s) const {
    std::vector<Matrix> b;
    for (const auto& m : blocks_) b.push_back(m.scaled(s));
    return ModuleHom(src_, tgt_, b);
}

ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner) {
    std::vector<Matrix> b;
    for (int i = 0; i <= inner.source().truncation(); ++i) b.push_back(outer.block(i) * inner.block(i));
    return ModuleHom(inner.source(), outer.target(), b);
}

AuditResult audit_functoriality(const TruncatedModule& v, int max_degree) {
    AuditResult r;
    const auto& c = v.category();
    int n = v.truncation();
    for (int i = 0; i <= std::min(n, max_degree); ++i) {
        const auto& g = c.hom(i, i);
        if (g.size() > 400) continue;
        std::vector<Matrix> mats;
        for (const auto& x : g) mats.push_back(v.action(x));
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b) {
                ++r.checks;
                auto ab = c.index_of(c.compose(g[a], g[b]));
                if (!(mats[a] * mats[b] == mats[ab]))
                    r.failures.push_back("automorphisms of degree " + std::to_string(i) + " not multiplicative");
            }
    }
    for (int i = 0; i + 2 <= n && i <= max_degree; ++i) {
        const auto& h1 = c.hom(i, i + 1);
        const auto& h2 = c.hom(i + 1, i + 2);
        std::vector<Matrix> m1, m2;
        for (const auto& x : h1) m1.push_back(v.action(x));
        for (const auto& x : h2) m2.push_back(v.action(x));
        std::vector<std::optional<Matrix>> m12(c.hom(i, i + 2).size());
        for (std::size_t a = 0; a < h1.size(); ++a)
            for (std::size_t b = 0; b < h2.size(); ++b) {
                ++r.checks;
                Matrix prod = m2[b] * m1[a];
                auto idx = c.index_of(c.compose(h2[b], h1[a]));
                if (!m12[idx]) m12[idx] = v.action(c.hom(i, i + 2)[idx]);
                if (!(prod == *m12[idx]))
                    r.failures.push_back("factorizations through degree " + std::to_string(i + 1) + " disagree");
            }
    }
    r.ok = r.failures.empty();
    return r;
}

}  // namespace coind::modcore
