#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coind/modcore/constructions.hpp"
#include "coind/modcore/hom.hpp"
#include "coind/report.hpp"

namespace coind::shiftcoind {

using categories::Category;
using categories::Morphism;
using linalg::Field;
using linalg::Matrix;
using modcore::HomSpace;
using modcore::ModuleHom;
using modcore::TruncatedModule;

// S(V)(n) = V(n+1)
TruncatedModule shift(const TruncatedModule& v);
ModuleHom shift(const ModuleHom& h);

// A summand of S(kCe_n), equivalently a family of Psi labels of Q(kCe_m)(n).
// FI_G: base, or (r, g). VI: (v, 0), or (v, line) with v^t(line) != 0.
struct PsiSlot {
    bool base = true;
    int r = 0;
    int g = 0;
    categories::FpVector v;
    std::optional<categories::Line> line;

    bool operator==(const PsiSlot&) const = default;
};
std::string to_string(const PsiSlot& s, const Category& c);

std::vector<PsiSlot> psi_slots(const Category& c, int n);
// base slot: C(n, n+1); other slots: C(n, n). Phi_slot(gamma) = iota(gamma) o phi_morphism.
Morphism phi_morphism(const Category& c, int n, const PsiSlot& s);

class PsiLayout {
public:
    PsiLayout(const Category& c, int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<PsiSlot>& slots() const { return slots_; }
    std::size_t dim() const { return dim_; }
    std::size_t offset(std::size_t k) const { return offset_[k]; }
    std::size_t block(std::size_t k) const { return offset_[k + 1] - offset_[k]; }
    // beta lives in C(m, beta_degree(k))
    int beta_degree(std::size_t k) const { return slots_[k].base ? n_ : n_ - 1; }
    std::size_t slot_index(const PsiSlot& s) const;
    std::pair<std::size_t, std::size_t> label(std::size_t pos) const;  // (slot, beta index)
    std::string label_name(std::size_t pos, const Category& c) const;

private:
    int m_, n_;
    std::vector<PsiSlot> slots_;
    std::vector<std::size_t> offset_;
    std::size_t dim_ = 0;
    std::map<std::vector<int>, std::size_t> index_;
};

struct PhiIso {
    ModuleHom map;  // direct sum of frees -> shift(free(n))
    std::vector<PsiSlot> slots;
};
PhiIso phi_iso(const Category& c, int n, int trunc, const Field& f);

// closed-form action of a: n -> l on the Psi bases of Q(kCe_m)
Matrix psi_action(const Category& c, int m, const Morphism& a, const Field& f);
// Q(kCe_m) in degrees 0..trunc-1
TruncatedModule coind_free(const Category& c, int m, int trunc, const Field& f);

struct Coinduced {
    TruncatedModule module;
    std::vector<HomSpace> spaces;  // spaces[n] = Hom(S(kCe_n), W)
};
// Q(W)(n) = Hom(S(kCe_n), W) for n up to the truncation of W
Coinduced coind_hom(const TruncatedModule& w);

// the Psi label at position pos of Q(kCe_m)(n), as an actual hom S(kCe_n) -> kCe_m
ModuleHom psi_hom(const Category& c, int m, int n, std::size_t pos, int trunc, const Field& f);
// coind_free(m, trunc+1) -> coind_hom(free(m, trunc)), labels sent to their homs
ModuleHom coind_witness(const TruncatedModule& qfree, const Coinduced& qhom, int m);

Report psi_action_oracle(const Category& c, int m, int n_small);

struct ThetaResult {
    TruncatedModule q;
    modcore::SubModule u;
    ModuleHom theta;    // U -> kCe_{m+1}
    ModuleHom section;  // kCe_m -> Q
    ModuleHom iso;      // kCe_m + kCe_{m+1} -> Q
    Report report;
};
ThetaResult theta(const Category& c, int m, int trunc, const Field& f);

struct PiResult {
    TruncatedModule q;
    ModuleHom pi;       // Q -> kCe_{m+1}
    ModuleHom section;  // kCe_{m+1} -> Q
    Report report;
};
PiResult pi_map(const Category& c, int m, int trunc, const Field& f);

// (u^t; varpi_{a(wp)})^{-1} diag(1, a_wp) = a (v^t; varpi_wp)^{-1} on random admissible tuples
Report key_identity_check(int p, int max_dim, int count, std::uint64_t seed);

}  // namespace coind::shiftcoind
